// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dso/dso.hpp"

using namespace dso;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kHalf = kSqrt2 / 2;

struct Outcome {
  bool pass = true;
  std::string detail;
  bool documented = false; // failure analysed and recorded as unattainable
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> body;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

bool near_all(const std::vector<double>& got, std::vector<double> want, double tol, double& worst) {
  std::sort(want.begin(), want.end(), std::greater<>());
  if (got.size() != want.size()) return false;
  for (std::size_t k = 0; k < got.size(); ++k) worst = std::max(worst, std::abs(got[k] - want[k]));
  return worst <= tol;
}

// Closed forms written out independently of the library.
std::vector<double> complete_form(int n) {
  std::vector<double> v(static_cast<std::size_t>(n), -kHalf);
  v[0] = kHalf * (n - 1);
  return v;
}
std::vector<double> cycle_form(int n) {
  std::vector<double> v;
  for (int j = 0; j < n; ++j) v.push_back(kSqrt2 * std::cos(2 * std::numbers::pi * j / n));
  return v;
}
std::vector<double> bipartite_form(int p, int q) {
  const double r = std::sqrt(static_cast<double>(p) * q) * std::hypot(p, q) / (p + q);
  std::vector<double> v(static_cast<std::size_t>(p + q), 0.0);
  v[0] = r;
  v[1] = -r;
  return v;
}

Outcome closed_form_spectra() {
  Outcome o;
  double worst = 0;
  int cases = 0;
  auto check = [&](const Graph& g, const std::vector<double>& want, const Spectrum& lib) {
    ++cases;
    const auto got = dso_spectrum(g).eigenvalues;
    double w = 0;
    if (!near_all(got, want, 1e-9, w) || !near_all(lib.eigenvalues, want, 1e-12, w)) o.pass = false;
    worst = std::max(worst, w);
  };
  for (int n = 1; n <= 12; ++n) check(generate_family(FamilyKind::Complete, {n}), complete_form(n), spec_complete(n));
  for (int n = 3; n <= 12; ++n) check(generate_family(FamilyKind::Cycle, {n}), cycle_form(n), spec_cycle(n));
  for (int n = 2; n <= 12; ++n) check(generate_family(FamilyKind::Star, {n}), bipartite_form(1, n - 1), spec_star(n));
  for (int p = 1; p <= 11; ++p)
    for (int q = 1; p + q <= 12; ++q)
      check(generate_family(FamilyKind::CompleteBipartite, {0, p, q}), bipartite_form(p, q),
            spec_complete_bipartite(p, q));
  // Worked examples.
  double w = 0;
  if (!near_all(dso_spectrum(generate_family(FamilyKind::Complete, {4})).eigenvalues,
                {3 * kHalf, -kHalf, -kHalf, -kHalf}, 1e-9, w))
    o.pass = false;
  const double r = std::sqrt(78.0) / 5;
  if (!near_all(dso_spectrum(generate_family(FamilyKind::CompleteBipartite, {0, 2, 3})).eigenvalues,
                {r, 0, 0, 0, -r}, 1e-9, w))
    o.pass = false;
  o.detail = std::to_string(cases) + " graphs, max |error| " + fmt("%.2e", std::max(worst, w));
  return o;
}

Outcome regular_scaling() {
  Outcome o;
  int count = 0;
  double worst = 0;
  LabeledGraphsUpTo src(1, 6);
  while (auto g = src.next()) {
    const auto c = classify(*g);
    if (!c.is_connected || !c.is_regular) continue;
    ++count;
    std::vector<double> want;
    for (double x : adjacency_spectrum(*g).eigenvalues) want.push_back(kHalf * x);
    double w = 0;
    if (!near_all(dso_spectrum(*g).eigenvalues, want, 1e-9, w)) o.pass = false;
    worst = std::max(worst, w);
  }
  o.detail = std::to_string(count) + " connected regular labelled graphs, max |error| " + fmt("%.2e", worst);
  return o;
}

// det(xI - T) of the weighted path by cofactor expansion, exact.
std::vector<Rational> tridiagonal_det(int n) {
  auto deg = [n](int v) { return v == 0 || v == n - 1 ? 1 : 2; };
  std::vector<Rational> a{1};
  std::vector<Rational> b{0, 1};
  for (int k = 1; k < n; ++k) {
    const int du = deg(k - 1);
    const int dv = deg(k);
    const Rational w2(du * du + dv * dv, (du + dv) * (du + dv));
    std::vector<Rational> c(b.size() + 1, Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) c[i + 1] += b[i];
    for (std::size_t i = 0; i < a.size(); ++i) c[i] -= w2 * a[i];
    a = b;
    b = c;
  }
  return b;
}

Outcome path_charpoly() {
  Outcome o;
  const Rational half(1, 2);
  const bool listed = path_char_poly(2) == ExactCharPoly({-half, 0, 1}) &&
                      path_char_poly(3) == ExactCharPoly({0, Rational(-10, 9), 0, 1}) &&
                      path_char_poly(4) == ExactCharPoly({Rational(25, 81), 0, Rational(-29, 18), 0, 1});
  const ExactCharPoly p5({0, Rational(70, 81), 0, Rational(-19, 9), 0, 1});
  const bool five = path_char_poly(5) == p5 && ExactCharPoly(tridiagonal_det(5)) == p5;
  double worst = 0;
  for (int n = 2; n <= 12; ++n) {
    const auto exact = to_floating(path_char_poly(n));
    const auto vieta = char_poly_numeric(dso_spectrum(generate_family(FamilyKind::Path, {n})));
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
      worst = std::max(worst, std::abs(exact.coefficient(k) - vieta.coefficient(k)));
    }
    if (!(ExactCharPoly(tridiagonal_det(n)) == path_char_poly(n))) o.pass = false;
  }
  o.pass = o.pass && listed && five && worst <= 1e-8;
  o.detail = std::string("listed P2..P4 ") + (listed ? "exact" : "MISMATCH") + ", P5 " + (five ? "exact" : "MISMATCH") +
             ", Vieta max |diff| " + fmt("%.2e", worst);
  return o;
}

Outcome trace_identities(const AuditReport& six) {
  Outcome o;
  const auto* tr0 = six.find("TR0");
  const auto* tr2 = six.find("TR2");
  o.pass = tr0->applicable == 32768 && tr2->applicable == 32768 && tr0->fails == 0 && tr2->fails == 0;
  o.detail = "32768 graphs; worst |TR0| " + fmt("%.2e", -*tr0->worst_slack) + ", worst |TR2| " +
             fmt("%.2e", -*tr2->worst_slack);
  return o;
}

AuditReport audit_order_six() {
  LabeledGraphs src(6);
  CorpusAuditOptions opt;
  opt.selection = {find_check("TR0"), find_check("TR2")};
  return run_corpus_audit(src, opt);
}

Outcome characterizations(const AuditReport& all) {
  Outcome o;
  std::string d;
  for (const char* id : {"MODULI", "TWO-DIST", "DIAM"}) {
    const auto* a = all.find(id);
    if (a->fails != 0) o.pass = false;
    d += std::string(d.empty() ? "" : ", ") + id + " " + std::to_string(a->fails) + "/" +
         std::to_string(a->applicable);
  }
  o.detail = "counterexamples: " + d;
  return o;
}

const char* const kExpectedToHold[] = {
    "L1-LO",   "L1-HI-CORRECTED", "DSO-TR-A-LO", "DSO-TR-A-HI", "DSO-TR-B-HI", "L1-RHO-HI", "NG-LO",
    "NG-HI",   "CDSO",            "E-L1-LO",     "E-L1-HI",     "E-TR-LO",     "E-TR-HI",   "E-M12-LO",
    "E-M12-HI", "E-KPQ-LO",       "E-KPQ-HI",    "E-ALPHA",     "E-SMALLM",    "L1-M1-HI",  "L1-M-HI"};

Outcome bounds_hold(const AuditReport& all) {
  Outcome o;
  long long graphs = 0;
  std::string failing;
  for (const char* id : kExpectedToHold) {
    const auto* a = all.find(id);
    graphs += a->applicable;
    if (a->fails != 0) {
      o.pass = false;
      failing += std::string(" ") + id + "(" + std::to_string(a->fails) + ", witness " + a->worst.graph6 + ")";
    }
  }
  o.detail = std::to_string(std::size(kExpectedToHold)) + " checks, " + std::to_string(graphs) +
             " applicable evaluations, failures:" + (failing.empty() ? " none" : failing);
  return o;
}

// Equality classes that direct computation shows to be stated incorrectly:
// every regular graph attains NG-LO and CDSO, every graph with one positive
// eigenvalue attains E-L1-LO, and no regular graph attains DSO-TR-B-HI.
const std::map<std::string, std::string> kKnownEqualityDefects = {
    {"CDSO", "one-way"}, {"DSO-TR-B-HI", "refuted"}, {"E-L1-LO", "one-way"}, {"NG-LO", "one-way"}};

Outcome equality_classes(const AuditReport& all) {
  Outcome o;
  std::map<std::string, std::string> off;
  std::string ok;
  for (const char* id : kExpectedToHold) {
    const auto* a = all.find(id);
    const auto v = a->equality_verdict();
    if (v == EqualityVerdict::None) continue;
    const std::string name(verdict_name(v));
    if (v == EqualityVerdict::Exact || v == EqualityVerdict::ExactOnConnected || v == EqualityVerdict::Vacuous) {
      continue;
    }
    off[id] = name;
  }
  // Spot checks named in the criterion.
  for (const char* id : {"L1-HI-CORRECTED", "E-L1-HI", "E-TR-LO", "DSO-TR-A-LO", "DSO-TR-A-HI"}) {
    const auto v = all.find(id)->equality_verdict();
    ok += std::string(ok.empty() ? "" : ", ") + id + " " + std::string(verdict_name(v));
  }
  o.pass = off.empty();
  std::string bad;
  for (const auto& [id, v] : off) {
    const auto* a = all.find(id);
    bad += std::string(bad.empty() ? " " : ", ") + id + " " + v + " (";
    bad += v == "refuted" ? "misses " + a->first_expected_not_observed.graph6
                          : "also " + a->first_observed_not_expected_connected.graph6;
    bad += ")";
  }
  o.detail = ok + (bad.empty() ? "" : ";" + bad);
  o.documented = !o.pass && off == kKnownEqualityDefects;
  return o;
}

Outcome documented_failures() {
  // 3-regular on 4 vertices: every weight sqrt(2)/2.
  const int n = 4;
  const int k = 3;
  const int m = 6;
  const double l1 = kHalf * k;
  const double rho = k;
  const double dso = m * kHalf;
  const double tr2 = m;                         // 2 * m * 1/2
  const double m12 = m * (k * k) / (4.0 * k * k); // (k^2) / (2k)^2 per edge
  const double ga = m;
  const double cs = 2.0 * (n - 1) / n;

  const GraphFacts f = compute_facts(generate_family(FamilyKind::Complete, {n}));
  auto get = [&](const char* id) { return evaluate_check(*find_check(id), f, 1e-9); };
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-6; };

  Outcome o;
  std::ostringstream d;
  const auto rho_lo = get("L1-RHO-LO");
  o.pass &= !*rho_lo.holds && close(rho_lo.lhs, kSqrt2 * rho) && close(rho_lo.rhs, l1);
  d << "L1-RHO-LO " << fmt("%.4f", rho_lo.lhs) << ">" << fmt("%.4f", rho_lo.rhs);
  const auto ga_r = get("L1-GA");
  o.pass &= !*ga_r.holds && close(ga_r.rhs, std::sqrt(std::max(0.0, cs * (m - ga)))) && close(ga_r.rhs, 0.0);
  d << ", L1-GA rhs " << fmt("%.4f", ga_r.rhs);
  const auto trb = get("DSO-TR-B-LO");
  o.pass &= !*trb.holds && close(trb.lhs, kSqrt2 * tr2) && close(trb.rhs, dso);
  d << ", DSO-TR-B-LO " << fmt("%.4f", trb.lhs) << ">" << fmt("%.4f", trb.rhs);
  const auto mlo = get("L1-M-LO");
  o.pass &= !*mlo.holds && close(mlo.lhs, 2 * kSqrt2 * m / n) && close(mlo.rhs, l1);
  d << ", L1-M-LO " << fmt("%.4f", mlo.lhs) << ">" << fmt("%.4f", mlo.rhs);
  const auto stated = get("L1-HI-STATED");
  o.pass &= *stated.holds && stated.equality_expected && !stated.equality_observed &&
            close(stated.rhs, std::sqrt(cs * (m - m12))) && close(stated.lhs, l1);
  d << ", L1-HI-STATED rhs " << fmt("%.4f", stated.rhs) << " vs " << fmt("%.4f", stated.lhs);
  const auto corrected = get("L1-HI-CORRECTED");
  o.pass &= corrected.equality_observed && close(corrected.rhs, std::sqrt(cs * (m - 2 * m12)));
  o.detail = d.str();
  return o;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

Outcome conjecture_scan() {
  auto scan = [](unsigned jobs) {
    LabeledGraphsUpTo src(1, 6);
    SearchOptions opt;
    opt.epsilon = 1e-6;
    opt.top_k = 3;
    opt.jobs = jobs;
    return search(src, opt);
  };
  const auto a = scan(1);
  const auto b = scan(4);
  std::vector<std::string> got;
  for (const auto& c : a.candidates) got.push_back(candidate_json(c));
  const auto golden = read_lines(std::string(DSO_TEST_GOLDEN) + "/conjecture_candidates_n6.jsonl");
  const auto top_golden = read_lines(std::string(DSO_TEST_GOLDEN) + "/conjecture_top3_n6.jsonl");

  Outcome o;
  o.pass = got == golden && a.candidates.empty() && a.nearest.size() == 3 && b.nearest.size() == 3 &&
           top_golden.size() == 3;
  double drift = 0;
  for (std::size_t k = 0; o.pass && k < 3; ++k) {
    const double g = a.nearest[k].gap;
    drift = std::max(drift, std::abs(g - b.nearest[k].gap));
    const auto at = top_golden[k].find("\"gap\":");
    const double frozen = std::stod(top_golden[k].substr(at + 6));
    drift = std::max(drift, std::abs(g - frozen));
  }
  o.pass = o.pass && drift <= 1e-10;
  o.detail = std::to_string(a.evaluated) + " graphs with m >= 1, " + std::to_string(a.candidates.size()) +
             " candidates (golden " + std::to_string(golden.size()) + "), top-3 gaps";
  for (const auto& c : a.nearest) o.detail += " " + fmt("%.10g", c.gap);
  o.detail += ", drift " + fmt("%.1e", drift);
  return o;
}

Outcome graph6_round_trip() {
  Outcome o;
  long long labelled = 0;
  for (int n = 1; n <= 5; ++n) {
    LabeledGraphs src(n);
    while (auto g = src.next()) {
      ++labelled;
      const auto s = write_graph6(*g);
      const Graph back = parse_graph6(s);
      if (!(back == *g) || write_graph6(back) != s) o.pass = false;
    }
  }
  const auto corpus = read_lines(std::string(DSO_TEST_DATA) + "/corpus1000.g6");
  long long mismatched = 0;
  int max_n = 0;
  for (const auto& line : corpus) {
    const Graph g = parse_graph6(line);
    max_n = std::max(max_n, g.order());
    if (write_graph6(g) != line) ++mismatched;
  }
  o.pass = o.pass && corpus.size() == 1000 && mismatched == 0;
  o.detail = std::to_string(labelled) + " labelled graphs, " + std::to_string(corpus.size()) +
             " corpus records (max n " + std::to_string(max_n) + "), " + std::to_string(mismatched) + " mismatches";
  return o;
}

} // namespace

int main() {
  AuditReport six;
  AuditReport all;
  const std::vector<Criterion> criteria = {
      {"1", "closed-form spectra", 1.0, closed_form_spectra},
      {"2", "regular scaling theorem", 30.0, regular_scaling},
      {"3", "path characteristic polynomial", 1.0, path_charpoly},
      {"4", "trace identities, n = 6", 60.0,
       [&] {
         six = audit_order_six();
         return trace_identities(six);
       }},
      {"5", "characterization theorems, n <= 6", 300.0,
       [&] {
         LabeledGraphsUpTo src(1, 6);
         all = run_corpus_audit(src);
         return characterizations(all);
       }},
      {"6a", "bounds expected to hold, n <= 6", 300.0, [&] { return bounds_hold(all); }},
      {"6b", "equality on stated classes, n <= 6", 300.0, [&] { return equality_classes(all); }},
      {"7", "documented-fail findings on K4", 1.0, documented_failures},
      {"8", "integer-energy scan, n <= 6", 120.0, conjecture_scan},
      {"9", "graph6 round trip", 10.0, graph6_round_trip},
  };

  int undocumented_failures = 0;
  int passes = 0;
  int documented = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_seconds) {
      o.pass = false;
      o.documented = false;
      o.detail += " [over time limit " + fmt("%.0f", c.limit_seconds) + " s]";
    }
    std::printf("%s criterion %s: %s (%.3f s) %s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                o.detail.c_str(), !o.pass && o.documented ? " [stated classes disproved; see README]" : "");
    if (o.pass) {
      ++passes;
    } else if (o.documented) {
      ++documented;
    } else {
      ++undocumented_failures;
    }
  }
  std::printf("summary: %d PASS, %d FAIL (%d analysed as unattainable, %d unexpected)\n", passes,
              documented + undocumented_failures, documented, undocumented_failures);
  return undocumented_failures == 0 ? 0 : 1;
}
