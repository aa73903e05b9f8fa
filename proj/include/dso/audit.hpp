#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dso/classify.hpp"
#include "dso/graph.hpp"
#include "dso/indices.hpp"
#include "dso/spectrum.hpp"

namespace dso {

/// Whether a registered inequality is expected to survive direct computation.
/// DocumentedFail entries are statements the audit refutes; their failures
/// are findings, not regressions.
enum class Expectation { Holds, DocumentedFail };

inline std::string_view expectation_name(Expectation e) {
  return e == Expectation::Holds ? "holds" : "documented-fail";
}

/// Everything the registry reads from one graph, computed once.
struct GraphFacts {
  const Graph* graph = nullptr;
  GraphClass cls;
  DegreeSummary deg;
  Spectrum spectrum;            // of the diminished Sombor matrix
  Spectrum complement_spectrum; // same, for the complement
  double adjacency_radius = 0;  // rho_1
  double dso = 0;
  double dso_complement = 0;
  double ga = 0;
  double m12 = 0; // M_{1,-2}
  double tr2_edges = 0;  // edge formula
  double tr2_matrix = 0; // sum of lambda_i^2
  double trace_matrix = 0;
  double energy = 0;
  double lambda1 = 0;
  double lambda1_complement = 0;
  int min_positive_degree = 0;

  int n() const { return deg.n; }
  int m() const { return deg.m; }
  double ratio() const { return static_cast<double>(deg.max_degree) / deg.min_degree; } // Delta/delta
};

inline GraphFacts compute_facts(const Graph& g, double solver_tol = 1e-12) {
  GraphFacts f;
  f.graph = &g;
  f.cls = classify(g);
  f.deg = degree_summary(g);
  f.spectrum = dso_spectrum(g, solver_tol);
  const Graph gc = complement(g);
  f.complement_spectrum = dso_spectrum(gc, solver_tol);
  f.adjacency_radius = g.order() > 0 ? adjacency_spectral_radius(g, solver_tol) : 0.0;
  f.dso = dso_index(g);
  f.dso_complement = dso_index(gc);
  f.ga = geometric_arithmetic(g);
  f.m12 = gutman_milovanovic(g, 1.0, -2.0);
  f.tr2_edges = trace_square_edge_formula(g);
  for (double x : f.spectrum.eigenvalues) {
    f.tr2_matrix += x * x;
    f.trace_matrix += x;
  }
  f.energy = energy(f.spectrum);
  f.lambda1 = f.spectrum.eigenvalues.empty() ? 0.0 : f.spectrum.eigenvalues.front();
  f.lambda1_complement =
      f.complement_spectrum.eigenvalues.empty() ? 0.0 : f.complement_spectrum.eigenvalues.front();
  for (int d : g.degrees()) {
    if (d > 0 && (f.min_positive_degree == 0 || d < f.min_positive_degree)) f.min_positive_degree = d;
  }
  return f;
}

enum class CheckKind {
  Inequality, // lhs <= rhs
  Identity,   // lhs == rhs within a check-specific tolerance
};

struct Sides {
  double lhs;
  double rhs;
};

/// One registered statement. Two-sided bounds are split into -LO / -HI
/// entries, each oriented so that the statement reads lhs <= rhs.
struct CheckSpec {
  std::string_view id;
  Expectation expectation;
  CheckKind kind;
  std::string_view statement;
  bool (*applicable)(const GraphFacts&);
  Sides (*sides)(const GraphFacts&);
  /// Stated equality class; nullptr when no equality case is claimed.
  bool (*equality_expected)(const GraphFacts&);
  /// Identity tolerance; nullptr uses the audit tolerance.
  double (*tolerance)(const GraphFacts&, double tol);
};

namespace checks {

inline double root(double x) { return std::sqrt(std::max(0.0, x)); }

inline bool always(const GraphFacts& f) { return f.n() >= 1; }
inline bool connected(const GraphFacts& f) { return f.n() >= 1 && f.cls.is_connected; }
inline bool connected_with_edges(const GraphFacts& f) { return connected(f) && f.m() >= 1; }
inline bool no_isolated(const GraphFacts& f) { return f.n() >= 2 && f.deg.min_degree >= 1; }

inline bool regular(const GraphFacts& f) { return f.cls.is_regular; }
inline bool complete(const GraphFacts& f) { return f.cls.is_complete; }
inline bool edgeless(const GraphFacts& f) { return f.cls.is_edgeless; }
inline bool edgeless_or_matching(const GraphFacts& f) { return f.cls.is_edgeless || f.cls.is_perfect_matching; }
inline bool complete_bipartite_or_edgeless(const GraphFacts& f) {
  return f.cls.is_complete_bipartite || f.cls.is_edgeless;
}
inline bool star(const GraphFacts& f) { return f.cls.is_star; }
inline bool balanced_complete_bipartite(const GraphFacts& f) {
  return f.cls.is_complete_bipartite && f.cls.part_large - f.cls.part_small <= 1;
}
inline bool disjoint_edges(const GraphFacts& f) {
  return f.m() >= 1 && f.deg.max_degree == 1;
}

inline bool equal_moduli(const GraphFacts& f) {
  if (f.spectrum.eigenvalues.empty()) return true;
  double lo = std::abs(f.spectrum.eigenvalues.front());
  double hi = lo;
  for (double x : f.spectrum.eigenvalues) {
    lo = std::min(lo, std::abs(x));
    hi = std::max(hi, std::abs(x));
  }
  return hi - lo <= 1e-9;
}

inline double lambda1_cs_factor(const GraphFacts& f) { return 2.0 * (f.n() - 1) / f.n(); }

inline const std::vector<CheckSpec>& registry() {
  using E = Expectation;
  using K = CheckKind;
  constexpr double s2 = std::numbers::sqrt2;
  static const std::vector<CheckSpec> specs = {
      {"TR0", E::Holds, K::Identity, "sum of eigenvalues = tr(M) = 0", always,
       [](const GraphFacts& f) { return Sides{f.trace_matrix, 0.0}; }, nullptr,
       [](const GraphFacts& f, double) { return 1e-10 * std::max(1.0, std::abs(f.lambda1)); }},
      {"TR2", E::Holds, K::Identity, "sum of squared eigenvalues = 2 sum_E w^2", always,
       [](const GraphFacts& f) { return Sides{f.tr2_matrix, f.tr2_edges}; }, nullptr,
       [](const GraphFacts& f, double) { return 1e-9 * std::max(1.0, f.tr2_edges); }},
      {"DSO-TR-A-LO", E::Holds, K::Inequality, "sqrt((tr M^2 + m(m-1)(delta/Delta)^2)/2) <= DSO",
       connected_with_edges,
       [](const GraphFacts& f) {
         const double r = 1.0 / f.ratio();
         return Sides{root(0.5 * (f.tr2_edges + f.m() * (f.m() - 1.0) * r * r)), f.dso};
       },
       regular, nullptr},
      {"DSO-TR-A-HI", E::Holds, K::Inequality, "DSO <= sqrt((tr M^2 + m(m-1)(Delta/delta)^2)/2)",
       connected_with_edges,
       [](const GraphFacts& f) {
         const double r = f.ratio();
         return Sides{f.dso, root(0.5 * (f.tr2_edges + f.m() * (f.m() - 1.0) * r * r))};
       },
       regular, nullptr},
      {"DSO-TR-B-LO", E::DocumentedFail, K::Inequality, "sqrt(2)(delta/Delta) tr M^2 <= DSO",
       connected_with_edges, [](const GraphFacts& f) { return Sides{s2 / f.ratio() * f.tr2_edges, f.dso}; },
       regular, nullptr},
      {"DSO-TR-B-HI", E::Holds, K::Inequality, "DSO <= sqrt(2)(Delta/delta) tr M^2", connected_with_edges,
       [](const GraphFacts& f) { return Sides{f.dso, s2 * f.ratio() * f.tr2_edges}; }, regular, nullptr},
      {"DIAM", E::Holds, K::Inequality, "diam(G) <= t - 1", connected,
       [](const GraphFacts& f) {
         return Sides{static_cast<double>(*f.cls.diameter), f.spectrum.distinct_count - 1.0};
       },
       nullptr, nullptr},
      {"MODULI", E::Holds, K::Identity, "all |lambda_i| equal <=> edgeless or perfect matching", always,
       [](const GraphFacts& f) {
         return Sides{equal_moduli(f) ? 1.0 : 0.0, edgeless_or_matching(f) ? 1.0 : 0.0};
       },
       nullptr, [](const GraphFacts&, double) { return 0.0; }},
      {"TWO-DIST", E::Holds, K::Identity, "t = 2 <=> complete (connected, n >= 3)",
       [](const GraphFacts& f) { return connected(f) && f.n() >= 3; },
       [](const GraphFacts& f) {
         return Sides{f.spectrum.distinct_count == 2 ? 1.0 : 0.0, f.cls.is_complete ? 1.0 : 0.0};
       },
       nullptr, [](const GraphFacts&, double) { return 0.0; }},
      {"L1-LO", E::Holds, K::Inequality, "2 DSO / n <= lambda_1", connected,
       [](const GraphFacts& f) { return Sides{2.0 * f.dso / f.n(), f.lambda1}; }, regular, nullptr},
      {"L1-HI-STATED", E::Holds, K::Inequality, "lambda_1 <= sqrt(2(n-1)/n (m - M_{1,-2}))", connected,
       [](const GraphFacts& f) { return Sides{f.lambda1, root(lambda1_cs_factor(f) * (f.m() - f.m12))}; },
       complete, nullptr},
      {"L1-HI-CORRECTED", E::Holds, K::Inequality, "lambda_1 <= sqrt(2(n-1)/n (m - 2 M_{1,-2}))", connected,
       [](const GraphFacts& f) {
         return Sides{f.lambda1, root(lambda1_cs_factor(f) * (f.m() - 2.0 * f.m12))};
       },
       complete, nullptr},
      {"L1-GA", E::DocumentedFail, K::Inequality, "lambda_1 <= sqrt(2(n-1)/n (m - GA))", connected,
       [](const GraphFacts& f) { return Sides{f.lambda1, root(lambda1_cs_factor(f) * (f.m() - f.ga))}; },
       edgeless, nullptr},
      {"L1-RHO-LO", E::DocumentedFail, K::Inequality, "sqrt(2)(delta/Delta) rho_1 <= lambda_1", no_isolated,
       [](const GraphFacts& f) { return Sides{s2 / f.ratio() * f.adjacency_radius, f.lambda1}; }, regular,
       nullptr},
      {"L1-RHO-HI", E::Holds, K::Inequality, "lambda_1 <= sqrt(2) Delta/(2 delta) rho_1", no_isolated,
       [](const GraphFacts& f) { return Sides{f.lambda1, s2 * f.ratio() / 2.0 * f.adjacency_radius}; },
       regular, nullptr},
      {"L1-M1-LO", E::DocumentedFail, K::Inequality, "(delta/Delta) sqrt(2 M1 / n) <= lambda_1",
       connected_with_edges,
       [](const GraphFacts& f) {
         return Sides{root(2.0 * static_cast<double>(f.deg.first_zagreb) / f.n()) / f.ratio(), f.lambda1};
       },
       regular, nullptr},
      {"L1-M1-HI", E::Holds, K::Inequality, "lambda_1 <= sqrt(2) Delta^2 / (2 delta)", connected_with_edges,
       [](const GraphFacts& f) {
         const double big = f.deg.max_degree;
         return Sides{f.lambda1, s2 * big * big / (2.0 * f.deg.min_degree)};
       },
       regular, nullptr},
      {"L1-M-LO", E::DocumentedFail, K::Inequality, "2 sqrt(2) m delta / (n Delta) <= lambda_1",
       connected_with_edges,
       [](const GraphFacts& f) { return Sides{2.0 * s2 * f.m() / (f.n() * f.ratio()), f.lambda1}; }, regular,
       nullptr},
      {"L1-M-HI", E::Holds, K::Inequality, "lambda_1 <= (Delta/(2 delta)) sqrt(4m - 2n + 2)",
       connected_with_edges,
       [](const GraphFacts& f) {
         return Sides{f.lambda1, f.ratio() / 2.0 * root(4.0 * f.m() - 2.0 * f.n() + 2.0)};
       },
       complete, nullptr},
      {"NG-LO", E::Holds, K::Inequality, "(sqrt(2)/2)(n-1) <= lambda_1 + lambda_1(complement)", always,
       [](const GraphFacts& f) { return Sides{s2 / 2.0 * (f.n() - 1), f.lambda1 + f.lambda1_complement}; },
       complete, nullptr},
      {"NG-HI", E::Holds, K::Inequality,
       "lambda_1 + lambda_1(complement) <= sqrt(m(n-1)/n)(Delta/delta) + "
       "sqrt((n-1)((n-1)/2 - m/n))(n-1-delta)/(n-1-Delta)",
       [](const GraphFacts& f) { return connected_with_edges(f) && f.deg.max_degree <= f.n() - 2; },
       [](const GraphFacts& f) {
         const double n = f.n();
         const double m = f.m();
         const double rhs = root(m * (n - 1) / n) * f.ratio() +
                            root((n - 1) * ((n - 1) / 2.0 - m / n)) * (n - 1 - f.deg.min_degree) /
                                (n - 1 - f.deg.max_degree);
         return Sides{f.lambda1 + f.lambda1_complement, rhs};
       },
       complete, nullptr},
      {"CDSO", E::Holds, K::Inequality, "(sqrt(2)/4) n (n-1) <= DSO(G) + DSO(complement)", always,
       [](const GraphFacts& f) {
         return Sides{s2 / 4.0 * f.n() * (f.n() - 1), f.dso + f.dso_complement};
       },
       complete, nullptr},
      {"E-L1-LO", E::Holds, K::Inequality, "2 lambda_1 <= E", always,
       [](const GraphFacts& f) { return Sides{2.0 * f.lambda1, f.energy}; }, complete, nullptr},
      {"E-L1-HI", E::Holds, K::Inequality, "E <= lambda_1 + sqrt((n-1)(tr M^2 - lambda_1^2))", always,
       [](const GraphFacts& f) {
         return Sides{f.energy, f.lambda1 + root((f.n() - 1) * (f.tr2_edges - f.lambda1 * f.lambda1))};
       },
       complete, nullptr},
      {"E-TR-LO", E::Holds, K::Inequality, "2 sqrt(tr M^2 / 2) <= E", always,
       [](const GraphFacts& f) { return Sides{2.0 * root(f.tr2_edges / 2.0), f.energy}; },
       complete_bipartite_or_edgeless, nullptr},
      {"E-TR-HI", E::Holds, K::Inequality, "E <= sqrt(n tr M^2)", always,
       [](const GraphFacts& f) { return Sides{f.energy, root(f.n() * f.tr2_edges)}; }, edgeless_or_matching,
       nullptr},
      {"E-M12-LO", E::Holds, K::Inequality, "2 sqrt(m - 2 M_{1,-2}) <= E", always,
       [](const GraphFacts& f) { return Sides{2.0 * root(f.m() - 2.0 * f.m12), f.energy}; },
       complete_bipartite_or_edgeless, nullptr},
      {"E-M12-HI", E::Holds, K::Inequality, "E <= sqrt(2n (m - 2 M_{1,-2}))", always,
       [](const GraphFacts& f) { return Sides{f.energy, root(2.0 * f.n() * (f.m() - 2.0 * f.m12))}; },
       edgeless_or_matching, nullptr},
      {"E-M12-STATED-LO", E::DocumentedFail, K::Inequality, "2 sqrt(m - M_{1,-2}) <= E", always,
       [](const GraphFacts& f) { return Sides{2.0 * root(f.m() - f.m12), f.energy}; },
       complete_bipartite_or_edgeless, nullptr},
      {"E-M12-STATED-HI", E::Holds, K::Inequality, "E <= sqrt(2n (m - M_{1,-2}))", always,
       [](const GraphFacts& f) { return Sides{f.energy, root(2.0 * f.n() * (f.m() - f.m12))}; },
       edgeless_or_matching, nullptr},
      {"E-KPQ-LO", E::Holds, K::Inequality, "(2/n) sqrt((n-1)(n^2-2n+2)) <= E on complete bipartite graphs",
       [](const GraphFacts& f) { return f.cls.is_complete_bipartite; },
       [](const GraphFacts& f) {
         const double n = f.n();
         return Sides{2.0 / n * root((n - 1) * (n * n - 2 * n + 2)), f.energy};
       },
       star, nullptr},
      {"E-KPQ-HI", E::Holds, K::Inequality,
       "E <= (2/n) sqrt(ceil(n/2)^3 floor(n/2) + ceil(n/2) floor(n/2)^3) on complete bipartite graphs",
       [](const GraphFacts& f) { return f.cls.is_complete_bipartite; },
       [](const GraphFacts& f) {
         const double n = f.n();
         const double hi = (f.n() + 1) / 2;
         const double lo = f.n() / 2;
         return Sides{f.energy, 2.0 / n * root(hi * hi * hi * lo + hi * lo * lo * lo)};
       },
       balanced_complete_bipartite, nullptr},
      {"E-ALPHA", E::Holds, K::Inequality,
       "E <= alpha + sqrt((n-1)(m (Delta/delta)^2 - alpha^2)), no isolated vertices, m >= n/2",
       [](const GraphFacts& f) { return no_isolated(f) && 2 * f.m() >= f.n(); },
       [](const GraphFacts& f) {
         const double n = f.n();
         const double m = f.m();
         const double r = f.ratio();
         const double alpha = std::max(s2 * m / n / r, std::sqrt(m / n) * r);
         return Sides{f.energy, alpha + root((n - 1) * (m * r * r - alpha * alpha))};
       },
       nullptr, nullptr},
      {"E-SMALLM", E::Holds, K::Inequality, "E <= sqrt(2) m Delta/delta' (delta' over non-isolated), 2m <= n",
       [](const GraphFacts& f) { return f.m() >= 1 && 2 * f.m() <= f.n(); },
       [](const GraphFacts& f) {
         return Sides{f.energy,
                      s2 * f.m() * static_cast<double>(f.deg.max_degree) / f.min_positive_degree};
       },
       disjoint_edges, nullptr},
  };
  return specs;
}

} // namespace checks

inline const std::vector<CheckSpec>& check_registry() { return checks::registry(); }

inline const CheckSpec* find_check(std::string_view id) {
  for (const auto& c : check_registry())
    if (c.id == id) return &c;
  return nullptr;
}

struct BoundCheckResult {
  std::string check_id;
  Expectation expectation = Expectation::Holds;
  bool applicable = false;
  double lhs = 0;
  double rhs = 0;
  std::optional<double> slack; // rhs - lhs; -|lhs - rhs| for identities
  std::optional<bool> holds;
  double tolerance = 0;
  bool has_equality_claim = false;
  bool equality_expected = false;
  bool equality_observed = false;
};

inline BoundCheckResult evaluate_check(const CheckSpec& spec, const GraphFacts& f, double tol) {
  BoundCheckResult r;
  r.check_id = std::string(spec.id);
  r.expectation = spec.expectation;
  r.has_equality_claim = spec.equality_expected != nullptr || spec.kind == CheckKind::Identity;
  if (!spec.applicable(f)) return r;
  r.applicable = true;
  const Sides s = spec.sides(f);
  r.lhs = s.lhs;
  r.rhs = s.rhs;
  r.tolerance = spec.tolerance ? spec.tolerance(f, tol) : tol;
  if (spec.kind == CheckKind::Identity) {
    r.slack = -std::abs(s.lhs - s.rhs);
    r.holds = *r.slack >= -r.tolerance;
    r.equality_expected = true;
    r.equality_observed = *r.holds;
  } else {
    r.slack = s.rhs - s.lhs;
    r.holds = *r.slack >= -r.tolerance;
    r.equality_expected = spec.equality_expected != nullptr && spec.equality_expected(f);
    r.equality_observed = std::abs(*r.slack) <= r.tolerance;
  }
  return r;
}

/// Evaluates every registered check (or the listed subset) on one graph.
inline std::vector<BoundCheckResult> run_audit(const GraphFacts& f, double tol = 1e-9,
                                               std::span<const CheckSpec* const> selection = {}) {
  std::vector<BoundCheckResult> out;
  if (selection.empty()) {
    for (const auto& spec : check_registry()) out.push_back(evaluate_check(spec, f, tol));
  } else {
    for (const CheckSpec* spec : selection) out.push_back(evaluate_check(*spec, f, tol));
  }
  return out;
}

inline std::vector<BoundCheckResult> run_audit(const Graph& g, double tol = 1e-9) {
  return run_audit(compute_facts(g), tol);
}

} // namespace dso
