#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "dso/audit.hpp"
#include "dso/charpoly.hpp"
#include "dso/conjecture.hpp"
#include "dso/corpus_audit.hpp"
#include "dso/spectrum.hpp"

namespace dso {

/// Fixed "%.10g" rendering so golden files are byte-stable. Negative zero
/// prints as 0; non-finite values print as JSON null.
inline std::string format_real(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

inline std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(ch);
    } else if (c < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04x", c);
      out += buf;
    } else {
      out.push_back(ch);
    }
  }
  out.push_back('"');
  return out;
}

/// Minimal ordered JSON object builder; fields appear in insertion order.
class JsonObject {
public:
  JsonObject& raw(std::string_view key, std::string_view value) {
    if (!body_.empty()) body_ += ",";
    body_ += json_string(key) + ":" + std::string(value);
    return *this;
  }
  JsonObject& str(std::string_view key, std::string_view value) { return raw(key, json_string(value)); }
  JsonObject& real(std::string_view key, double value) { return raw(key, format_real(value)); }
  JsonObject& integer(std::string_view key, long long value) { return raw(key, std::to_string(value)); }
  JsonObject& boolean(std::string_view key, bool value) { return raw(key, value ? "true" : "false"); }
  JsonObject& null(std::string_view key) { return raw(key, "null"); }

  std::string dump() const { return "{" + body_ + "}"; }

private:
  std::string body_;
};

inline std::string json_real_array(const std::vector<double>& xs) {
  std::string out = "[";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ",";
    out += format_real(xs[k]);
  }
  return out + "]";
}

template <class T>
std::string json_array(const std::vector<T>& items) {
  std::string out = "[";
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += ",";
    out += items[k];
  }
  return out + "]";
}

inline std::string json_rational(const Rational& r) {
  return JsonObject()
      .raw("num", boost::multiprecision::numerator(r).str())
      .raw("den", boost::multiprecision::denominator(r).str())
      .dump();
}

inline std::string rational_text(const Rational& r) {
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return boost::multiprecision::numerator(r).str();
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

inline std::string spectrum_json(const Spectrum& s, std::string_view graph6 = {}) {
  JsonObject o;
  if (!graph6.empty()) o.str("graph6", graph6);
  o.raw("eigenvalues", json_real_array(s.eigenvalues));
  o.integer("t", s.distinct_count);
  o.real("energy", energy(s));
  if (!s.eigenvalues.empty()) o.real("spectral_radius", spectral_radius(s));
  o.real("cluster_tol", s.cluster_tol);
  return o.dump();
}

inline std::string charpoly_json(const CharPoly& p, std::string_view graph6 = {}) {
  JsonObject o;
  if (!graph6.empty()) o.str("graph6", graph6);
  o.str("representation", "floating");
  o.raw("coefficients", json_real_array(p.coefficients()));
  return o.dump();
}

inline std::string charpoly_json(const ExactCharPoly& p, std::string_view graph6 = {}) {
  JsonObject o;
  if (!graph6.empty()) o.str("graph6", graph6);
  o.str("representation", "exact");
  std::vector<std::string> items;
  for (const auto& c : p.coefficients()) items.push_back(json_rational(c));
  o.raw("coefficients", json_array(items));
  return o.dump();
}

inline std::string check_result_json(const BoundCheckResult& r) {
  JsonObject o;
  o.str("check_id", r.check_id);
  o.str("expectation", expectation_name(r.expectation));
  o.boolean("applicable", r.applicable);
  if (r.applicable) {
    o.real("lhs", r.lhs).real("rhs", r.rhs).real("slack", *r.slack).boolean("holds", *r.holds);
    o.boolean("equality_expected", r.equality_expected).boolean("equality_observed", r.equality_observed);
  }
  return o.dump();
}

inline std::string aggregate_json(const CheckAggregate& a) {
  JsonObject o;
  o.str("check_id", a.check_id);
  o.str("expectation", expectation_name(a.expectation));
  o.integer("applicable", a.applicable).integer("holds", a.holds).integer("fails", a.fails);
  if (a.worst_slack) {
    o.real("worst_slack", *a.worst_slack).str("witness_graph6", a.worst.graph6);
  } else {
    o.null("worst_slack").null("witness_graph6");
  }
  o.str("equality_claim", verdict_name(a.equality_verdict()));
  o.integer("equality_expected", a.equality_expected).integer("equality_observed", a.equality_observed);
  o.integer("expected_not_observed", a.expected_not_observed);
  o.integer("observed_not_expected", a.observed_not_expected);
  if (!a.first_equality.empty()) o.str("equality_witness_graph6", a.first_equality.graph6);
  if (!a.first_expected_not_observed.empty()) {
    o.str("expected_not_observed_graph6", a.first_expected_not_observed.graph6);
  }
  if (!a.first_observed_not_expected.empty()) {
    o.str("observed_not_expected_graph6", a.first_observed_not_expected.graph6);
  }
  return o.dump();
}

/// Report as a JSON array, one object per check, one check per line.
inline std::string audit_report_json(const AuditReport& report) {
  std::string out = "[\n";
  for (std::size_t k = 0; k < report.checks.size(); ++k) {
    out += aggregate_json(report.checks[k]);
    out += k + 1 < report.checks.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

inline std::string audit_csv_header() {
  return "graph6,check_id,expectation,applicable,lhs,rhs,slack,holds,equality_expected,equality_observed\n";
}

inline std::string audit_csv_row(std::string_view graph6, const BoundCheckResult& r) {
  // graph6 bytes lie in [63, 126], so the field never needs quoting.
  std::string row = std::string(graph6) + "," + r.check_id + "," + std::string(expectation_name(r.expectation)) + ",";
  if (!r.applicable) return row + "false,,,,,,\n";
  row += "true," + format_real(r.lhs) + "," + format_real(r.rhs) + "," + format_real(*r.slack) + ",";
  row += std::string(*r.holds ? "true" : "false") + "," + (r.equality_expected ? "true" : "false") + "," +
         (r.equality_observed ? "true" : "false") + "\n";
  return row;
}

inline std::string candidate_json(const EnergyCandidate& c) {
  return JsonObject()
      .str("graph6", c.graph6)
      .integer("n", c.n)
      .integer("m", c.m)
      .real("energy", c.energy)
      .real("gap", c.gap)
      .integer("nearest_integer", c.nearest_integer)
      .boolean("connected", c.connected)
      .dump();
}

} // namespace dso
