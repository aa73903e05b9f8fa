#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dso/graph.hpp"

namespace dso {

/// Weight of an edge whose endpoints have degrees du and dv:
/// sqrt(du^2 + dv^2) / (du + dv). Lies in [sqrt(2)/2, 1).
inline double edge_weight(int du, int dv) {
  if (du < 1 || dv < 1) {
    throw std::domain_error("edge_weight: endpoint degrees must be >= 1 (got " + std::to_string(du) +
                            ", " + std::to_string(dv) + ")");
  }
  const double a = du;
  const double b = dv;
  return std::sqrt(a * a + b * b) / (a + b);
}

/// Squared weight as an exact ratio (du^2 + dv^2) / (du + dv)^2.
inline double edge_weight_squared(int du, int dv) {
  const double a = du;
  const double b = dv;
  return (a * a + b * b) / ((a + b) * (a + b));
}

template <class F>
double sum_over_edges(const Graph& g, F&& term) {
  double s = 0.0;
  for (auto [i, j] : g.edges()) s += term(g.degree(i), g.degree(j));
  return s;
}

inline double dso_index(const Graph& g) {
  return sum_over_edges(g, [](int a, int b) { return edge_weight(a, b); });
}

inline double geometric_arithmetic(const Graph& g) {
  return sum_over_edges(g, [](int a, int b) {
    return 2.0 * std::sqrt(static_cast<double>(a) * b) / (a + b);
  });
}

inline double first_zagreb(const Graph& g) {
  double s = 0.0;
  for (int d : g.degrees()) s += static_cast<double>(d) * d;
  return s;
}

/// M_{alpha,beta}: sum over edges of (du dv)^alpha (du + dv)^beta.
inline double gutman_milovanovic(const Graph& g, double alpha, double beta) {
  return sum_over_edges(g, [&](int a, int b) {
    return std::pow(static_cast<double>(a) * b, alpha) * std::pow(static_cast<double>(a + b), beta);
  });
}

/// tr(M^2) from degrees alone: 2 * sum over edges of weight^2.
inline double trace_square_edge_formula(const Graph& g) {
  return 2.0 * sum_over_edges(g, edge_weight_squared);
}

struct TraceSquareIdentity {
  double lhs = 0.0;           // sum over edges of (du^2+dv^2)/(du+dv)^2
  double rhs_corrected = 0.0; // m - 2 M_{1,-2}
  double rhs_as_stated = 0.0; // m - M_{1,-2}
};

/// Both forms of the half-trace identity. Only the corrected form equals lhs;
/// (du^2+dv^2)/(du+dv)^2 = 1 - 2 du dv/(du+dv)^2 per edge.
inline TraceSquareIdentity trace_square_identity(const Graph& g) {
  const double m = g.size();
  const double m12 = gutman_milovanovic(g, 1.0, -2.0);
  return {sum_over_edges(g, edge_weight_squared), m - 2.0 * m12, m - m12};
}

enum class IndexId { Dso, GeometricArithmetic, FirstZagreb, GutmanMilovanovic, TraceSquare };

inline std::string_view index_name(IndexId id) {
  switch (id) {
  case IndexId::Dso: return "DSO";
  case IndexId::GeometricArithmetic: return "GA";
  case IndexId::FirstZagreb: return "M1";
  case IndexId::GutmanMilovanovic: return "M_alpha_beta";
  case IndexId::TraceSquare: return "trace_M2";
  }
  return "?";
}

struct IndexValue {
  IndexId id;
  double value;
  int n;
  int m;
};

inline IndexValue compute_index(const Graph& g, IndexId id, double alpha = 1.0, double beta = -2.0) {
  double v = 0.0;
  switch (id) {
  case IndexId::Dso: v = dso_index(g); break;
  case IndexId::GeometricArithmetic: v = geometric_arithmetic(g); break;
  case IndexId::FirstZagreb: v = first_zagreb(g); break;
  case IndexId::GutmanMilovanovic: v = gutman_milovanovic(g, alpha, beta); break;
  case IndexId::TraceSquare: v = trace_square_edge_formula(g); break;
  }
  return {id, v, g.order(), g.size()};
}

} // namespace dso
