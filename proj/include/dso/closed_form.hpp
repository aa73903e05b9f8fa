#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "dso/classify.hpp"
#include "dso/graph.hpp"
#include "dso/spectrum.hpp"

namespace dso {

class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kHalfSqrt2 = std::numbers::sqrt2 / 2.0;

/// Connected k-regular graphs: every weight is sqrt(2)/2, so the matrix is a
/// scaled adjacency matrix.
inline Spectrum spec_regular(const Graph& g, const Spectrum& adjacency) {
  const auto c = classify(g);
  if (!c.is_regular || !c.is_connected) {
    throw PreconditionError("spec_regular: graph must be connected and regular");
  }
  std::vector<double> v;
  v.reserve(adjacency.eigenvalues.size());
  for (double x : adjacency.eigenvalues) v.push_back(kHalfSqrt2 * x);
  return make_spectrum(std::move(v));
}

inline Spectrum spec_complete(int n) {
  if (n < 1) throw PreconditionError("spec_complete: n must be >= 1");
  std::vector<double> v(static_cast<std::size_t>(n), -kHalfSqrt2);
  v[0] = kHalfSqrt2 * (n - 1);
  return make_spectrum(std::move(v));
}

inline Spectrum spec_cycle(int n) {
  if (n < 3) throw PreconditionError("spec_cycle: n must be >= 3");
  std::vector<double> v;
  for (int j = 0; j < n; ++j) v.push_back(std::numbers::sqrt2 * std::cos(2.0 * std::numbers::pi * j / n));
  return make_spectrum(std::move(v));
}

inline Spectrum spec_complete_bipartite(int p, int q) {
  if (p < 1 || q < 1) throw PreconditionError("spec_complete_bipartite: p and q must be >= 1");
  const double pp = p;
  const double qq = q;
  const double r = std::sqrt(pp * qq) * std::sqrt(pp * pp + qq * qq) / (pp + qq);
  std::vector<double> v(static_cast<std::size_t>(p + q), 0.0);
  v[0] = r;
  v[1] = -r;
  return make_spectrum(std::move(v));
}

inline Spectrum spec_star(int n) {
  if (n < 2) throw PreconditionError("spec_star: n must be >= 2");
  const double nn = n;
  const double r = std::sqrt(nn - 1.0) * std::sqrt(nn * nn - 2.0 * nn + 2.0) / nn;
  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  v[0] = r;
  v[1] = -r;
  return make_spectrum(std::move(v));
}

} // namespace dso
