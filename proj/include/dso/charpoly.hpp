#pragma once

#include <stdexcept>
#include <vector>

#include "dso/polynomial.hpp"
#include "dso/spectrum.hpp"

namespace dso {

using CharPoly = Polynomial<double>;
using ExactCharPoly = Polynomial<Rational>;

/// det(xI - M) from the spectrum via Vieta.
inline CharPoly char_poly_numeric(const Spectrum& s) {
  return from_roots<double>(s.eigenvalues);
}

/// Characteristic polynomial of the path P_n, exact.
///
/// Only squared weights enter: a^2 = 5/9 on the two pendant edges and
/// b^2 = 1/2 on the inner ones. Omega_k is det(x I - B_k) for the inner
/// tridiagonal block, Omega_k = x Omega_{k-1} - 1/2 Omega_{k-2}, and
/// phi(P_n) = x^2 Omega_{n-2} - 2 a^2 x Omega_{n-3} + a^4 Omega_{n-4}.
inline ExactCharPoly path_char_poly(int n) {
  if (n < 2) throw std::invalid_argument("path_char_poly: n must be >= 2");
  const Rational half(1, 2);
  const ExactCharPoly x = ExactCharPoly::monomial(1);
  switch (n) {
  case 2: return ExactCharPoly({-half, 0, 1});
  case 3: return ExactCharPoly({0, Rational(-10, 9), 0, 1});
  case 4: return ExactCharPoly({Rational(25, 81), 0, Rational(-29, 18), 0, 1});
  default: break;
  }
  // omega[0] is the empty determinant 1, so the k = 3 step reproduces omega[2].
  std::vector<ExactCharPoly> omega;
  omega.push_back(ExactCharPoly({1}));
  omega.push_back(x);
  omega.push_back(ExactCharPoly({-half, 0, 1}));
  for (int k = 3; k <= n - 2; ++k) {
    omega.push_back(x * omega[static_cast<std::size_t>(k - 1)] - half * omega[static_cast<std::size_t>(k - 2)]);
  }
  const auto at = [&](int k) -> const ExactCharPoly& { return omega[static_cast<std::size_t>(k)]; };
  return at(n - 2).shifted(2) - Rational(10, 9) * at(n - 3).shifted(1) + Rational(25, 81) * at(n - 4);
}

inline CharPoly to_floating(const ExactCharPoly& p) {
  std::vector<double> c;
  for (const auto& r : p.coefficients()) c.push_back(static_cast<double>(r));
  return CharPoly(std::move(c));
}

} // namespace dso
