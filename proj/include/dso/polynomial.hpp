#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dso {

using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial, coefficients ascending (c[0] + c[1] x + ...).
template <class T>
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coefficients) : c_(std::move(coefficients)) {}

  static Polynomial monomial(std::size_t degree, T coeff = T(1)) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }

  std::size_t degree() const noexcept { return c_.empty() ? 0 : c_.size() - 1; }
  const std::vector<T>& coefficients() const noexcept { return c_; }
  T coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return Polynomial();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const T& s, const Polynomial& p) {
    std::vector<T> c = p.c_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }

  /// Multiply by x^k.
  Polynomial shifted(std::size_t k) const {
    std::vector<T> c(k, T(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    for (std::size_t k = 0; k < n; ++k)
      if (a.coefficient(k) != b.coefficient(k)) return false;
    return true;
  }

private:
  std::vector<T> c_;
};

/// prod (x - r_k) expanded; elementary symmetric functions of the roots.
template <class T>
Polynomial<T> from_roots(std::span<const T> roots) {
  std::vector<T> c{T(1)};
  for (const T& r : roots) {
    c.push_back(T(0));
    for (std::size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
    c[0] = -r * c[0];
  }
  return Polynomial<T>(std::move(c));
}

} // namespace dso
