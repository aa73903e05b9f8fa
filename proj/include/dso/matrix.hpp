#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "dso/graph.hpp"
#include "dso/indices.hpp"

namespace dso {

/// Dense square matrix, row-major. Symmetry is a convention of the builders
/// below, not enforced by the type.
template <class T>
class SquareMatrix {
public:
  SquareMatrix() = default;
  explicit SquareMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), T{}) {}

  int order() const noexcept { return n_; }
  T& operator()(int i, int j) noexcept { return data_[index(i, j)]; }
  const T& operator()(int i, int j) const noexcept { return data_[index(i, j)]; }

  T trace() const {
    T s{};
    for (int i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
  }

  /// tr(A^2) = sum of a_ij * a_ji.
  T trace_of_square() const {
    T s{};
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) s += (*this)(i, j) * (*this)(j, i);
    return s;
  }

  T frobenius_norm() const {
    T s{};
    for (const T& x : data_) s += x * x;
    return std::sqrt(s);
  }

  bool is_symmetric() const {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  SquareMatrix principal_submatrix_without(int v) const {
    SquareMatrix out(n_ - 1);
    for (int i = 0, r = 0; i < n_; ++i) {
      if (i == v) continue;
      for (int j = 0, c = 0; j < n_; ++j) {
        if (j == v) continue;
        out(r, c++) = (*this)(i, j);
      }
      ++r;
    }
    return out;
  }

private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_ = 0;
  std::vector<T> data_;
};

using DsoMatrix = SquareMatrix<double>;

/// Entry (i,j) is edge_weight(d_i, d_j) on edges, 0 elsewhere. Isolated
/// vertices give zero rows.
inline DsoMatrix build_matrix(const Graph& g) {
  DsoMatrix m(g.order());
  for (auto [i, j] : g.edges()) {
    const double w = edge_weight(g.degree(i), g.degree(j));
    m(i, j) = w;
    m(j, i) = w;
  }
  return m;
}

inline SquareMatrix<double> adjacency_matrix(const Graph& g) {
  SquareMatrix<double> a(g.order());
  for (auto [i, j] : g.edges()) {
    a(i, j) = 1.0;
    a(j, i) = 1.0;
  }
  return a;
}

} // namespace dso
