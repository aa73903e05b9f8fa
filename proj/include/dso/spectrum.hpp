#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "dso/graph.hpp"
#include "dso/matrix.hpp"

namespace dso {

class SolverError : public std::runtime_error {
public:
  SolverError(const std::string& what, double residual)
      : std::runtime_error(what + " (relative off-diagonal residual " + format_residual(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

private:
  static std::string format_residual(double r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", r);
    return buf;
  }

  double residual_;
};

struct EigenOptions {
  /// Stop once ||offdiag(A)||_F <= tol * ||A||_F.
  double tol = 1e-12;
  int max_sweeps = 100;
};

struct EigenDecomposition {
  std::vector<double> values;     // descending
  SquareMatrix<double> vectors;   // column k belongs to values[k]
  int sweeps = 0;
  double residual = 0.0;          // final relative off-diagonal norm
};

/// Cyclic Jacobi rotations on a dense symmetric matrix.
inline EigenDecomposition jacobi_eigen(SquareMatrix<double> a, const EigenOptions& opt = {}) {
  const int n = a.order();
  SquareMatrix<double> v(n);
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;

  const double norm = a.frobenius_norm();
  auto off_norm = [&] {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        if (p != q) s += a(p, q) * a(p, q);
    return std::sqrt(s);
  };

  int sweep = 0;
  double off = off_norm();
  while (off > opt.tol * norm) {
    if (sweep == opt.max_sweeps) {
      throw SolverError("Jacobi eigensolver did not converge in " + std::to_string(opt.max_sweeps) + " sweeps",
                        norm > 0 ? off / norm : off);
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    ++sweep;
    off = off_norm();
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) > a(y, y); });

  EigenDecomposition out;
  out.values.reserve(static_cast<std::size_t>(n));
  out.vectors = SquareMatrix<double>(n);
  for (int k = 0; k < n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    out.values.push_back(a(src, src));
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, src);
  }
  out.sweeps = sweep;
  out.residual = norm > 0 ? off / norm : 0.0;
  return out;
}

/// Descending eigenvalues with the clustering used to count distinct values.
struct Spectrum {
  std::vector<double> eigenvalues;
  double cluster_tol = 0.0;
  int distinct_count = 0;
};

inline double default_cluster_tol(const std::vector<double>& descending) {
  const double top = descending.empty() ? 0.0 : std::abs(descending.front());
  return 1e-7 * std::max(1.0, top);
}

/// Sorts descending and groups consecutive values closer than the cluster
/// tolerance (1e-7 * max(1, |lambda_1|)).
inline Spectrum make_spectrum(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  Spectrum s;
  s.cluster_tol = default_cluster_tol(values);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k == 0 || values[k - 1] - values[k] > s.cluster_tol) ++s.distinct_count;
  }
  s.eigenvalues = std::move(values);
  return s;
}

inline Spectrum eigenvalues(const SquareMatrix<double>& m, double tol = 1e-12) {
  EigenOptions opt;
  opt.tol = tol;
  return make_spectrum(jacobi_eigen(m, opt).values);
}

inline Spectrum dso_spectrum(const Graph& g, double tol = 1e-12) { return eigenvalues(build_matrix(g), tol); }

inline Spectrum adjacency_spectrum(const Graph& g, double tol = 1e-12) {
  return eigenvalues(adjacency_matrix(g), tol);
}

inline double spectral_radius(const Spectrum& s) {
  if (s.eigenvalues.empty()) throw std::invalid_argument("spectral_radius: empty spectrum");
  return s.eigenvalues.front();
}

inline double energy(const Spectrum& s) {
  double e = 0.0;
  for (double x : s.eigenvalues) e += std::abs(x);
  return e;
}

inline int distinct_eigenvalue_count(const Spectrum& s) { return s.distinct_count; }

inline double adjacency_spectral_radius(const Graph& g, double tol = 1e-12) {
  return spectral_radius(adjacency_spectrum(g, tol));
}

} // namespace dso
