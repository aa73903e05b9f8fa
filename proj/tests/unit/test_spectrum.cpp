#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "dso/dso.hpp"
#include "oracles.hpp"

using namespace dso;

namespace {

const double h = std::sqrt(2.0) / 2;

void expect_values_near(const std::vector<double>& got, const std::vector<double>& want, double tol) {
  ASSERT_EQ(got.size(), want.size());
  for (std::size_t k = 0; k < got.size(); ++k) EXPECT_NEAR(got[k], want[k], tol) << "index " << k;
}

SquareMatrix<double> random_symmetric(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  SquareMatrix<double> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
  return m;
}

} // namespace

TEST(Matrix, BuildMatchesWeights) {
  const Graph p4 = generate_family(FamilyKind::Path, {4});
  const auto m = build_matrix(p4);
  EXPECT_TRUE(m.is_symmetric());
  EXPECT_DOUBLE_EQ(m(0, 1), std::sqrt(5.0) / 3);
  EXPECT_DOUBLE_EQ(m(1, 2), h);
  EXPECT_EQ(m(0, 2), 0.0);
  EXPECT_EQ(m.trace(), 0.0);
  EXPECT_NEAR(m.trace_of_square(), 29.0 / 9.0, 1e-14);
  const auto sub = m.principal_submatrix_without(0);
  EXPECT_EQ(sub.order(), 3);
  EXPECT_DOUBLE_EQ(sub(0, 1), h);
}

TEST(Jacobi, MatchesIndependentSolverOnRandomMatrices) {
  std::mt19937_64 rng(12345);
  for (int n = 1; n <= 24; ++n) {
    const auto m = random_symmetric(n, rng);
    Eigen::MatrixXd e(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) e(i, j) = m(i, j);
    const auto d = jacobi_eigen(m);
    expect_values_near(d.values, oracle::eigenvalues(e), 1e-10);
    EXPECT_LE(d.residual, 1e-12);
    // A v = lambda v for every column.
    for (int k = 0; k < n; ++k) {
      double err = 0;
      for (int i = 0; i < n; ++i) {
        double s = 0;
        for (int j = 0; j < n; ++j) s += m(i, j) * d.vectors(j, k);
        err = std::max(err, std::abs(s - d.values[k] * d.vectors(i, k)));
      }
      EXPECT_LT(err, 1e-9);
    }
  }
}

TEST(Jacobi, ReportsNonConvergence) {
  std::mt19937_64 rng(7);
  const auto m = random_symmetric(12, rng);
  EigenOptions opt;
  opt.max_sweeps = 1;
  opt.tol = 1e-15;
  try {
    jacobi_eigen(m, opt);
    FAIL();
  } catch (const SolverError& e) {
    EXPECT_GT(e.residual(), 0.0);
  }
}

TEST(Jacobi, EmptyAndZeroMatrices) {
  EXPECT_TRUE(jacobi_eigen(SquareMatrix<double>(0)).values.empty());
  const auto z = jacobi_eigen(SquareMatrix<double>(3));
  expect_values_near(z.values, {0, 0, 0}, 0);
  EXPECT_EQ(z.sweeps, 0);
}

TEST(Spectrum, AgreesWithIndependentSolverOnAllGraphsUpToSix) {
  LabeledGraphsUpTo src(1, 6);
  while (auto g = src.next()) {
    const auto s = dso_spectrum(*g);
    const auto want = oracle::dso_eigenvalues(*g);
    ASSERT_EQ(s.eigenvalues.size(), want.size());
    for (std::size_t k = 0; k < want.size(); ++k) ASSERT_NEAR(s.eigenvalues[k], want[k], 1e-10);
  }
}

TEST(Spectrum, ClosedFormFamilies) {
  for (int n = 1; n <= 12; ++n) {
    expect_values_near(dso_spectrum(generate_family(FamilyKind::Complete, {n})).eigenvalues,
                       spec_complete(n).eigenvalues, 1e-9);
  }
  for (int n = 3; n <= 12; ++n) {
    expect_values_near(dso_spectrum(generate_family(FamilyKind::Cycle, {n})).eigenvalues,
                       spec_cycle(n).eigenvalues, 1e-9);
  }
  for (int n = 2; n <= 12; ++n) {
    expect_values_near(dso_spectrum(generate_family(FamilyKind::Star, {n})).eigenvalues, spec_star(n).eigenvalues,
                       1e-9);
  }
  for (int p = 1; p <= 11; ++p)
    for (int q = 1; p + q <= 12; ++q)
      expect_values_near(dso_spectrum(generate_family(FamilyKind::CompleteBipartite, {0, p, q})).eigenvalues,
                         spec_complete_bipartite(p, q).eigenvalues, 1e-9);
}

TEST(Spectrum, ClosedFormExamples) {
  expect_values_near(spec_complete(4).eigenvalues, {3 * h, -h, -h, -h}, 1e-15);
  const double r = std::sqrt(78.0) / 5;
  expect_values_near(spec_complete_bipartite(2, 3).eigenvalues, {r, 0, 0, 0, -r}, 1e-14);
  EXPECT_THROW(spec_cycle(2), PreconditionError);
  EXPECT_THROW(spec_star(1), PreconditionError);
  EXPECT_THROW(spec_regular(generate_family(FamilyKind::Path, {3}), Spectrum{}), PreconditionError);
}

TEST(Spectrum, Petersen) {
  const auto s = dso_spectrum(petersen());
  std::vector<double> want{3 * h};
  for (int k = 0; k < 5; ++k) want.push_back(h);
  for (int k = 0; k < 4; ++k) want.push_back(-2 * h);
  expect_values_near(s.eigenvalues, want, 1e-10);
  EXPECT_EQ(s.distinct_count, 3);
  expect_values_near(spec_regular(petersen(), adjacency_spectrum(petersen())).eigenvalues, want, 1e-10);
}

TEST(Spectrum, DistinctCounts) {
  EXPECT_EQ(dso_spectrum(generate_family(FamilyKind::Complete, {5})).distinct_count, 2);
  EXPECT_EQ(dso_spectrum(generate_family(FamilyKind::CompleteBipartite, {0, 2, 3})).distinct_count, 3);
  EXPECT_EQ(dso_spectrum(generate_family(FamilyKind::Cycle, {6})).distinct_count, 4);
  EXPECT_EQ(dso_spectrum(Graph(4)).distinct_count, 1);
  EXPECT_EQ(make_spectrum({}).distinct_count, 0);
  // Values within the cluster tolerance chain together.
  EXPECT_EQ(make_spectrum({1.0, 1.0 + 5e-8, 1.0 + 1e-7 + 1e-8}).distinct_count, 1);
  EXPECT_EQ(make_spectrum({1.0, 1.0 + 2e-7}).distinct_count, 2);
}

TEST(Spectrum, EnergyAndRadius) {
  const auto c5 = dso_spectrum(generate_family(FamilyKind::Cycle, {5}));
  // Eigenvalues sqrt(2) cos(2 pi j / 5); their moduli sum to sqrt(2) (1 + sqrt(5)).
  EXPECT_NEAR(energy(c5), h * (2 + 2 * std::sqrt(5.0)), 1e-12);
  EXPECT_NEAR(energy(c5), 4.5765, 1e-4);
  EXPECT_NEAR(spectral_radius(c5), std::sqrt(2.0), 1e-12);
  EXPECT_THROW(spectral_radius(Spectrum{}), std::invalid_argument);
  EXPECT_NEAR(adjacency_spectral_radius(petersen()), 3.0, 1e-12);
}

TEST(Spectrum, InterlacingUnderVertexDeletion) {
  // Eigenvalues of a principal submatrix separate those of the parent.
  LabeledGraphs src(6);
  int k = 0;
  while (auto g = src.next()) {
    if (k++ % 11 != 0) continue;
    const auto m = build_matrix(*g);
    const auto parent = eigenvalues(m).eigenvalues;
    for (int v = 0; v < 6; ++v) {
      const auto child = eigenvalues(m.principal_submatrix_without(v)).eigenvalues;
      for (std::size_t i = 0; i < child.size(); ++i) {
        ASSERT_LE(child[i], parent[i] + 1e-10);
        ASSERT_GE(child[i], parent[i + 1] - 1e-10);
      }
    }
  }
}

TEST(Spectrum, RayleighQuotientBoundsRadius) {
  // lambda_1 >= x^T M x / x^T x for any x; the all-ones vector gives 2 DSO / n.
  std::mt19937_64 rng(99);
  std::normal_distribution<double> dist;
  LabeledGraphs src(6);
  int k = 0;
  while (auto g = src.next()) {
    if (k++ % 17 != 0) continue;
    const auto m = build_matrix(*g);
    const double l1 = eigenvalues(m).eigenvalues.front();
    const double lmin = eigenvalues(m).eigenvalues.back();
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> x(6);
      for (auto& xi : x) xi = dist(rng);
      double num = 0;
      double den = 0;
      for (int i = 0; i < 6; ++i) {
        den += x[i] * x[i];
        for (int j = 0; j < 6; ++j) num += x[i] * m(i, j) * x[j];
      }
      ASSERT_LE(num / den, l1 + 1e-10);
      ASSERT_GE(num / den, lmin - 1e-10);
    }
    ASSERT_GE(l1 + 1e-10, 2 * dso_index(*g) / 6);
  }
}

TEST(Spectrum, EnergyIsInvariantUnderRelabelling) {
  const Graph g = from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}, {0, 5}});
  const Graph h2 = from_edge_list(6, {{5, 4}, {4, 3}, {3, 2}, {4, 1}, {1, 0}, {5, 0}});
  EXPECT_NEAR(energy(dso_spectrum(g)), energy(dso_spectrum(h2)), 1e-12);
}
