#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cesaro/oracle.hpp"
#include "cesaro/spectra.hpp"
#include "oracles.hpp"

using namespace cesaro;

namespace {

ExactMatrix mk(MatrixKind kind, std::size_t n) { return make_matrix<ExactScalar>(kind, n); }

std::vector<ExactScalar> q(std::initializer_list<ExactScalar> v) { return v; }

}  // namespace

TEST(ClosedEigenvaluesP, Examples) {
  EXPECT_EQ(closed_eigenvalues_P(3), q({1, make_rational(-1, 2), make_rational(1, 3)}));
  EXPECT_EQ(closed_eigenvalues_P(1), q({1}));
  EXPECT_EQ(closed_eigenvalues_P(4),
            q({1, make_rational(-1, 2), make_rational(1, 3), make_rational(-1, 4)}));
  EXPECT_THROW(closed_eigenvalues_P(0), DomainError);
}

TEST(ClosedEigenvaluesP, PairwiseDistinct) {
  for (std::size_t n = 1; n <= 100; ++n) {
    auto ev = closed_eigenvalues_P(n);
    std::sort(ev.begin(), ev.end());
    EXPECT_EQ(std::adjacent_find(ev.begin(), ev.end()), ev.end());
  }
}

TEST(DiagonalizerT, Examples) {
  ExactMatrix t2(2);
  t2(1, 1) = make_rational(1, 3);
  t2(1, 2) = make_rational(2, 3);
  t2(2, 1) = -1;
  t2(2, 2) = 1;
  EXPECT_EQ(diagonalizer_T<ExactScalar>(2), t2);
  EXPECT_EQ(diagonalizer_T<ExactScalar>(1), ExactMatrix::identity(1));
  EXPECT_THROW(diagonalizer_T<ExactScalar>(0), DomainError);
}

TEST(DiagonalizerT, ConjugatesPExactly) {
  for (std::size_t n = 1; n <= 20; ++n) {
    const ExactMatrix t = diagonalizer_T<ExactScalar>(n);
    const auto r = exact_similarity_check(t, mk(MatrixKind::P, n));
    EXPECT_TRUE(r.is_diagonal()) << n;
    EXPECT_EQ(r.diagonal, closed_eigenvalues_P(n)) << n;
    const ExactMatrix pinv = mk(MatrixKind::Pinv, n);
    const auto r2 = exact_similarity_check(t, matmul(pinv, pinv));
    EXPECT_TRUE(r2.is_diagonal());
    for (std::size_t i = 1; i <= n; ++i) EXPECT_EQ(r2.diagonal[i - 1], static_cast<long>(i * i));
  }
}

TEST(Triangularization, VPinvVinvUpperTriangular) {
  for (std::size_t n = 1; n <= 25; ++n) {
    const ExactMatrix tri =
        matmul(matmul(mk(MatrixKind::V, n), mk(MatrixKind::Pinv, n)), mk(MatrixKind::Vinv, n));
    EXPECT_TRUE(is_upper_triangular(tri));
    for (std::size_t i = 1; i <= n; ++i)
      EXPECT_EQ(tri(i, i), (i % 2 == 1 ? 1 : -1) * static_cast<long>(i));
    const ExactMatrix pinv = mk(MatrixKind::Pinv, n);
    EXPECT_EQ(matmul(matmul(mk(MatrixKind::V, n), matmul(pinv, pinv)), mk(MatrixKind::Vinv, n)),
              mk(MatrixKind::B, n));
  }
}

TEST(Mcoef, UnitDiagonal) {
  for (std::size_t n = 1; n <= 40; ++n) {
    const ExactMatrix m = mk(MatrixKind::Mcoef, n);
    for (std::size_t i = 1; i <= n; ++i) EXPECT_EQ(m(i, i), 1);
  }
}

TEST(Diagonalize, Examples) {
  const auto c2 = diagonalize<ExactScalar>(MatrixKind::C, 2);
  EXPECT_EQ(c2.diagonalizer, mk(MatrixKind::V, 2));
  EXPECT_EQ(c2.eigenvalues, q({1, make_rational(1, 2)}));

  const auto pinv2 = diagonalize<ExactScalar>(MatrixKind::Pinv, 2);
  EXPECT_EQ(pinv2.eigenvalues, q({1, -2}));

  const auto p1 = diagonalize<ExactScalar>(MatrixKind::P, 1);
  EXPECT_EQ(p1.eigenvalues, q({1}));
  EXPECT_EQ(p1.diagonalizer, ExactMatrix::identity(1));
  EXPECT_EQ(p1.residual, 0.0);
}

TEST(Diagonalize, AllKindsUpToOneHundredExact) {
  for (std::size_t n : {1u, 2u, 3u, 7u, 16u, 33u, 64u, 100u}) {
    for (MatrixKind kind :
         {MatrixKind::P, MatrixKind::Pinv, MatrixKind::C, MatrixKind::B, MatrixKind::Zrev}) {
      const auto d = diagonalize<ExactScalar>(kind, n);  // throws on failure
      EXPECT_EQ(d.residual, 0.0);
      EXPECT_EQ(d.eigenvalues.size(), n);
    }
  }
}

TEST(Diagonalize, ZrevSharesSpectrumWithP) {
  for (std::size_t n = 1; n <= 20; ++n)
    EXPECT_EQ(diagonalize<ExactScalar>(MatrixKind::Zrev, n).eigenvalues,
              diagonalize<ExactScalar>(MatrixKind::P, n).eigenvalues);
}

TEST(Diagonalize, RightEigenvectorsInvertDiagonalizer) {
  const auto d = diagonalize<ExactScalar>(MatrixKind::P, 6);
  const ExactMatrix right = d.right_eigenvectors();
  const ExactMatrix p = mk(MatrixKind::P, 6);
  const ExactMatrix pr = matmul(p, right);
  for (std::size_t k = 1; k <= 6; ++k)
    for (std::size_t i = 1; i <= 6; ++i) EXPECT_EQ(pr(i, k), d.eigenvalues[k - 1] * right(i, k));
}

TEST(Diagonalize, FloatModeReportsResidual) {
  const auto d = diagonalize<double>(MatrixKind::P, 8);
  EXPECT_LT(d.residual, 1e-9);
  EXPECT_NEAR(d.eigenvalues[1], -0.5, 0.0);
}

TEST(Diagonalize, UnsupportedKind) {
  EXPECT_THROW(diagonalize<ExactScalar>(MatrixKind::W, 3), DomainError);
  EXPECT_THROW(diagonalize(MatrixKind::J, 3, ScalarMode::Float), DomainError);
}

TEST(MinKernelSpectrum, SmallOrders) {
  const auto s1 = min_kernel_spectrum(1);
  EXPECT_NEAR(s1.eigenvalues[0], 1.0, 1e-15);
  EXPECT_NEAR(s1.diagonalizer(1, 1), 1.0, 1e-15);

  const auto [lo, hi] = oracle::sym2_eigenvalues(1, 1, 2);
  const auto s2 = min_kernel_spectrum(2);
  EXPECT_NEAR(s2.eigenvalues[1], (3 + std::sqrt(5.0)) / 2, 1e-14);
  EXPECT_NEAR(s2.eigenvalues[1], hi, 1e-14);
  EXPECT_NEAR(s2.eigenvalues[0], (3 - std::sqrt(5.0)) / 2, 1e-14);
  EXPECT_NEAR(s2.eigenvalues[0], lo, 1e-14);
  EXPECT_NEAR(s2.eigenvalues[1], 2.6180339887, 1e-10);
  EXPECT_THROW(min_kernel_spectrum(0), DomainError);
}

TEST(MinKernelSpectrum, EigenvaluesAgreeWithCosineFormAsWritten) {
  for (std::size_t n : {1u, 5u, 50u}) {
    for (std::size_t k = 1; k <= n; ++k) {
      const double theta = 2.0 * static_cast<double>(k) * std::numbers::pi / (2.0 * n + 1.0);
      EXPECT_NEAR(min_kernel_eigenvalue(n, k), 1.0 / (2.0 + 2.0 * std::cos(theta)),
                  1e-9 * min_kernel_eigenvalue(n, k));
    }
  }
}

TEST(MinKernelSpectrum, OrthonormalAndEigenpairsAtLargeOrder) {
  for (std::size_t n : {2u, 17u, 300u, 2000u}) {
    const auto s = min_kernel_spectrum(n);
    EXPECT_LE(s.residual, 1e-8 * static_cast<double>(n)) << n;
    if (n <= 300) {
      const FloatMatrix v = min_kernel_eigenvectors(n);
      const FloatMatrix g = matmul(transpose(v), v);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) ASSERT_NEAR(g(i, j), i == j ? 1.0 : 0.0, 1e-10);
    }
  }
}

TEST(MinKernelSpectrum, LiteralSineMatrixPairsInReverse) {
  const std::size_t n = 7;
  const FloatMatrix lit = min_kernel_sine_matrix(n);
  const FloatMatrix m = make_matrix<double>(MatrixKind::Mmin, n);
  std::vector<double> reversed(n), forward(n);
  for (std::size_t k = 1; k <= n; ++k) {
    forward[k - 1] = min_kernel_eigenvalue(n, k);
    reversed[k - 1] = min_kernel_eigenvalue(n, n - k + 1);
  }
  EXPECT_LT(min_kernel_eigenpair_residual(lit, reversed), 1e-12);
  EXPECT_GT(min_kernel_eigenpair_residual(lit, forward), 1e-3);
  // Same vectors, re-indexed: column k of the corrected set is column n-k+1 of the literal one.
  const FloatMatrix v = min_kernel_eigenvectors(n);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t j = 1; j <= n; ++j) EXPECT_NEAR(v(j, k), lit(j, n - k + 1), 1e-13);
}

TEST(StationaryDistribution, Examples) {
  EXPECT_EQ(stationary_distribution(1).weights, q({1}));
  EXPECT_EQ(stationary_distribution(2).weights, q({make_rational(1, 3), make_rational(2, 3)}));
  EXPECT_EQ(stationary_distribution(3).weights,
            q({make_rational(1, 6), make_rational(1, 3), make_rational(1, 2)}));
}

TEST(StationaryDistribution, MatchesIndependentSolveAndPattern) {
  for (std::size_t n = 1; n <= 40; ++n) {
    const auto pi = stationary_distribution(n).weights;
    const auto ref = oracle::stationary_by_elimination(n);
    ASSERT_EQ(pi.size(), n);
    ExactScalar total = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      EXPECT_EQ(pi[i - 1], ref[i - 1]) << n;
      EXPECT_GT(sgn(pi[i - 1]), 0);
      // pattern 2i / (n (n + 1)), confirmed against the elimination oracle above
      EXPECT_EQ(pi[i - 1], make_rational(static_cast<long>(2 * i), static_cast<long>(n * (n + 1))));
      total += pi[i - 1];
    }
    EXPECT_EQ(total, 1);
  }
}
