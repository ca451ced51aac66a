#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cesaro/oracle.hpp"
#include "cesaro/spectra.hpp"
#include "oracles.hpp"

using namespace cesaro;

TEST(Similarity, TwoByTwoDiagonalizer) {
  const ExactMatrix t = diagonalizer_T<ExactScalar>(2);
  const auto r = exact_similarity_check(t, make_matrix<ExactScalar>(MatrixKind::P, 2));
  EXPECT_TRUE(r.is_diagonal());
  EXPECT_TRUE(r.exact);
  ASSERT_EQ(r.diagonal.size(), 2u);
  EXPECT_EQ(r.diagonal[0], 1);
  EXPECT_EQ(r.diagonal[1], make_rational(-1, 2));
}

TEST(Similarity, IdentityLeavesDiagonalAlone) {
  const std::vector<ExactScalar> d{3, make_rational(1, 2), -7};
  const auto r = exact_similarity_check(ExactMatrix::identity(3), ExactMatrix::diagonal(d));
  EXPECT_TRUE(r.is_diagonal());
  EXPECT_EQ(r.diagonal, d);
}

TEST(Similarity, PascalOnCesaro) {
  const auto r = exact_similarity_check(make_matrix<ExactScalar>(MatrixKind::V, 3),
                                        make_matrix<ExactScalar>(MatrixKind::C, 3));
  EXPECT_TRUE(r.is_diagonal());
  EXPECT_EQ(r.diagonal, (std::vector<ExactScalar>{1, make_rational(1, 2), make_rational(1, 3)}));
}

TEST(Similarity, Errors) {
  ExactMatrix sing(2);
  sing(1, 1) = 1;
  sing(1, 2) = 2;
  sing(2, 1) = 2;
  sing(2, 2) = 4;
  EXPECT_THROW(exact_similarity_check(sing, ExactMatrix::identity(2)), SingularMatrixError);
  EXPECT_THROW(exact_similarity_check(ExactMatrix::identity(2), ExactMatrix::identity(3)),
               ShapeError);
}

TEST(Jacobi, Examples) {
  const auto d = symmetric_eig_reference(FloatMatrix::diagonal(std::vector<double>{3, 1}));
  EXPECT_NEAR(d.values[0], 1.0, 1e-15);
  EXPECT_NEAR(d.values[1], 3.0, 1e-15);

  const auto m = symmetric_eig_reference(make_matrix<double>(MatrixKind::Mmin, 2));
  EXPECT_NEAR(m.values[0], (3 - std::sqrt(5.0)) / 2, 1e-14);
  EXPECT_NEAR(m.values[1], (3 + std::sqrt(5.0)) / 2, 1e-14);

  const auto k = symmetric_eig_reference(make_matrix<double>(MatrixKind::Kmax, 2));
  const auto [lo, hi] = oracle::sym2_eigenvalues(1.0, 0.5, 0.5);
  EXPECT_NEAR(k.values[0], lo, 1e-14);
  EXPECT_NEAR(k.values[1], hi, 1e-14);
}

TEST(Jacobi, EigenpairsReconstruct) {
  const FloatMatrix a = make_matrix<double>(MatrixKind::Kmax, 12);
  const auto e = symmetric_eig_reference(a);
  for (std::size_t k = 1; k <= 12; ++k) {
    for (std::size_t i = 1; i <= 12; ++i) {
      double av = 0;
      for (std::size_t j = 1; j <= 12; ++j) av += a(i, j) * e.vectors(j, k);
      EXPECT_NEAR(av, e.values[k - 1] * e.vectors(i, k), 1e-12);
    }
  }
}

TEST(Jacobi, Errors) {
  EXPECT_THROW(symmetric_eig_reference(make_matrix<double>(MatrixKind::P, 3)), DomainError);
  EXPECT_THROW(symmetric_eig_reference(make_matrix<double>(MatrixKind::Mmin, 30), 1e-14, 1),
               ConvergenceError);
}

TEST(PowerIteration, Examples) {
  EXPECT_NEAR(power_iteration_max(FloatMatrix::identity(5)), 1.0, 1e-12);
  EXPECT_NEAR(power_iteration_max(make_matrix<double>(MatrixKind::Mmin, 2)),
              (3 + std::sqrt(5.0)) / 2, 1e-10);
  const double k50 = power_iteration_max(make_matrix<double>(MatrixKind::Kmax, 50));
  EXPECT_GE(k50, 1.0);
  EXPECT_LE(k50, 4.0);
}

TEST(PowerIteration, SeedDoesNotChangeTheAnswer) {
  const FloatMatrix a = make_matrix<double>(MatrixKind::Kmax, 40);
  const double v0 = power_iteration_max(a, 1e-13, 100000, 0);
  for (std::uint64_t s : {1u, 7u, 12345u}) EXPECT_NEAR(power_iteration_max(a, 1e-13, 100000, s), v0, 1e-9);
}

TEST(PowerIteration, RandomPsdAgreesWithJacobi) {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 9;
    FloatMatrix b(n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) b(i, j) = g(rng);
    const FloatMatrix a = matmul(b, transpose(b));
    const double ref = symmetric_eig_reference(a).values.back();
    EXPECT_NEAR(power_iteration_max(a, 1e-14), ref, 1e-8 * ref) << trial;
  }
}

TEST(PowerIteration, ConvergenceFailure) {
  EXPECT_THROW(power_iteration_max(make_matrix<double>(MatrixKind::Kmax, 200), 1e-16, 3),
               ConvergenceError);
}
