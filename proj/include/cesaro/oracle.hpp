#pragma once

#include <cstdint>
#include <vector>

#include "cesaro/matrix.hpp"

namespace cesaro {

/// Summary of T A T^{-1}. In exact mode a valid diagonalizer gives an
/// off-diagonal maximum of exactly zero.
template <class T>
struct SimilarityReport {
  T off_diagonal_max;
  std::vector<T> diagonal;
  bool exact = false;

  bool is_diagonal() const { return ScalarTraits<T>::is_zero(off_diagonal_max); }
};

/// Computes T A T^{-1} and summarizes it. Throws SingularMatrixError when T
/// is singular and ShapeError on an order mismatch.
template <class T>
SimilarityReport<T> exact_similarity_check(const Matrix<T>& t, const Matrix<T>& a) {
  require_same_order(t, a);
  const Matrix<T> conj = matmul(matmul(t, a), invert(t));
  return SimilarityReport<T>{off_diagonal_max(conj), diagonal_of(conj),
                             Matrix<T>::mode == ScalarMode::Exact};
}

struct SymmetricEigen {
  std::vector<double> values;  ///< ascending
  FloatMatrix vectors;         ///< column k pairs with values[k-1]
  int sweeps = 0;
};

/// Cyclic Jacobi rotations. Converges when every off-diagonal entry is at most
/// tol * max|A|; throws ConvergenceError after max_sweeps otherwise and
/// DomainError for asymmetric input.
SymmetricEigen symmetric_eig_reference(const FloatMatrix& a, double tol = 1e-14,
                                       int max_sweeps = 100);

/// Largest eigenvalue of a symmetric PSD matrix by power iteration from a
/// seeded random start. Stops once the Rayleigh quotient moves by less than
/// tol relative between iterations.
double power_iteration_max(const FloatMatrix& a, double tol = 1e-13,
                           int max_iters = 100000, std::uint64_t seed = 0);

}  // namespace cesaro
