#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "cesaro/matrix.hpp"

namespace cesaro {

/// Eigenvalues in index order plus a left diagonalizer T (rows are left
/// eigenvectors): T A T^{-1} = Diag(eigenvalues).
template <class T>
struct SpectralDecomposition {
  static constexpr ScalarMode mode = ScalarTraits<T>::mode;

  MatrixKind kind;
  std::size_t n;
  std::vector<T> eigenvalues;
  Matrix<T> diagonalizer;
  /// Max |off-diagonal| of T A T^{-1}. Exactly zero in exact mode.
  double residual = 0.0;

  /// Columns are right eigenvectors, in the same order as `eigenvalues`.
  Matrix<T> right_eigenvectors() const { return invert(diagonalizer); }
};

using AnyDecomposition =
    std::variant<SpectralDecomposition<ExactScalar>, SpectralDecomposition<double>>;

/// (-1)^{i+1} / i for i = 1..n.
std::vector<ExactScalar> closed_eigenvalues_P(std::size_t n);

/// T = S V with S = Mcoef^T. Row i of T is a left eigenvector of P for
/// eigenvalue (-1)^{i+1}/i, and T P^{-2} T^{-1} = Diag(i^2).
template <class T>
Matrix<T> diagonalizer_T(std::size_t n);

/// Closed-form decomposition for kind in {P, Pinv, C, B, Zrev}. Exact results
/// are verified (T A == Lambda T, with T unimodular) before returning; a failed
/// check throws InconsistencyError. Other kinds throw DomainError.
template <class T>
SpectralDecomposition<T> diagonalize(MatrixKind kind, std::size_t n);

AnyDecomposition diagonalize(MatrixKind kind, std::size_t n, ScalarMode mode);

// ---------------------------------------------------------------------------
// min(i, j) kernel

/// lambda_k = 1 / (2 + 2 cos theta_k), theta_k = 2 k pi / (2n + 1), k = 1..n.
/// Evaluated as 1 / (4 cos^2(theta_k / 2)) to avoid cancellation near theta = pi.
double min_kernel_eigenvalue(std::size_t n, std::size_t k);

/// Orthonormal eigenvectors of Mmin; column k pairs with min_kernel_eigenvalue(n, k):
/// v_k[j] = 2/sqrt(2n+1) * (-1)^{j+1} sin(j theta_k).
FloatMatrix min_kernel_eigenvectors(std::size_t n);

/// The sine matrix [2/sqrt(2n+1) sin((k - 1/2) theta_j)]_{jk} taken literally.
/// It is orthogonal, but its column k is the eigenvector for lambda_{n-k+1},
/// i.e. the index pairing runs in reverse.
FloatMatrix min_kernel_sine_matrix(std::size_t n);

/// Decomposition of Mmin: eigenvalues ascending, diagonalizer = V^T (V
/// orthogonal). `residual` holds max_k ||Mmin v_k - lambda_k v_k||_inf,
/// computed with an O(n) structured product per vector.
SpectralDecomposition<double> min_kernel_spectrum(std::size_t n);

/// max_k ||Mmin v_k - lambda_k v_k||_inf for the columns of `vectors`.
double min_kernel_eigenpair_residual(const FloatMatrix& vectors,
                                     const std::vector<double>& eigenvalues);

// ---------------------------------------------------------------------------
// Markov chain

struct StationaryDistribution {
  std::size_t n;
  std::vector<ExactScalar> weights;
};

/// Row 1 of diagonalizer_T(n) normalized to unit mass; pi P = pi is checked
/// exactly before returning.
StationaryDistribution stationary_distribution(std::size_t n);

}  // namespace cesaro
