#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cesaro/matrix.hpp"

namespace cesaro {

enum class PsdVerdict { PSD, NotPSD };

/// Result of a symmetric pivoted factorization.
template <class T>
struct PsdCertificate {
  PsdVerdict verdict = PsdVerdict::PSD;
  /// Diagonal pivots in elimination order. Elimination stops at the first
  /// pivot that is zero (within tolerance), which is the last one recorded,
  /// so rank-deficient PSD inputs report fewer than n pivots.
  std::vector<T> pivots;
  /// For NotPSD: x with x^T A x < 0, and that quadratic form re-evaluated on A.
  std::optional<std::vector<T>> witness;
  std::optional<T> witness_value;
  double tolerance = 0.0;
  /// Every one of the n pivots strictly above tolerance * scale.
  bool positive_definite = false;

  bool is_psd() const { return verdict == PsdVerdict::PSD; }
  /// Smallest pivot, or zero when no pivot was taken.
  T min_pivot() const;
};

/// Entrywise r-th power, exact. r = 0 gives the all-ones matrix.
ExactMatrix schur_power(const ExactMatrix& a, unsigned r);
/// Entrywise r-th power. Throws DomainError for r < 0, or for a non-positive
/// entry when r is not an integer.
FloatMatrix schur_power(const FloatMatrix& a, double r);

/// PSD iff every pivot is >= -tolerance * max|A_ii|. Exact matrices always
/// use tolerance 0. Throws DomainError for asymmetric input (entrywise in
/// exact mode, 1e-12 relative in float mode).
template <class T>
PsdCertificate<T> psd_certificate(const Matrix<T>& a, double tolerance = 0.0);

/// One certificate per exponent for schur_power(Kmax(n), r).
std::vector<PsdCertificate<double>> infinite_divisibility_sweep(std::size_t n,
                                                                std::span<const double> exponents,
                                                                double tolerance = 1e-9);
std::vector<PsdCertificate<ExactScalar>> infinite_divisibility_sweep_exact(
    std::size_t n, std::span<const unsigned> exponents);

/// Certificate for [min(f_i, f_j)]. Throws DomainError unless f is strictly
/// increasing and positive.
PsdCertificate<double> gram_min_check(std::span<const double> f_values, double tolerance = 1e-9);

struct KernelFactorizationReport {
  std::size_t n = 0;
  bool k_equals_p_pt = false;          ///< Kmax = P P^T
  bool k_equals_d_mmin_d = false;      ///< Kmax = D Mmin D, D = Diag(1/i)
  bool mmin_equals_lones_lt = false;   ///< Mmin = Lones Lones^T

  bool all() const { return k_equals_p_pt && k_equals_d_mmin_d && mmin_equals_lones_lt; }
};

KernelFactorizationReport kernel_factorization_check(std::size_t n);

}  // namespace cesaro
