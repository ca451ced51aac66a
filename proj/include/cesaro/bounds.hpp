#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cesaro/matrix.hpp"

namespace cesaro {

struct TraceCheck {
  ExactScalar trace;     ///< trace(P P^T)
  ExactScalar harmonic;  ///< H_n
  bool pass = false;
};

/// trace(P P^T) computed exactly (sum of squared entries of P) against H_n.
TraceCheck trace_harmonic_check(std::size_t n);

struct ContractionCheck {
  ExactMatrix product;  ///< (I - JP)(I - JP)^T
  bool pass = false;
  /// max_j (n-j)/(n-j+1) = (n-1)/n, i.e. ||I - JP||^2.
  ExactScalar norm_squared;
};

/// Exact check of (I - JP)(I - JP)^T = Diag((n-j)/(n-j+1)). O(n^3) rationals.
ContractionCheck contraction_identity_check(std::size_t n);

/// (n-j)/(n-j+1), j = 1..n.
std::vector<ExactScalar> contraction_diagonal(std::size_t n);

struct NormKCertificate {
  double upper = 0.0;   ///< (1 + sqrt(1 - 1/n))^2
  double oracle = 0.0;  ///< lambda_max(Kmax) by power iteration
  bool pass = false;    ///< oracle <= upper (1e-9 relative slack) and upper <= 4
};

NormKCertificate norm_K_certificate(std::size_t n, std::uint64_t seed = 0);

struct GershgorinCertificate {
  mpz_class bound;        ///< max_i W_ii + sum_{j != i} |W_ij|
  mpz_class paper_bound;  ///< 4n^2 - 6n + 3
  std::size_t dominant_row = 1;
  double oracle = 0.0;    ///< lambda_max(W) by power iteration
  bool pass = false;      ///< oracle <= bound <= 4n^2 - 6n + 3 <= 4n^2
};

GershgorinCertificate gershgorin_W(std::size_t n, std::uint64_t seed = 0);

struct MinKernelNorm {
  double exact_formula = 0.0;  ///< 1 / (2 + 2 cos theta_n)
  double approx = 0.0;         ///< 4 n^2 / pi^2
  double ratio = 0.0;          ///< exact_formula / approx
  double shifted_approx = 0.0; ///< (2n + 1)^2 / pi^2
};

MinKernelNorm min_kernel_norm(std::size_t n);

struct NormReport {
  std::size_t n = 0;
  ExactScalar trace_bound;                      ///< H_n
  std::vector<ExactScalar> contraction_diag;    ///< (n-j)/(n-j+1)
  double norm_K_upper = 0.0;
  mpz_class gershgorin_W;
  mpz_class paper_bound_W;
  double min_kernel_norm = 0.0;
  double min_kernel_approx = 0.0;
  double oracle_lambda_max_K = 0.0;
  double oracle_lambda_max_W = 0.0;

  bool trace_ok = false;       ///< trace(P P^T) == H_n, and lambda_max(K) <= H_n
  bool norm_K_ok = false;      ///< 1 <= lambda_max(K) <= upper <= 4
  bool gershgorin_ok = false;  ///< lambda_max(W) <= gersh <= 4n^2-6n+3 <= 4n^2

  bool all() const { return trace_ok && norm_K_ok && gershgorin_ok; }
};

NormReport build_norm_report(std::size_t n, std::uint64_t seed = 0);

}  // namespace cesaro
