#include "cesaro/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cesaro/oracle.hpp"
#include "cesaro/spectra.hpp"

namespace cesaro {

namespace {

void require_order(std::size_t n) {
  if (n < 1) throw DomainError("order must be at least 1");
}

constexpr double kOracleSlack = 1e-9;

}  // namespace

TraceCheck trace_harmonic_check(std::size_t n) {
  require_order(n);
  const ExactMatrix p = make_matrix<ExactScalar>(MatrixKind::P, n);
  // trace(P P^T) = sum of squared entries; rows are summed separately so the
  // running total only ever meets one new denominator per row.
  ExactScalar total = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    ExactScalar row = 0;
    for (std::size_t j = 1; j <= n; ++j)
      if (sgn(p(i, j)) != 0) row += p(i, j) * p(i, j);
    total += row;
  }
  TraceCheck out{total, harmonic(static_cast<long>(n)), false};
  out.pass = out.trace == out.harmonic;
  return out;
}

std::vector<ExactScalar> contraction_diagonal(std::size_t n) {
  require_order(n);
  std::vector<ExactScalar> d;
  d.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    const long r = static_cast<long>(n - j);
    d.push_back(make_rational(r, r + 1));
  }
  return d;
}

ContractionCheck contraction_identity_check(std::size_t n) {
  require_order(n);
  const ExactMatrix jp = matmul(make_matrix<ExactScalar>(MatrixKind::J, n),
                                make_matrix<ExactScalar>(MatrixKind::P, n));
  const ExactMatrix i_minus = subtract(ExactMatrix::identity(n), jp);
  ExactMatrix product = matmul(i_minus, transpose(i_minus));

  const std::vector<ExactScalar> diag = contraction_diagonal(n);
  const bool pass = product == ExactMatrix::diagonal(diag);
  ExactScalar norm_sq = *std::max_element(diag.begin(), diag.end());
  return ContractionCheck{std::move(product), pass, norm_sq};
}

NormKCertificate norm_K_certificate(std::size_t n, std::uint64_t seed) {
  require_order(n);
  NormKCertificate out;
  const double root = std::sqrt(1.0 - 1.0 / static_cast<double>(n));
  out.upper = (1.0 + root) * (1.0 + root);
  out.oracle = power_iteration_max(make_matrix<double>(MatrixKind::Kmax, n), 1e-13, 100000, seed);
  out.pass = out.oracle * (1.0 - kOracleSlack) <= out.upper && out.upper <= 4.0;
  return out;
}

GershgorinCertificate gershgorin_W(std::size_t n, std::uint64_t seed) {
  require_order(n);
  const ExactMatrix w = make_matrix<ExactScalar>(MatrixKind::W, n);
  GershgorinCertificate out;
  bool first = true;
  for (std::size_t i = 1; i <= n; ++i) {
    mpz_class disk = w(i, i).get_num();
    for (std::size_t j = 1; j <= n; ++j) {
      if (j == i || sgn(w(i, j)) == 0) continue;
      disk += abs(w(i, j).get_num());
    }
    if (first || disk > out.bound) {
      out.bound = disk;
      out.dominant_row = i;
      first = false;
    }
  }
  const mpz_class nz = static_cast<unsigned long>(n);
  out.paper_bound = 4 * nz * nz - 6 * nz + 3;
  out.oracle = power_iteration_max(to_float(w), 1e-13, 100000, seed);
  const mpz_class quad = 4 * nz * nz;
  out.pass = out.oracle * (1.0 - kOracleSlack) <= out.bound.get_d() &&
             out.bound <= out.paper_bound && out.paper_bound <= quad;
  return out;
}

MinKernelNorm min_kernel_norm(std::size_t n) {
  require_order(n);
  MinKernelNorm out;
  const double nd = static_cast<double>(n);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  out.exact_formula = min_kernel_eigenvalue(n, n);
  out.approx = 4.0 * nd * nd / pi2;
  out.ratio = out.exact_formula / out.approx;
  out.shifted_approx = (2.0 * nd + 1.0) * (2.0 * nd + 1.0) / pi2;
  return out;
}

NormReport build_norm_report(std::size_t n, std::uint64_t seed) {
  require_order(n);
  NormReport r;
  r.n = n;

  const TraceCheck tr = trace_harmonic_check(n);
  r.trace_bound = tr.harmonic;
  r.contraction_diag = contraction_diagonal(n);

  const NormKCertificate nk = norm_K_certificate(n, seed);
  r.norm_K_upper = nk.upper;
  r.oracle_lambda_max_K = nk.oracle;

  const GershgorinCertificate g = gershgorin_W(n, seed);
  r.gershgorin_W = g.bound;
  r.paper_bound_W = g.paper_bound;
  r.oracle_lambda_max_W = g.oracle;

  const MinKernelNorm mk = min_kernel_norm(n);
  r.min_kernel_norm = mk.exact_formula;
  r.min_kernel_approx = mk.approx;

  r.trace_ok = tr.pass && nk.oracle * (1.0 - kOracleSlack) <= tr.harmonic.get_d();
  r.norm_K_ok = nk.pass && nk.oracle >= 1.0 - kOracleSlack;
  r.gershgorin_ok = g.pass;
  return r;
}

}  // namespace cesaro
