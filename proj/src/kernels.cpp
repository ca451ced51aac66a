#include "cesaro/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace cesaro {

template <class T>
T PsdCertificate<T>::min_pivot() const {
  if (pivots.empty()) return T(0);
  return *std::min_element(pivots.begin(), pivots.end());
}

template struct PsdCertificate<ExactScalar>;
template struct PsdCertificate<double>;

ExactMatrix schur_power(const ExactMatrix& a, unsigned r) {
  const std::size_t n = a.order();
  ExactMatrix out(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), a(i, j).get_num_mpz_t(), r);
      mpz_pow_ui(den.get_mpz_t(), a(i, j).get_den_mpz_t(), r);
      out(i, j) = ExactScalar(num, den);
    }
  return out;
}

FloatMatrix schur_power(const FloatMatrix& a, double r) {
  if (!(r >= 0.0)) throw DomainError("Schur power exponent must be non-negative");
  const bool integral = std::floor(r) == r;
  const std::size_t n = a.order();
  FloatMatrix out(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      const double v = a(i, j);
      if (r == 0.0) {
        out(i, j) = 1.0;
        continue;
      }
      if (!integral && v <= 0.0)
        throw DomainError("fractional Schur power of a non-positive entry");
      out(i, j) = std::pow(v, r);
    }
  return out;
}

namespace {

void require_symmetric(const ExactMatrix& a) {
  if (!is_symmetric(a)) throw DomainError("matrix is not symmetric");
}

void require_symmetric(const FloatMatrix& a) {
  double scale = 0.0;
  for (double x : a.row_major()) scale = std::max(scale, std::fabs(x));
  for (std::size_t i = 1; i <= a.order(); ++i)
    for (std::size_t j = i + 1; j <= a.order(); ++j)
      if (std::fabs(a(i, j) - a(j, i)) > 1e-12 * scale)
        throw DomainError("matrix is not symmetric");
}

template <class T>
T quadratic_form(const Matrix<T>& a, const std::vector<T>& x) {
  T s(0);
  for (std::size_t i = 1; i <= a.order(); ++i) {
    if (ScalarTraits<T>::is_zero(x[i - 1])) continue;
    T row(0);
    for (std::size_t j = 1; j <= a.order(); ++j) row += a(i, j) * x[j - 1];
    s += x[i - 1] * row;
  }
  return s;
}

}  // namespace

template <class T>
PsdCertificate<T> psd_certificate(const Matrix<T>& a, double tolerance) {
  require_symmetric(a);
  constexpr bool exact = std::is_same_v<T, ExactScalar>;
  if (exact) tolerance = 0.0;
  if (tolerance < 0.0) throw DomainError("tolerance must be non-negative");

  const std::size_t n = a.order();
  double scale = 0.0;
  for (std::size_t i = 1; i <= n; ++i)
    scale = std::max(scale, std::fabs(ScalarTraits<T>::to_double(a(i, i))));
  const double floor = tolerance * scale;

  PsdCertificate<T> cert;
  cert.tolerance = tolerance;

  // s holds the running Schur complement; column r of `basis` is the vector
  // in original coordinates whose quadratic form equals s(r, r), so any
  // certificate of indefiniteness on s lifts directly to a witness on a.
  Matrix<T> s = a;
  Matrix<T> basis = Matrix<T>::identity(n);
  std::vector<bool> active(n + 1, true);

  auto finish_not_psd = [&](std::vector<T> x) {
    const T value = quadratic_form(a, x);
    if (!(value < T(0)) || ScalarTraits<T>::to_double(value) >= -floor) {
      throw InconsistencyError("PSD witness failed its re-check");
    }
    cert.verdict = PsdVerdict::NotPSD;
    cert.witness = std::move(x);
    cert.witness_value = value;
    cert.positive_definite = false;
    return cert;
  };
  auto column = [&](std::size_t r) {
    std::vector<T> x(n);
    for (std::size_t i = 1; i <= n; ++i) x[i - 1] = basis(i, r);
    return x;
  };

  for (std::size_t step = 1; step <= n; ++step) {
    std::size_t p = 0;
    for (std::size_t r = 1; r <= n; ++r)
      if (active[r] && (p == 0 || s(r, r) > s(p, p))) p = r;

    const T pivot = s(p, p);
    const double pivot_d = ScalarTraits<T>::to_double(pivot);
    if (pivot < T(0) && pivot_d < -floor) {
      // Largest remaining diagonal is negative: e_p already witnesses it.
      return finish_not_psd(column(p));
    }

    const bool negligible = exact ? ScalarTraits<T>::is_zero(pivot) : pivot_d <= floor;
    if (negligible) {
      // Remaining diagonal is zero. A nonzero off-diagonal entry s(q, r) then
      // makes the complement indefinite.
      if constexpr (exact) {
        for (std::size_t q = 1; q <= n; ++q) {
          if (!active[q]) continue;
          for (std::size_t r = 1; r <= n; ++r) {
            if (!active[r] || r == q || ScalarTraits<T>::is_zero(s(q, r))) continue;
            // y = t e_q + e_r: y^T s y = 2 t s_qr + s_rr; pick t to make it -2 - |s_rr|.
            const T srr_abs = ScalarTraits<T>::abs(s(r, r));
            const T t = -(srr_abs + T(1)) / s(q, r);
            std::vector<T> x(n, T(0));
            for (std::size_t i = 1; i <= n; ++i) x[i - 1] = t * basis(i, q) + basis(i, r);
            return finish_not_psd(std::move(x));
          }
        }
      }
      cert.pivots.push_back(pivot);
      cert.verdict = PsdVerdict::PSD;
      cert.positive_definite = false;
      return cert;
    }

    cert.pivots.push_back(pivot);
    active[p] = false;
    for (std::size_t r = 1; r <= n; ++r) {
      if (!active[r] || ScalarTraits<T>::is_zero(s(r, p))) continue;
      const T factor = s(r, p) / pivot;
      for (std::size_t c = 1; c <= n; ++c) {
        if (!active[c] || ScalarTraits<T>::is_zero(s(p, c))) continue;
        s(r, c) -= factor * s(p, c);
      }
      for (std::size_t i = 1; i <= n; ++i) {
        if (!ScalarTraits<T>::is_zero(basis(i, p))) basis(i, r) -= factor * basis(i, p);
      }
    }
  }

  cert.verdict = PsdVerdict::PSD;
  cert.positive_definite = true;
  return cert;
}

template PsdCertificate<ExactScalar> psd_certificate<ExactScalar>(const ExactMatrix&, double);
template PsdCertificate<double> psd_certificate<double>(const FloatMatrix&, double);

std::vector<PsdCertificate<double>> infinite_divisibility_sweep(std::size_t n,
                                                                std::span<const double> exponents,
                                                                double tolerance) {
  if (exponents.empty()) throw DomainError("exponent list is empty");
  const FloatMatrix k = make_matrix<double>(MatrixKind::Kmax, n);
  std::vector<PsdCertificate<double>> out;
  out.reserve(exponents.size());
  for (double r : exponents) out.push_back(psd_certificate(schur_power(k, r), tolerance));
  return out;
}

std::vector<PsdCertificate<ExactScalar>> infinite_divisibility_sweep_exact(
    std::size_t n, std::span<const unsigned> exponents) {
  if (exponents.empty()) throw DomainError("exponent list is empty");
  const ExactMatrix k = make_matrix<ExactScalar>(MatrixKind::Kmax, n);
  std::vector<PsdCertificate<ExactScalar>> out;
  out.reserve(exponents.size());
  for (unsigned r : exponents) out.push_back(psd_certificate(schur_power(k, r)));
  return out;
}

PsdCertificate<double> gram_min_check(std::span<const double> f, double tolerance) {
  if (f.empty()) throw DomainError("gram_min_check needs at least one value");
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (!(f[i] > 0.0)) throw DomainError("gram_min_check values must be positive");
    if (i > 0 && !(f[i] > f[i - 1]))
      throw DomainError("gram_min_check values must be strictly increasing");
  }
  FloatMatrix g(f.size());
  for (std::size_t i = 1; i <= f.size(); ++i)
    for (std::size_t j = 1; j <= f.size(); ++j) g(i, j) = std::min(f[i - 1], f[j - 1]);
  return psd_certificate(g, tolerance);
}

KernelFactorizationReport kernel_factorization_check(std::size_t n) {
  const ExactMatrix p = make_matrix<ExactScalar>(MatrixKind::P, n);
  const ExactMatrix k = make_matrix<ExactScalar>(MatrixKind::Kmax, n);
  const ExactMatrix d = make_matrix<ExactScalar>(MatrixKind::Dinv, n);
  const ExactMatrix mmin = make_matrix<ExactScalar>(MatrixKind::Mmin, n);
  const ExactMatrix lones = make_matrix<ExactScalar>(MatrixKind::Lones, n);

  KernelFactorizationReport report;
  report.n = n;
  report.k_equals_p_pt = matmul(p, transpose(p)) == k;
  report.k_equals_d_mmin_d = matmul(matmul(d, mmin), d) == k;
  report.mmin_equals_lones_lt = matmul(lones, transpose(lones)) == mmin;
  return report;
}

}  // namespace cesaro
