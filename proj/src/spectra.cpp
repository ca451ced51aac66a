#include "cesaro/spectra.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cesaro {

namespace {

void require_order(std::size_t n) {
  if (n < 1) throw DomainError("order must be at least 1");
}

template <class T>
std::vector<T> eigenvalues_for(MatrixKind kind, std::size_t n) {
  using Tr = ScalarTraits<T>;
  std::vector<T> values;
  values.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const long il = static_cast<long>(i);
    const long sign = (i % 2 == 1) ? 1 : -1;
    switch (kind) {
      case MatrixKind::P:
      case MatrixKind::Zrev:
        values.push_back(Tr::from_ratio(sign, il));
        break;
      case MatrixKind::Pinv:
        values.push_back(Tr::from_ratio(sign * il));
        break;
      case MatrixKind::C:
        values.push_back(Tr::from_ratio(1, il));
        break;
      case MatrixKind::B:
        values.push_back(Tr::from_ratio(il * il));
        break;
      default:
        throw DomainError("no closed-form diagonalization for kind " +
                          std::string(to_string(kind)));
    }
  }
  return values;
}

// Rows of T scaled by their eigenvalues: Lambda T.
template <class T>
Matrix<T> scale_rows(const std::vector<T>& lambda, const Matrix<T>& t) {
  Matrix<T> out = t;
  for (std::size_t i = 1; i <= t.order(); ++i)
    for (std::size_t j = 1; j <= t.order(); ++j) out(i, j) *= lambda[i - 1];
  return out;
}

}  // namespace

std::vector<ExactScalar> closed_eigenvalues_P(std::size_t n) {
  require_order(n);
  return eigenvalues_for<ExactScalar>(MatrixKind::P, n);
}

template <class T>
Matrix<T> diagonalizer_T(std::size_t n) {
  require_order(n);
  return matmul(make_matrix<T>(MatrixKind::S, n), make_matrix<T>(MatrixKind::V, n));
}

template ExactMatrix diagonalizer_T<ExactScalar>(std::size_t);
template FloatMatrix diagonalizer_T<double>(std::size_t);

template <class T>
SpectralDecomposition<T> diagonalize(MatrixKind kind, std::size_t n) {
  require_order(n);
  std::vector<T> lambda = eigenvalues_for<T>(kind, n);

  Matrix<T> t(n);
  switch (kind) {
    case MatrixKind::P:
    case MatrixKind::Pinv:
      t = diagonalizer_T<T>(n);
      break;
    case MatrixKind::C:
      t = make_matrix<T>(MatrixKind::V, n);
      break;
    case MatrixKind::B:
      t = make_matrix<T>(MatrixKind::S, n);
      break;
    case MatrixKind::Zrev:
      t = matmul(diagonalizer_T<T>(n), make_matrix<T>(MatrixKind::J, n));
      break;
    default:
      break;  // unreachable: eigenvalues_for already rejected the kind
  }

  const Matrix<T> a = make_matrix<T>(kind, n);
  SpectralDecomposition<T> out{kind, n, std::move(lambda), std::move(t), 0.0};

  if constexpr (std::is_same_v<T, ExactScalar>) {
    // Every diagonalizer above is a product of unit triangular matrices and a
    // permutation, so it is invertible; T A == Lambda T is then equivalent to
    // T A T^{-1} == Lambda without forming the inverse.
    if (matmul(out.diagonalizer, a) != scale_rows(out.eigenvalues, out.diagonalizer)) {
      throw InconsistencyError("closed-form diagonalizer failed exact check for " +
                               std::string(to_string(kind)) + " at n=" + std::to_string(n));
    }
  } else {
    const FloatMatrix conj = matmul(matmul(out.diagonalizer, a), invert(out.diagonalizer));
    out.residual = off_diagonal_max(conj);
  }
  return out;
}

template SpectralDecomposition<ExactScalar> diagonalize<ExactScalar>(MatrixKind, std::size_t);
template SpectralDecomposition<double> diagonalize<double>(MatrixKind, std::size_t);

AnyDecomposition diagonalize(MatrixKind kind, std::size_t n, ScalarMode mode) {
  if (mode == ScalarMode::Exact) return diagonalize<ExactScalar>(kind, n);
  return diagonalize<double>(kind, n);
}

double min_kernel_eigenvalue(std::size_t n, std::size_t k) {
  require_order(n);
  if (k < 1 || k > n) throw DomainError("eigenvalue index out of range");
  const double half_theta =
      static_cast<double>(k) * std::numbers::pi / static_cast<double>(2 * n + 1);
  const double c = std::cos(half_theta);
  return 1.0 / (4.0 * c * c);
}

FloatMatrix min_kernel_eigenvectors(std::size_t n) {
  require_order(n);
  FloatMatrix v(n);
  const double scale = 2.0 / std::sqrt(static_cast<double>(2 * n + 1));
  const double denom = static_cast<double>(2 * n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t j = 1; j <= n; ++j) {
      // Reduce j*2k modulo 2(2n+1) in integers before scaling, keeping the
      // sine argument in [0, 2 pi).
      const std::size_t m = (j * 2 * k) % (2 * (2 * n + 1));
      const double s = std::sin(static_cast<double>(m) * std::numbers::pi / denom);
      v(j, k) = (j % 2 == 1 ? scale : -scale) * s;
    }
  }
  return v;
}

FloatMatrix min_kernel_sine_matrix(std::size_t n) {
  require_order(n);
  FloatMatrix v(n);
  const double scale = 2.0 / std::sqrt(static_cast<double>(2 * n + 1));
  const double denom = static_cast<double>(2 * n + 1);
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t k = 1; k <= n; ++k) {
      // (k - 1/2) theta_j = (2k - 1) j pi / (2n + 1)
      const std::size_t m = ((2 * k - 1) * j) % (2 * (2 * n + 1));
      v(j, k) = scale * std::sin(static_cast<double>(m) * std::numbers::pi / denom);
    }
  return v;
}

double min_kernel_eigenpair_residual(const FloatMatrix& vectors,
                                     const std::vector<double>& eigenvalues) {
  const std::size_t n = vectors.order();
  if (eigenvalues.size() != n) throw ShapeError("eigenvalue count does not match order");
  std::vector<double> suffix(n + 2, 0.0);
  double worst = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    // (Mmin x)_i = sum_{j<=i} j x_j + i * sum_{j>i} x_j
    suffix[n + 1] = 0.0;
    for (std::size_t j = n; j >= 1; --j) suffix[j] = suffix[j + 1] + vectors(j, k);
    double prefix = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
      prefix += static_cast<double>(i) * vectors(i, k);
      const double mx = prefix + static_cast<double>(i) * suffix[i + 1];
      worst = std::max(worst, std::fabs(mx - eigenvalues[k - 1] * vectors(i, k)));
    }
  }
  return worst;
}

SpectralDecomposition<double> min_kernel_spectrum(std::size_t n) {
  require_order(n);
  std::vector<double> lambda(n);
  for (std::size_t k = 1; k <= n; ++k) lambda[k - 1] = min_kernel_eigenvalue(n, k);
  FloatMatrix v = min_kernel_eigenvectors(n);
  const double residual = min_kernel_eigenpair_residual(v, lambda);
  return SpectralDecomposition<double>{MatrixKind::Mmin, n, std::move(lambda), transpose(v),
                                       residual};
}

StationaryDistribution stationary_distribution(std::size_t n) {
  require_order(n);
  const ExactMatrix t = diagonalizer_T<ExactScalar>(n);
  ExactScalar total = 0;
  for (std::size_t j = 1; j <= n; ++j) total += t(1, j);
  if (sgn(total) == 0) throw InconsistencyError("leading left eigenvector has zero mass");

  StationaryDistribution pi{n, {}};
  pi.weights.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) {
    ExactScalar w = t(1, j) / total;
    pi.weights.push_back(w);
  }

  const ExactMatrix p = make_matrix<ExactScalar>(MatrixKind::P, n);
  for (std::size_t j = 1; j <= n; ++j) {
    ExactScalar s = 0;
    for (std::size_t i = 1; i <= n; ++i) s += pi.weights[i - 1] * p(i, j);
    if (s != pi.weights[j - 1]) {
      throw InconsistencyError("stationary distribution failed pi P = pi at n=" +
                               std::to_string(n));
    }
  }
  return pi;
}

}  // namespace cesaro
