#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "cesaro/errors.hpp"
#include "cesaro/scalar.hpp"

namespace cesaro {

/// Square dense matrix with 1-based logical indexing. Storage is row-major and
/// 0-based internally; callers only ever see (i, j) with 1 <= i, j <= n.
template <class T>
class Matrix {
 public:
  using value_type = T;
  static constexpr ScalarMode mode = ScalarTraits<T>::mode;

  explicit Matrix(std::size_t n) : n_(n), entries_(n * n, T(0)) {
    if (n == 0) throw DomainError("matrix order must be at least 1");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 1; i <= n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix diagonal(std::span<const T> values) {
    Matrix m(values.size());
    for (std::size_t i = 1; i <= values.size(); ++i) m(i, i) = values[i - 1];
    return m;
  }

  std::size_t order() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i >= 1 && i <= n_ && j >= 1 && j <= n_);
    return entries_[(i - 1) * n_ + (j - 1)];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i >= 1 && i <= n_ && j >= 1 && j <= n_);
    return entries_[(i - 1) * n_ + (j - 1)];
  }

  /// Bounds-checked access; throws DomainError outside 1..n.
  const T& at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) {
      throw DomainError("index (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") outside matrix of order " + std::to_string(n_));
    }
    return (*this)(i, j);
  }

  std::span<const T> row_major() const noexcept { return entries_; }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t n_;
  std::vector<T> entries_;
};

using ExactMatrix = Matrix<ExactScalar>;
using FloatMatrix = Matrix<double>;

// ---------------------------------------------------------------------------
// Elementwise and structural helpers

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  const std::size_t n = a.order();
  Matrix<T> t(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) t(j, i) = a(i, j);
  return t;
}

template <class T>
void require_same_order(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.order() != b.order()) {
    throw ShapeError("order mismatch: " + std::to_string(a.order()) + " vs " +
                     std::to_string(b.order()));
  }
}

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  Matrix<T> c(n);
  // i-k-j order; zero entries of a are skipped, which matters for the
  // triangular and banded operands that dominate this library.
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = 1; k <= n; ++k) {
      const T& aik = a(i, k);
      if (ScalarTraits<T>::is_zero(aik)) continue;
      for (std::size_t j = 1; j <= n; ++j) {
        const T& bkj = b(k, j);
        if (ScalarTraits<T>::is_zero(bkj)) continue;
        c(i, j) += aik * bkj;
      }
    }
  }
  return c;
}

template <class T>
Matrix<T> add(const Matrix<T>& a, const Matrix<T>& b) {
  require_same_order(a, b);
  Matrix<T> c = a;
  for (std::size_t i = 1; i <= a.order(); ++i)
    for (std::size_t j = 1; j <= a.order(); ++j) c(i, j) += b(i, j);
  return c;
}

template <class T>
Matrix<T> subtract(const Matrix<T>& a, const Matrix<T>& b) {
  require_same_order(a, b);
  Matrix<T> c = a;
  for (std::size_t i = 1; i <= a.order(); ++i)
    for (std::size_t j = 1; j <= a.order(); ++j) c(i, j) -= b(i, j);
  return c;
}

template <class T>
Matrix<T> negate(const Matrix<T>& a) {
  Matrix<T> c(a.order());
  for (std::size_t i = 1; i <= a.order(); ++i)
    for (std::size_t j = 1; j <= a.order(); ++j) c(i, j) = -a(i, j);
  return c;
}

template <class T>
bool is_diagonal(const Matrix<T>& a) {
  for (std::size_t i = 1; i <= a.order(); ++i)
    for (std::size_t j = 1; j <= a.order(); ++j)
      if (i != j && !ScalarTraits<T>::is_zero(a(i, j))) return false;
  return true;
}

template <class T>
bool is_upper_triangular(const Matrix<T>& a) {
  for (std::size_t i = 2; i <= a.order(); ++i)
    for (std::size_t j = 1; j < i; ++j)
      if (!ScalarTraits<T>::is_zero(a(i, j))) return false;
  return true;
}

template <class T>
bool is_strictly_lower_triangular(const Matrix<T>& a) {
  for (std::size_t i = 1; i <= a.order(); ++i)
    for (std::size_t j = i; j <= a.order(); ++j)
      if (!ScalarTraits<T>::is_zero(a(i, j))) return false;
  return true;
}

template <class T>
bool is_symmetric(const Matrix<T>& a) {
  for (std::size_t i = 1; i <= a.order(); ++i)
    for (std::size_t j = i + 1; j <= a.order(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

template <class T>
std::vector<T> diagonal_of(const Matrix<T>& a) {
  std::vector<T> d;
  d.reserve(a.order());
  for (std::size_t i = 1; i <= a.order(); ++i) d.push_back(a(i, i));
  return d;
}

template <class T>
T off_diagonal_max(const Matrix<T>& a) {
  T m(0);
  for (std::size_t i = 1; i <= a.order(); ++i)
    for (std::size_t j = 1; j <= a.order(); ++j) {
      if (i == j) continue;
      T v = ScalarTraits<T>::abs(a(i, j));
      if (v > m) m = v;
    }
  return m;
}

template <class T>
T trace(const Matrix<T>& a) {
  T s(0);
  for (std::size_t i = 1; i <= a.order(); ++i) s += a(i, i);
  return s;
}

template <class T>
FloatMatrix to_float(const Matrix<T>& a) {
  FloatMatrix f(a.order());
  for (std::size_t i = 1; i <= a.order(); ++i)
    for (std::size_t j = 1; j <= a.order(); ++j)
      f(i, j) = ScalarTraits<T>::to_double(a(i, j));
  return f;
}

// ---------------------------------------------------------------------------
// Inversion and the nilpotent exponential

namespace detail {

// Lower score = better pivot. Exact mode prefers the shortest rational to
// limit coefficient growth; float mode prefers the largest magnitude.
inline double pivot_score(const ExactScalar& q) {
  return static_cast<double>(mpz_sizeinbase(q.get_num_mpz_t(), 2) +
                             mpz_sizeinbase(q.get_den_mpz_t(), 2));
}
inline double pivot_score(double x) { return -std::fabs(x); }

}  // namespace detail

/// Gauss-Jordan inversion with full pivoting. Exact in Exact mode.
/// Throws SingularMatrixError carrying the 1-based elimination step.
template <class T>
Matrix<T> invert(const Matrix<T>& a) {
  const std::size_t n = a.order();
  Matrix<T> work = a;
  Matrix<T> inv = Matrix<T>::identity(n);
  std::vector<std::pair<std::size_t, std::size_t>> column_swaps;

  double float_floor = 0.0;
  if constexpr (std::is_same_v<T, double>) {
    double scale = 0.0;
    for (double x : a.row_major()) scale = std::max(scale, std::fabs(x));
    float_floor = scale * static_cast<double>(n) * 1e-15;
  }

  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t pr = 0, pc = 0;
    double best = 0.0;
    for (std::size_t i = k; i <= n; ++i) {
      for (std::size_t j = k; j <= n; ++j) {
        const T& v = work(i, j);
        if (ScalarTraits<T>::is_zero(v)) continue;
        const double score = detail::pivot_score(v);
        if (pr == 0 || score < best) {
          best = score;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == 0) throw SingularMatrixError(k);
    if constexpr (std::is_same_v<T, double>) {
      if (std::fabs(work(pr, pc)) <= float_floor) throw SingularMatrixError(k);
    }

    if (pr != k) {
      for (std::size_t j = 1; j <= n; ++j) {
        std::swap(work(k, j), work(pr, j));
        std::swap(inv(k, j), inv(pr, j));
      }
    }
    if (pc != k) {
      for (std::size_t i = 1; i <= n; ++i) std::swap(work(i, k), work(i, pc));
      column_swaps.emplace_back(k, pc);
    }

    const T pivot = work(k, k);
    for (std::size_t j = 1; j <= n; ++j) {
      if (!ScalarTraits<T>::is_zero(work(k, j))) work(k, j) /= pivot;
      if (!ScalarTraits<T>::is_zero(inv(k, j))) inv(k, j) /= pivot;
    }
    for (std::size_t i = 1; i <= n; ++i) {
      if (i == k) continue;
      const T factor = work(i, k);
      if (ScalarTraits<T>::is_zero(factor)) continue;
      for (std::size_t j = 1; j <= n; ++j) {
        if (!ScalarTraits<T>::is_zero(work(k, j))) work(i, j) -= factor * work(k, j);
        if (!ScalarTraits<T>::is_zero(inv(k, j))) inv(i, j) -= factor * inv(k, j);
      }
    }
  }

  // R * A * Q = I, so A^{-1} = Q * R: undo the column swaps as row swaps,
  // most recent first.
  for (auto it = column_swaps.rbegin(); it != column_swaps.rend(); ++it) {
    for (std::size_t j = 1; j <= n; ++j) std::swap(inv(it->first, j), inv(it->second, j));
  }
  return inv;
}

/// sum_{k=0}^{n-1} L^k / k! for strictly lower-triangular L.
/// Throws DomainError for any nonzero entry on or above the diagonal.
template <class T>
Matrix<T> exp_nilpotent(const Matrix<T>& l) {
  if (!is_strictly_lower_triangular(l)) {
    throw DomainError("exp_nilpotent requires a strictly lower-triangular matrix");
  }
  const std::size_t n = l.order();
  Matrix<T> term = Matrix<T>::identity(n);
  Matrix<T> result = term;
  for (std::size_t k = 1; k < n; ++k) {
    term = matmul(term, l);
    const T divisor(static_cast<long>(k));
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (!ScalarTraits<T>::is_zero(term(i, j))) term(i, j) /= divisor;
    result = add(result, term);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Named matrices

/// Every named matrix this library builds. The source material reuses L, M
/// and Z for unrelated objects; the tags keep them apart.
enum class MatrixKind {
  P,        ///< anti-triangular Cesaro transition matrix, row i = 1/i on its last i columns
  Pinv,     ///< anti-bidiagonal inverse of P
  C,        ///< classic lower-triangular Cesaro matrix
  J,        ///< reverse identity
  Lnil,     ///< nilpotent generator, subdiagonal -1, -2, ..., 1-n
  V,        ///< exp(Lnil): signed Pascal matrix
  Vinv,     ///< exp(-Lnil): unsigned Pascal matrix
  B,        ///< V P^{-2} V^{-1}, upper bidiagonal
  Mcoef,    ///< unit lower-triangular eigenvector coefficients of B^T
  S,        ///< Mcoef^T
  Zrev,     ///< J P J
  Mmin,     ///< [min(i, j)]
  Kmax,     ///< [1 / max(i, j)]
  Lones,    ///< all-ones lower-triangular Cholesky factor of Mmin
  MminInv,  ///< tridiagonal inverse of Mmin
  W,        ///< P^{-1} P^{-T}
  Dinv,     ///< Diag(1/i)
};

inline constexpr MatrixKind kAllMatrixKinds[] = {
    MatrixKind::P,    MatrixKind::Pinv,  MatrixKind::C,     MatrixKind::J,
    MatrixKind::Lnil, MatrixKind::V,     MatrixKind::Vinv,  MatrixKind::B,
    MatrixKind::Mcoef, MatrixKind::S,    MatrixKind::Zrev,  MatrixKind::Mmin,
    MatrixKind::Kmax, MatrixKind::Lones, MatrixKind::MminInv, MatrixKind::W,
    MatrixKind::Dinv};

std::string_view to_string(MatrixKind kind);
/// Throws DomainError for an unknown name.
MatrixKind parse_matrix_kind(std::string_view name);

/// Closed-form constructor for each kind. Throws DomainError for n < 1.
template <class T>
Matrix<T> make_matrix(MatrixKind kind, std::size_t n);

extern template ExactMatrix make_matrix<ExactScalar>(MatrixKind, std::size_t);
extern template FloatMatrix make_matrix<double>(MatrixKind, std::size_t);

/// Entry m_{kj} of Mcoef: (j+1)_{k-j} (n-k+1)_{k-j} / ((2j+1)_{k-j} (k-j)!), k >= j.
ExactScalar mcoef_entry(std::size_t n, std::size_t k, std::size_t j);

// ---------------------------------------------------------------------------
// Mode-erased matrix for runtime-selected scalar modes (CLI, serialization)

using DenseMatrix = std::variant<ExactMatrix, FloatMatrix>;

DenseMatrix make_matrix(MatrixKind kind, std::size_t n, ScalarMode mode);
ScalarMode mode_of(const DenseMatrix& m);
std::size_t order_of(const DenseMatrix& m);
/// Throws ShapeError when the modes or orders differ.
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix invert(const DenseMatrix& a);

}  // namespace cesaro
