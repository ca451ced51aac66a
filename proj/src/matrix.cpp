#include "cesaro/matrix.hpp"

#include <array>
#include <cmath>
#include <string>

namespace cesaro {

namespace {

struct KindName {
  MatrixKind kind;
  std::string_view name;
};

constexpr std::array<KindName, 17> kKindNames{{
    {MatrixKind::P, "P"},         {MatrixKind::Pinv, "Pinv"},
    {MatrixKind::C, "C"},         {MatrixKind::J, "J"},
    {MatrixKind::Lnil, "Lnil"},   {MatrixKind::V, "V"},
    {MatrixKind::Vinv, "Vinv"},   {MatrixKind::B, "B"},
    {MatrixKind::Mcoef, "Mcoef"}, {MatrixKind::S, "S"},
    {MatrixKind::Zrev, "Zrev"},   {MatrixKind::Mmin, "Mmin"},
    {MatrixKind::Kmax, "Kmax"},   {MatrixKind::Lones, "Lones"},
    {MatrixKind::MminInv, "MminInv"}, {MatrixKind::W, "W"},
    {MatrixKind::Dinv, "Dinv"},
}};

long as_long(std::size_t v) { return static_cast<long>(v); }

// The Mcoef formula in floating point, as a running product of per-step ratios so the
// individual Pochhammer factors never overflow.
double mcoef_entry_float(std::size_t n, std::size_t k, std::size_t j) {
  double v = 1.0;
  const std::size_t steps = k - j;
  for (std::size_t t = 0; t < steps; ++t) {
    const double up1 = static_cast<double>(j + 1 + t);
    const double up2 = static_cast<double>(n - k + 1 + t);
    const double down1 = static_cast<double>(2 * j + 1 + t);
    const double down2 = static_cast<double>(t + 1);
    v *= (up1 / down1) * (up2 / down2);
  }
  return v;
}

template <class T>
T mcoef_value(std::size_t n, std::size_t k, std::size_t j) {
  if constexpr (std::is_same_v<T, double>) {
    return mcoef_entry_float(n, k, j);
  } else {
    return mcoef_entry(n, k, j);
  }
}

}  // namespace

std::string_view to_string(MatrixKind kind) {
  for (const auto& kn : kKindNames)
    if (kn.kind == kind) return kn.name;
  return "?";
}

MatrixKind parse_matrix_kind(std::string_view name) {
  for (const auto& kn : kKindNames)
    if (kn.name == name) return kn.kind;
  throw DomainError("unknown matrix kind '" + std::string(name) + "'");
}

ExactScalar mcoef_entry(std::size_t n, std::size_t k, std::size_t j) {
  if (j < 1 || k < j || k > n) return ExactScalar(0);
  const unsigned long d = k - j;
  ExactScalar num = pochhammer(as_long(j + 1), d) * pochhammer(as_long(n - k + 1), d);
  ExactScalar den = pochhammer(as_long(2 * j + 1), d) * pochhammer(1, d);
  ExactScalar v = num / den;
  return v;
}

template <class T>
Matrix<T> make_matrix(MatrixKind kind, std::size_t n) {
  if (n < 1) throw DomainError("matrix order must be at least 1");
  using Tr = ScalarTraits<T>;
  Matrix<T> m(n);
  const long nl = as_long(n);

  switch (kind) {
    case MatrixKind::P:
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = n - i + 1; j <= n; ++j) m(i, j) = Tr::from_ratio(1, as_long(i));
      break;
    case MatrixKind::Pinv:
      // Row i: n-i+1 on the anti-diagonal, -(n-i) just left of it.
      for (std::size_t i = 1; i <= n; ++i) {
        m(i, n - i + 1) = Tr::from_ratio(nl - as_long(i) + 1);
        if (i < n) m(i, n - i) = Tr::from_ratio(-(nl - as_long(i)));
      }
      break;
    case MatrixKind::C:
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= i; ++j) m(i, j) = Tr::from_ratio(1, as_long(i));
      break;
    case MatrixKind::J:
      for (std::size_t i = 1; i <= n; ++i) m(i, n - i + 1) = T(1);
      break;
    case MatrixKind::Lnil:
      for (std::size_t i = 2; i <= n; ++i) m(i, i - 1) = Tr::from_ratio(-(as_long(i) - 1));
      break;
    case MatrixKind::V:
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= i; ++j) {
          ExactScalar c = binomial(i - 1, j - 1);
          if ((i - j) % 2 == 1) c = -c;
          m(i, j) = Tr::from_exact(c);
        }
      break;
    case MatrixKind::Vinv:
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= i; ++j) m(i, j) = Tr::from_exact(binomial(i - 1, j - 1));
      break;
    case MatrixKind::B:
      for (std::size_t k = 1; k <= n; ++k) {
        const long kl = as_long(k);
        m(k, k) = Tr::from_ratio(kl * kl);
        if (k < n) m(k, k + 1) = Tr::from_ratio(-(kl + 1) * (nl - kl));
      }
      break;
    case MatrixKind::Mcoef:
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t j = 1; j <= k; ++j) m(k, j) = mcoef_value<T>(n, k, j);
      break;
    case MatrixKind::S:
      for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t j = 1; j <= k; ++j) m(j, k) = mcoef_value<T>(n, k, j);
      break;
    case MatrixKind::Zrev:
      // J P J: row i is 1/(n-i+1) on its first n-i+1 columns.
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n - i + 1; ++j) m(i, j) = Tr::from_ratio(1, nl - as_long(i) + 1);
      break;
    case MatrixKind::Mmin:
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) m(i, j) = Tr::from_ratio(as_long(std::min(i, j)));
      break;
    case MatrixKind::Kmax:
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) m(i, j) = Tr::from_ratio(1, as_long(std::max(i, j)));
      break;
    case MatrixKind::Lones:
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= i; ++j) m(i, j) = T(1);
      break;
    case MatrixKind::MminInv:
      for (std::size_t i = 1; i <= n; ++i) {
        m(i, i) = Tr::from_ratio(i == n ? 1 : 2);
        if (i < n) {
          m(i, i + 1) = Tr::from_ratio(-1);
          m(i + 1, i) = Tr::from_ratio(-1);
        }
      }
      break;
    case MatrixKind::W:
      for (std::size_t i = 1; i <= n; ++i) {
        const long r = nl - as_long(i);
        m(i, i) = Tr::from_ratio(2 * r * (r + 1) + 1);
        if (i < n) {
          m(i, i + 1) = Tr::from_ratio(-r * r);
          m(i + 1, i) = Tr::from_ratio(-r * r);
        }
      }
      break;
    case MatrixKind::Dinv:
      for (std::size_t i = 1; i <= n; ++i) m(i, i) = Tr::from_ratio(1, as_long(i));
      break;
  }
  return m;
}

template ExactMatrix make_matrix<ExactScalar>(MatrixKind, std::size_t);
template FloatMatrix make_matrix<double>(MatrixKind, std::size_t);

DenseMatrix make_matrix(MatrixKind kind, std::size_t n, ScalarMode mode) {
  if (mode == ScalarMode::Exact) return make_matrix<ExactScalar>(kind, n);
  return make_matrix<double>(kind, n);
}

ScalarMode mode_of(const DenseMatrix& m) {
  return std::holds_alternative<ExactMatrix>(m) ? ScalarMode::Exact : ScalarMode::Float;
}

std::size_t order_of(const DenseMatrix& m) {
  return std::visit([](const auto& x) { return x.order(); }, m);
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.index() != b.index()) throw ShapeError("scalar mode mismatch in matmul");
  if (const auto* ea = std::get_if<ExactMatrix>(&a)) return matmul(*ea, std::get<ExactMatrix>(b));
  return matmul(std::get<FloatMatrix>(a), std::get<FloatMatrix>(b));
}

DenseMatrix invert(const DenseMatrix& a) {
  return std::visit([](const auto& x) -> DenseMatrix { return invert(x); }, a);
}

}  // namespace cesaro
