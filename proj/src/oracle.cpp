#include "cesaro/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace cesaro {

namespace {

double max_abs(const FloatMatrix& a) {
  double m = 0.0;
  for (double x : a.row_major()) m = std::max(m, std::fabs(x));
  return m;
}

void require_float_symmetric(const FloatMatrix& a) {
  const double scale = max_abs(a);
  for (std::size_t i = 1; i <= a.order(); ++i)
    for (std::size_t j = i + 1; j <= a.order(); ++j)
      if (std::fabs(a(i, j) - a(j, i)) > 1e-12 * scale)
        throw DomainError("matrix is not symmetric");
}

}  // namespace

SymmetricEigen symmetric_eig_reference(const FloatMatrix& input, double tol, int max_sweeps) {
  require_float_symmetric(input);
  const std::size_t n = input.order();
  // Work 0-based on raw arrays; the rotation kernel is the hot loop.
  std::vector<double> a(input.row_major().begin(), input.row_major().end());
  std::vector<double> q(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) q[i * n + i] = 1.0;
  auto A = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

  const double threshold = tol * std::max(max_abs(input), 1e-300);
  auto off_max = [&] {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m = std::max(m, std::fabs(A(i, j)));
    return m;
  };

  int sweep = 0;
  double off = off_max();
  while (off > threshold) {
    if (sweep >= max_sweeps) throw ConvergenceError("Jacobi sweeps exhausted", off);
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t r = p + 1; r < n; ++r) {
        const double apr = A(p, r);
        if (std::fabs(apr) <= threshold * 1e-3) continue;
        const double app = A(p, p), arr = A(r, r);
        const double theta = (arr - app) / (2.0 * apr);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = A(k, p), akr = A(k, r);
          A(k, p) = c * akp - s * akr;
          A(k, r) = s * akp + c * akr;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = A(p, k), ark = A(r, k);
          A(p, k) = c * apk - s * ark;
          A(r, k) = s * apk + c * ark;
        }
        A(p, r) = 0.0;
        A(r, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double qkp = q[k * n + p], qkr = q[k * n + r];
          q[k * n + p] = c * qkp - s * qkr;
          q[k * n + r] = s * qkp + c * qkr;
        }
      }
    }
    off = off_max();
  }

  // Ascending eigenvalues; exact ties broken by lexicographic eigenvector order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (A(x, x) != A(y, y)) return A(x, x) < A(y, y);
    for (std::size_t k = 0; k < n; ++k) {
      if (q[k * n + x] != q[k * n + y]) return q[k * n + x] < q[k * n + y];
    }
    return x < y;
  });

  SymmetricEigen out{std::vector<double>(n), FloatMatrix(n), sweep};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = A(order[k], order[k]);
    for (std::size_t i = 0; i < n; ++i) out.vectors(i + 1, k + 1) = q[i * n + order[k]];
  }
  return out;
}

double power_iteration_max(const FloatMatrix& a, double tol, int max_iters, std::uint64_t seed) {
  require_float_symmetric(a);
  const std::size_t n = a.order();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.5, 1.5);
  std::vector<double> x(n), y(n);
  for (double& v : x) v = dist(rng);

  auto normalize = [](std::vector<double>& v) {
    double s = 0.0;
    for (double e : v) s += e * e;
    s = std::sqrt(s);
    if (s == 0.0) return false;
    for (double& e : v) e /= s;
    return true;
  };
  auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
    const auto data = a.row_major();
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      const double* row = data.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) s += row[j] * in[j];
      out[i] = s;
    }
  };

  normalize(x);
  double rho = 0.0;
  for (int it = 1; it <= max_iters; ++it) {
    apply(x, y);
    double next = 0.0;
    for (std::size_t i = 0; i < n; ++i) next += x[i] * y[i];
    if (!normalize(y)) return 0.0;  // x spans the kernel; only possible for A = 0 here
    std::swap(x, y);
    if (it > 1 && std::fabs(next - rho) <= tol * std::fabs(next)) return next;
    rho = next;
  }
  throw ConvergenceError("power iteration did not converge", rho);
}

}  // namespace cesaro
