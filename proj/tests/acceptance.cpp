// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cesaro/bounds.hpp"
#include "cesaro/kernels.hpp"
#include "cesaro/oracle.hpp"
#include "cesaro/spectra.hpp"
#include "cli_runner.hpp"
#include "oracles.hpp"

using namespace cesaro;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

ExactMatrix mk(MatrixKind kind, std::size_t n) { return make_matrix<ExactScalar>(kind, n); }

ExactMatrix diag(std::size_t n, const std::function<ExactScalar(long)>& f) {
  std::vector<ExactScalar> d(n);
  for (std::size_t i = 1; i <= n; ++i) d[i - 1] = f(static_cast<long>(i));
  return ExactMatrix::diagonal(d);
}

ExactScalar alternating_reciprocal(long i) { return make_rational(i % 2 == 1 ? 1 : -1, i); }

// Fills `why` with the first failing check; returns false on failure.
struct Checker {
  std::string why;
  bool operator()(bool ok, const std::string& what, std::size_t n) {
    if (!ok && why.empty()) why = what + " (n = " + std::to_string(n) + ")";
    return ok;
  }
};

bool criterion1(std::string& detail) {
  const auto t0 = Clock::now();
  Checker c;
  for (std::size_t n = 1; n <= 40; ++n) {
    const ExactMatrix p = mk(MatrixKind::P, n), v = mk(MatrixKind::V, n),
                      vinv = mk(MatrixKind::Vinv, n), b = mk(MatrixKind::B, n),
                      s = mk(MatrixKind::S, n), cc = mk(MatrixKind::C, n),
                      j = mk(MatrixKind::J, n), zrev = mk(MatrixKind::Zrev, n);
    const ExactMatrix pinv = invert(p);
    const ExactMatrix tri = matmul(matmul(v, pinv), vinv);
    bool ok = is_upper_triangular(tri);
    for (std::size_t i = 1; i <= n; ++i)
      ok = ok && tri(i, i) == ExactScalar(i % 2 == 1 ? long(i) : -long(i));
    c(ok, "V P^-1 V^-1 upper-triangular with diagonal (-1)^(i+1) i", n);
    c(matmul(matmul(v, matmul(pinv, pinv)), vinv) == b, "V P^-2 V^-1 = B", n);
    c(matmul(matmul(s, b), invert(s)) == diag(n, [](long i) { return ExactScalar(i * i); }),
      "S B S^-1 = Diag(i^2)", n);
    const ExactMatrix t = matmul(s, v);
    const ExactMatrix alt = diag(n, alternating_reciprocal);
    c(matmul(matmul(t, p), invert(t)) == alt, "T P T^-1 = Diag((-1)^(i+1)/i)", n);
    c(matmul(matmul(v, cc), vinv) == diag(n, [](long i) { return make_rational(1, i); }),
      "V C V^-1 = Diag(1/i)", n);
    const ExactMatrix tj = matmul(t, j);
    c(matmul(matmul(tj, zrev), invert(tj)) == alt, "(T J) Zrev (T J)^-1 = Diag((-1)^(i+1)/i)", n);
  }
  const double secs = since(t0);
  c(secs < 60.0, "runtime under 60 s", 40);
  detail = c.why.empty() ? "n = 1..40, " + std::to_string(secs) + " s" : c.why;
  return c.why.empty();
}

bool criterion2(std::string& detail) {
  Checker c;
  for (std::size_t n = 1; n <= 40; ++n) {
    const ExactMatrix p = mk(MatrixKind::P, n), k = mk(MatrixKind::Kmax, n),
                      mmin = mk(MatrixKind::Mmin, n), d = mk(MatrixKind::Dinv, n),
                      lones = mk(MatrixKind::Lones, n), j = mk(MatrixKind::J, n),
                      w = mk(MatrixKind::W, n);
    c(matmul(p, transpose(p)) == k, "K = P P^T", n);
    c(matmul(matmul(d, mmin), d) == k, "K = D Mmin D", n);
    c(matmul(lones, transpose(lones)) == mmin, "Mmin = Lones Lones^T", n);
    // Tridiagonal inverse: 2 on the diagonal except 1 in the last slot, -1 beside it.
    ExactMatrix minv(n);
    for (std::size_t i = 1; i <= n; ++i) {
      minv(i, i) = i == n ? 1 : 2;
      if (i > 1) minv(i, i - 1) = minv(i - 1, i) = -1;
    }
    c(invert(mmin) == minv, "Mmin^-1 tridiagonal", n);
    ExactScalar h = 0;
    for (long i = 1; i <= long(n); ++i) h += make_rational(1, i);
    c(trace(k) == h, "trace(K) = H_n", n);
    const ExactMatrix e = subtract(ExactMatrix::identity(n), matmul(j, p));
    c(matmul(e, transpose(e)) ==
          diag(n, [n](long jj) { return make_rational(long(n) - jj, long(n) - jj + 1); }),
      "(I - JP)(I - JP)^T = Diag((n-j)/(n-j+1))", n);
    const ExactMatrix pinv = invert(p);
    ExactMatrix disp(n);
    for (std::size_t i = 1; i <= n; ++i) {
      const long m = long(n) - long(i);
      disp(i, i) = 2 * m * (m + 1) + 1;
      if (i < n) disp(i, i + 1) = disp(i + 1, i) = -(m * m);
    }
    c(matmul(pinv, transpose(pinv)) == w && w == disp, "W = P^-1 P^-T, tridiagonal display", n);
  }
  detail = c.why.empty() ? "n = 1..40, zero tolerance" : c.why;
  return c.why.empty();
}

bool criterion3(std::string& detail) {
  const auto t0 = Clock::now();
  Checker c;
  {
    const std::size_t n = 200;
    const auto ref = symmetric_eig_reference(make_matrix<double>(MatrixKind::Mmin, n));
    double worst = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      const double closed = 1.0 / (2.0 + 2.0 * std::cos(2.0 * k * std::numbers::pi / (2 * n + 1)));
      worst = std::max(worst, std::fabs(closed - ref.values[k - 1]) / ref.values[k - 1]);
      c(std::fabs(min_kernel_eigenvalue(n, k) - closed) <= 1e-10 * closed, "closed form evaluation", n);
    }
    c(worst <= 1e-10, "eigenvalues vs reference, rel err " + std::to_string(worst), n);
  }
  double resid = 0, orth = 0;
  {
    const std::size_t n = 1000;
    const FloatMatrix vec = min_kernel_eigenvectors(n);
    // Dense min(i,j) product through prefix sums: (M v)_i = sum_{j<=i} j v_j + i sum_{j>i} v_j.
    for (std::size_t k = 1; k <= n; ++k) {
      const double lam = min_kernel_eigenvalue(n, k);
      std::vector<double> x(n);
      for (std::size_t i = 1; i <= n; ++i) x[i - 1] = vec(i, k);
      std::vector<double> tail(n + 1, 0.0);
      for (std::size_t i = n; i >= 1; --i) tail[i - 1] = tail[i] + x[i - 1];
      double head = 0;
      for (std::size_t i = 1; i <= n; ++i) {
        head += double(i) * x[i - 1];
        const double mv = head + double(i) * tail[i];
        resid = std::max(resid, std::fabs(mv - lam * x[i - 1]));
      }
    }
    const FloatMatrix g = matmul(transpose(vec), vec);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) orth = std::max(orth, std::fabs(g(i, j) - (i == j)));
    c(resid <= 1e-8 * double(n), "eigenpair residual " + std::to_string(resid), n);
    c(orth <= 1e-10, "orthonormality " + std::to_string(orth), n);
  }
  const double secs = since(t0);
  c(secs < 120.0, "runtime under 120 s", 1000);
  char buf[160];
  std::snprintf(buf, sizeof buf, "n=1000 residual %.3g, orth %.3g, %.1f s", resid, orth, secs);
  detail = c.why.empty() ? buf : c.why;
  return c.why.empty();
}

bool criterion4(std::string& detail) {
  Checker c;
  std::ostringstream os;
  for (std::size_t n : {10u, 100u, 1000u}) {
    const double k = power_iteration_max(make_matrix<double>(MatrixKind::Kmax, n));
    c(k >= 1.0 && k <= 4.0, "lambda_max(K) in [1, 4]", n);
    const double w = power_iteration_max(make_matrix<double>(MatrixKind::W, n));
    const GershgorinCertificate g = gershgorin_W(n);
    const mpz_class nn = static_cast<unsigned long>(n);
    const mpz_class quartic = 4 * nn * nn - 6 * nn + 3;
    c(w <= g.bound.get_d() * (1 + 1e-12), "lambda_max(W) <= gersh", n);
    c(g.bound <= quartic && quartic <= 4 * nn * nn, "gersh <= 4n^2-6n+3 <= 4n^2", n);
    os << "n=" << n << " K " << k << " W " << w << " gersh " << g.bound.get_str() << "; ";
  }
  detail = c.why.empty() ? os.str() : c.why;
  return c.why.empty();
}

bool criterion5(std::string& detail) {
  Checker c;
  const double rs[] = {0.1, 0.5, 1.0, 1.5, 2.5, std::numbers::pi};
  double worst = INFINITY;
  for (std::size_t n = 1; n <= 64; ++n) {
    const FloatMatrix k = make_matrix<double>(MatrixKind::Kmax, n);
    for (double r : rs) {
      const FloatMatrix kr = schur_power(k, r);
      double scale = 0;
      for (std::size_t i = 1; i <= n; ++i) scale = std::max(scale, kr(i, i));
      const auto cert = psd_certificate(kr, 1e-9);
      const double mp = cert.min_pivot() / scale;
      worst = std::min(worst, mp);
      c(cert.is_psd() && cert.min_pivot() >= -1e-9 * scale, "float pivots, r = " + std::to_string(r), n);
    }
  }
  const unsigned ints[] = {1, 2, 3};
  for (std::size_t n = 1; n <= 16; ++n)
    for (const auto& cert : infinite_divisibility_sweep_exact(n, ints))
      c(cert.is_psd() && sgn(cert.min_pivot()) >= 0, "exact integer power", n);
  char buf[96];
  std::snprintf(buf, sizeof buf, "min relative pivot %.3g", worst);
  detail = c.why.empty() ? buf : c.why;
  return c.why.empty();
}

bool criterion6(std::string& detail) {
  Checker c;
  for (std::size_t n = 1; n <= 100; ++n) {
    const auto pi = stationary_distribution(n).weights;
    const ExactMatrix p = mk(MatrixKind::P, n);
    ExactScalar total = 0;
    for (const auto& x : pi) total += x;
    bool fixed = true;
    for (std::size_t col = 1; col <= n; ++col) {
      ExactScalar acc = 0;
      for (std::size_t i = 1; i <= n; ++i) acc += pi[i - 1] * p(i, col);
      fixed = fixed && acc == pi[col - 1];
    }
    c(fixed, "pi P = pi", n);
    c(total == 1, "sum pi = 1", n);
  }
  for (std::size_t n : {2u, 3u}) {
    const auto pi = stationary_distribution(n).weights;
    const auto solved = oracle::stationary_by_elimination(n);
    c(std::equal(pi.begin(), pi.end(), solved.begin()), "matches elimination", n);
  }
  const auto p2 = stationary_distribution(2).weights;
  const auto p3 = stationary_distribution(3).weights;
  c(p2 == std::vector<ExactScalar>{make_rational(1, 3), make_rational(2, 3)}, "values", 2);
  c(p3 == std::vector<ExactScalar>{make_rational(1, 6), make_rational(1, 3), make_rational(1, 2)},
    "values", 3);
  detail = c.why.empty() ? "n = 1..100 exact; (1/3, 2/3), (1/6, 1/3, 1/2)" : c.why;
  return c.why.empty();
}

bool criterion7(std::string& detail) {
  const std::size_t side = 6;
  int runs = 0;
  for (const char* kind : {"P", "B", "Mcoef", "V"}) {
    for (std::size_t i = 1; i <= side; ++i) {
      for (std::size_t j = 1; j <= side; ++j) {
        const std::string spec = std::string(kind) + ":" + std::to_string(i) + ":" + std::to_string(j);
        const auto r = cli::run("verify --n-max 8 --perturb " + spec);
        ++runs;
        if (r.status != 1 || r.out.find("verification FAILED: ") == std::string::npos) {
          detail = spec + " not detected (exit " + std::to_string(r.status) + ")";
          return false;
        }
      }
    }
  }
  if (cli::run("verify --n-max 8").status != 0) {
    detail = "clean run did not exit 0";
    return false;
  }
  detail = std::to_string(runs) + " single-entry perturbations, each exits 1 naming an identity";
  return true;
}

bool criterion8(std::string& detail) {
  const auto t0 = Clock::now();
  const auto r = cli::run("bench --kind Mmin --n-list 4096 --repeat 1 --ref-max 0");
  const double wall = since(t0);
  const auto ref = cli::run("bench --kind Mmin --n-list 256,512 --repeat 1 --ref-max 512");
  if (r.status != 0 || ref.status != 0) {
    detail = "bench exited nonzero";
    return false;
  }
  double closed = -1;
  std::string reference;
  for (const std::string* text : {&r.out, &ref.out}) {
    std::istringstream is(*text);
    std::string line;
    std::getline(is, line);
    if (line != "kind,n,method,median_seconds,residual") {
      detail = "bad CSV header: " + line;
      return false;
    }
    while (std::getline(is, line)) {
      std::vector<std::string> f;
      std::stringstream ls(line);
      for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
      if (f.size() != 5 || f[0] != "Mmin") {
        detail = "bad CSV row: " + line;
        return false;
      }
      const double secs = std::stod(f[3]);
      std::stod(f[4]);
      if (f[1] == "4096" && f[2] == "closed_form") closed = secs;
      if (f[2] == "jacobi_reference") reference += " jacobi n=" + f[1] + " " + f[3] + " s;";
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "closed form n=4096 %.3f s (process %.3f s);", closed, wall);
  detail = buf + reference;
  return closed >= 0 && closed < 5.0 && wall < 5.0;
}

}  // namespace

int main() {
  struct Entry {
    const char* title;
    bool (*fn)(std::string&);
  };
  const Entry entries[] = {
      {"exact diagonalization suite, n <= 40", criterion1},
      {"exact kernel and bound identities, n <= 40", criterion2},
      {"min-kernel closed spectrum", criterion3},
      {"norm bounds at n = 10, 100, 1000", criterion4},
      {"infinite divisibility", criterion5},
      {"stationary distribution", criterion6},
      {"fault injection", criterion7},
      {"bench", criterion8},
  };
  int failed = 0;
  int index = 1;
  for (const Entry& e : entries) {
    std::string detail;
    bool ok = false;
    try {
      ok = e.fn(detail);
    } catch (const std::exception& ex) {
      detail = std::string("exception: ") + ex.what();
    }
    std::printf("[%s] %d. %s: %s\n", ok ? "PASS" : "FAIL", index++, e.title, detail.c_str());
    std::fflush(stdout);
    failed += ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", int(std::size(entries)) - failed, std::size(entries));
  return failed == 0 ? 0 : 1;
}
