#include "cesaro/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>

#include "cesaro/bounds.hpp"
#include "cesaro/kernels.hpp"
#include "cesaro/oracle.hpp"
#include "cesaro/spectra.hpp"

namespace cesaro {

namespace {

std::size_t parse_index(std::string_view text) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || v == 0)
    throw DomainError("bad perturbation index '" + std::string(text) + "'");
  return v;
}

using ExactVec = std::vector<ExactScalar>;

ExactMatrix diag(const ExactVec& d) { return ExactMatrix::diagonal(d); }

ExactVec signed_reciprocals(std::size_t n) {
  ExactVec d;
  for (std::size_t i = 1; i <= n; ++i)
    d.push_back(make_rational(i % 2 == 1 ? 1 : -1, static_cast<long>(i)));
  return d;
}

ExactVec signed_integers(std::size_t n) {
  ExactVec d;
  for (std::size_t i = 1; i <= n; ++i)
    d.push_back(make_rational(i % 2 == 1 ? static_cast<long>(i) : -static_cast<long>(i)));
  return d;
}

ExactVec squares(std::size_t n) {
  ExactVec d;
  for (std::size_t i = 1; i <= n; ++i) d.push_back(make_rational(static_cast<long>(i * i)));
  return d;
}

ExactVec reciprocals(std::size_t n) {
  ExactVec d;
  for (std::size_t i = 1; i <= n; ++i) d.push_back(make_rational(1, static_cast<long>(i)));
  return d;
}

// Conjugation T A T^{-1} through the oracle, compared with an expected diagonal.
bool conjugates_to(const ExactMatrix& t, const ExactMatrix& a, const ExactVec& expected) {
  try {
    const SimilarityReport<ExactScalar> r = exact_similarity_check(t, a);
    return r.is_diagonal() && r.diagonal == expected;
  } catch (const SingularMatrixError&) {
    return false;
  }
}

std::optional<ExactMatrix> try_invert(const ExactMatrix& a) {
  try {
    return invert(a);
  } catch (const SingularMatrixError&) {
    return std::nullopt;
  }
}

// Accumulates per-identity outcomes across n, preserving first-seen order.
class Ledger {
 public:
  explicit Ledger(std::string suite) : suite_(std::move(suite)) {}

  void record(const std::string& name, std::size_t n, bool ok, bool informational = false,
              const std::string& detail = {}) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, results_.size()).first;
      IdentityResult r;
      r.suite = suite_;
      r.name = name;
      r.informational = informational;
      results_.push_back(std::move(r));
    }
    IdentityResult& r = results_[it->second];
    ++r.cases;
    if (!ok && r.passed) {
      r.passed = false;
      r.first_failing_n = n;
      r.detail = detail;
    }
  }

  void check(const std::string& name, std::size_t n, const std::function<bool()>& fn) {
    bool ok = false;
    std::string detail;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    record(name, n, ok, false, detail);
  }

  std::vector<IdentityResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<IdentityResult> results_;
  std::map<std::string, std::size_t> index_;
};

void diagonalization_suite(Ledger& led, std::size_t n, const MatrixSource& src) {
  const ExactMatrix p = src.get(MatrixKind::P, n);
  const ExactMatrix pinv = src.get(MatrixKind::Pinv, n);
  const ExactMatrix c = src.get(MatrixKind::C, n);
  const ExactMatrix j = src.get(MatrixKind::J, n);
  const ExactMatrix lnil = src.get(MatrixKind::Lnil, n);
  const ExactMatrix v = src.get(MatrixKind::V, n);
  const ExactMatrix vinv = src.get(MatrixKind::Vinv, n);
  const ExactMatrix b = src.get(MatrixKind::B, n);
  const ExactMatrix mcoef = src.get(MatrixKind::Mcoef, n);
  const ExactMatrix zrev = src.get(MatrixKind::Zrev, n);
  const ExactMatrix identity = ExactMatrix::identity(n);

  led.check("P is row-stochastic", n, [&] {
    for (std::size_t i = 1; i <= n; ++i) {
      ExactScalar s = 0;
      for (std::size_t k = 1; k <= n; ++k) {
        if (sgn(p(i, k)) < 0) return false;
        s += p(i, k);
      }
      if (s != 1) return false;
    }
    return true;
  });
  led.check("P * Pinv = I", n, [&] { return matmul(p, pinv) == identity; });
  led.check("exp(Lnil) = V", n, [&] { return exp_nilpotent(lnil) == v; });
  led.check("exp(-Lnil) = Vinv", n, [&] { return exp_nilpotent(negate(lnil)) == vinv; });
  led.check("V * Vinv = I", n, [&] { return matmul(v, vinv) == identity; });
  led.check("Mcoef is unit lower-triangular", n, [&] {
    for (std::size_t i = 1; i <= n; ++i) {
      if (mcoef(i, i) != 1) return false;
      for (std::size_t k = i + 1; k <= n; ++k)
        if (sgn(mcoef(i, k)) != 0) return false;
    }
    return true;
  });
  led.check("B^T Mcoef = Mcoef Diag(j^2)", n, [&] {
    return matmul(transpose(b), mcoef) == matmul(mcoef, diag(squares(n)));
  });

  const std::optional<ExactMatrix> p_inv = try_invert(p);
  const std::optional<ExactMatrix> v_inv = try_invert(v);
  led.check("V P^-1 V^-1 upper-triangular with diagonal (-1)^(i+1) i", n, [&] {
    if (!p_inv || !v_inv) return false;
    const ExactMatrix tri = matmul(matmul(v, *p_inv), *v_inv);
    return is_upper_triangular(tri) && diagonal_of(tri) == signed_integers(n);
  });
  led.check("V P^-2 V^-1 = B", n, [&] {
    if (!p_inv || !v_inv) return false;
    return matmul(matmul(v, matmul(*p_inv, *p_inv)), *v_inv) == b;
  });

  const ExactMatrix s = transpose(mcoef);
  const ExactMatrix t = matmul(s, v);
  led.check("S B S^-1 = Diag(i^2)", n, [&] { return conjugates_to(s, b, squares(n)); });
  led.check("T P T^-1 = Diag((-1)^(i+1)/i)", n,
            [&] { return conjugates_to(t, p, signed_reciprocals(n)); });
  led.check("T P^-2 T^-1 = Diag(i^2)", n, [&] {
    if (!p_inv) return false;
    return conjugates_to(t, matmul(*p_inv, *p_inv), squares(n));
  });
  led.check("V C V^-1 = Diag(1/i)", n, [&] { return conjugates_to(v, c, reciprocals(n)); });
  led.check("Zrev = J P J", n, [&] { return zrev == matmul(matmul(j, p), j); });
  led.check("Zrev^-1 = J Pinv J", n, [&] {
    const auto zi = try_invert(zrev);
    return zi && *zi == matmul(matmul(j, pinv), j);
  });
  led.check("(T J) Zrev (T J)^-1 = Diag((-1)^(i+1)/i)", n,
            [&] { return conjugates_to(matmul(t, j), zrev, signed_reciprocals(n)); });
  led.check("eigenvalues of P pairwise distinct", n, [&] {
    ExactVec ev = closed_eigenvalues_P(n);
    std::sort(ev.begin(), ev.end());
    return std::adjacent_find(ev.begin(), ev.end()) == ev.end();
  });
  led.check("stationary pi P = pi, sum pi = 1, pi > 0", n, [&] {
    ExactScalar total = 0;
    for (std::size_t k = 1; k <= n; ++k) total += t(1, k);
    if (sgn(total) == 0) return false;
    ExactVec pi;
    for (std::size_t k = 1; k <= n; ++k) {
      ExactScalar w = t(1, k) / total;
      if (sgn(w) <= 0) return false;
      pi.push_back(w);
    }
    for (std::size_t col = 1; col <= n; ++col) {
      ExactScalar acc = 0;
      for (std::size_t i = 1; i <= n; ++i) acc += pi[i - 1] * p(i, col);
      if (acc != pi[col - 1]) return false;
    }
    return true;
  });

  // The transposed form of the reversal relation is reported, not enforced:
  // with Zrev = J P J it only holds when P^-1 is symmetric.
  bool transposed_holds = false;
  if (const auto zi = try_invert(zrev))
    transposed_holds = transpose(matmul(matmul(transpose(j), *zi), j)) == pinv;
  led.record("info: Pinv = (J^T Zrev^-1 J)^T", n, transposed_holds, true);
}

void kernels_suite(Ledger& led, std::size_t n, const MatrixSource& src) {
  const ExactMatrix p = src.get(MatrixKind::P, n);
  const ExactMatrix k = src.get(MatrixKind::Kmax, n);
  const ExactMatrix d = src.get(MatrixKind::Dinv, n);
  const ExactMatrix mmin = src.get(MatrixKind::Mmin, n);
  const ExactMatrix lones = src.get(MatrixKind::Lones, n);
  const ExactMatrix mmin_inv = src.get(MatrixKind::MminInv, n);

  led.check("Kmax[i][j] = 1/max(i,j)", n, [&] {
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t c = 1; c <= n; ++c)
        if (k(i, c) != make_rational(1, static_cast<long>(std::max(i, c)))) return false;
    return true;
  });
  led.check("Kmax = P P^T", n, [&] { return matmul(p, transpose(p)) == k; });
  led.check("Kmax = D Mmin D", n, [&] { return matmul(matmul(d, mmin), d) == k; });
  led.check("Mmin = Lones Lones^T", n, [&] { return matmul(lones, transpose(lones)) == mmin; });
  led.check("Mmin^-1 = MminInv", n, [&] {
    const auto inv = try_invert(mmin);
    return inv && *inv == mmin_inv;
  });
  if (n <= 16) {
    led.check("Kmax^(r) PSD exactly, r in {0,1,2,3}", n, [&] {
      for (unsigned r : {0u, 1u, 2u, 3u})
        if (!psd_certificate(schur_power(k, r)).is_psd()) return false;
      return true;
    });
  }
  if (n <= 64) {
    led.check("Kmax^(r) PSD, r in {0.1,0.5,1,1.5,2.5,pi}", n, [&] {
      const FloatMatrix kf = to_float(k);
      for (double r : {0.1, 0.5, 1.0, 1.5, 2.5, std::numbers::pi}) {
        const auto cert = psd_certificate(schur_power(kf, r), 1e-9);
        if (!cert.is_psd()) return false;
      }
      return true;
    });
  }
  led.check("[min(f_i,f_j)] PSD for f(t) = t^r", n, [&] {
    for (double r : {0.5, 1.0, 2.0}) {
      std::vector<double> f;
      for (std::size_t i = 1; i <= n; ++i) f.push_back(std::pow(static_cast<double>(i), r));
      if (!gram_min_check(f, 1e-9).is_psd()) return false;
    }
    return true;
  });
}

void bounds_suite(Ledger& led, std::size_t n, const MatrixSource& src) {
  const ExactMatrix p = src.get(MatrixKind::P, n);
  const ExactMatrix j = src.get(MatrixKind::J, n);
  const ExactMatrix w = src.get(MatrixKind::W, n);

  led.check("trace(P P^T) = H_n", n, [&] {
    return trace(matmul(p, transpose(p))) == harmonic(static_cast<long>(n));
  });
  led.check("(I - JP)(I - JP)^T = Diag((n-j)/(n-j+1))", n, [&] {
    const ExactMatrix m = subtract(ExactMatrix::identity(n), matmul(j, p));
    return matmul(m, transpose(m)) == diag(contraction_diagonal(n));
  });
  led.check("W = P^-1 P^-T matches tridiagonal display", n, [&] {
    const auto pi = try_invert(p);
    if (!pi || matmul(*pi, transpose(*pi)) != w) return false;
    for (std::size_t i = 1; i <= n; ++i) {
      const long r = static_cast<long>(n - i);
      if (w(i, i) != 2 * r * (r + 1) + 1) return false;
      for (std::size_t c = 1; c <= n; ++c) {
        if (c == i + 1 || c + 1 == i) {
          const long rr = static_cast<long>(n - std::min(i, c));
          if (w(i, c) != -rr * rr) return false;
        } else if (c != i && sgn(w(i, c)) != 0) {
          return false;
        }
      }
    }
    return true;
  });
  led.check("1 <= lambda_max(K) <= (1+sqrt(1-1/n))^2 <= 4", n, [&] {
    const NormKCertificate c = norm_K_certificate(n);
    return c.pass && c.oracle >= 1.0 - 1e-9;
  });
  led.check("lambda_max(W) <= gersh(W) <= 4n^2-6n+3 <= 4n^2", n,
            [&] { return gershgorin_W(n).pass; });
  led.check("Mmin closed spectrum = reference eigensolver (rel 1e-10)", n, [&] {
    const SymmetricEigen ref = symmetric_eig_reference(make_matrix<double>(MatrixKind::Mmin, n));
    for (std::size_t k = 1; k <= n; ++k) {
      const double closed = min_kernel_eigenvalue(n, k);
      if (std::fabs(closed - ref.values[k - 1]) > 1e-10 * std::fabs(closed)) return false;
    }
    return true;
  });
}

}  // namespace

Perturbation parse_perturbation(std::string_view text) {
  const auto first = text.find(':');
  const auto second = first == std::string_view::npos ? first : text.find(':', first + 1);
  if (second == std::string_view::npos)
    throw DomainError("perturbation must look like KIND:i:j");
  Perturbation p{parse_matrix_kind(text.substr(0, first)), 1, 1};
  p.row = parse_index(text.substr(first + 1, second - first - 1));
  p.col = parse_index(text.substr(second + 1));
  return p;
}

ExactMatrix MatrixSource::get(MatrixKind kind, std::size_t n) const {
  ExactMatrix m = make_matrix<ExactScalar>(kind, n);
  if (perturbation_ && perturbation_->kind == kind && perturbation_->row <= n &&
      perturbation_->col <= n) {
    m(perturbation_->row, perturbation_->col) += 1;
  }
  return m;
}

Suite parse_suite(std::string_view text) {
  if (text == "all") return Suite::All;
  if (text == "diagonalization") return Suite::Diagonalization;
  if (text == "kernels") return Suite::Kernels;
  if (text == "bounds") return Suite::Bounds;
  throw DomainError("unknown suite '" + std::string(text) + "'");
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::All: return "all";
    case Suite::Diagonalization: return "diagonalization";
    case Suite::Kernels: return "kernels";
    case Suite::Bounds: return "bounds";
  }
  return "?";
}

bool VerificationReport::passed() const { return first_failure() == nullptr; }

const IdentityResult* VerificationReport::first_failure() const {
  for (const auto& r : results)
    if (!r.passed && !r.informational) return &r;
  return nullptr;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  for (const auto& r : results) {
    if (r.informational) {
      os << "INFO  [" << r.suite << "] " << r.name << ": "
         << (r.passed ? "holds for every n" : "does not hold in general");
      if (r.first_failing_n) os << " (first counterexample n = " << *r.first_failing_n << ")";
    } else {
      os << (r.passed ? "PASS  [" : "FAIL  [") << r.suite << "] " << r.name << " (" << r.cases
         << " cases)";
      if (!r.passed) {
        os << " first failure at n = " << *r.first_failing_n;
        if (!r.detail.empty()) os << ": " << r.detail;
      }
    }
    os << '\n';
  }
  return os.str();
}

VerificationReport run_verification(Suite suite, std::size_t n_max, const MatrixSource& source) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  VerificationReport report;
  auto run = [&](const char* name, void (*fn)(Ledger&, std::size_t, const MatrixSource&)) {
    Ledger led(name);
    for (std::size_t n = 1; n <= n_max; ++n) fn(led, n, source);
    for (auto& r : led.take()) report.results.push_back(std::move(r));
  };
  if (suite == Suite::All || suite == Suite::Diagonalization)
    run("diagonalization", diagonalization_suite);
  if (suite == Suite::All || suite == Suite::Kernels) run("kernels", kernels_suite);
  if (suite == Suite::All || suite == Suite::Bounds) run("bounds", bounds_suite);
  return report;
}

}  // namespace cesaro
