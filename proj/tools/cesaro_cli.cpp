// Command-line front end for the cesaro library.
//
//   cesaro emit     --kind P --n 8 [--mode exact|float] [--format json|csv|pretty]
//   cesaro spectrum --kind P --n 100 [--mode ...] [--format json|pretty]
//   cesaro verify   [--suite all|diagonalization|kernels|bounds] [--n-max 40] [--perturb KIND:i:j]
//   cesaro norms    --n-list 10,100,1000 [--format csv|pretty|json]
//   cesaro bench    --kind Mmin --n-list 256,1024,4096 [--repeat 5] [--ref-max 512]
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cesaro/bounds.hpp"
#include "cesaro/oracle.hpp"
#include "cesaro/serialize.hpp"
#include "cesaro/spectra.hpp"
#include "cesaro/verify.hpp"

namespace {

using namespace cesaro;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr std::size_t kExactDefaultCap = 100;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ScalarMode resolve_mode(const std::string& flag, std::size_t n) {
  if (flag.empty()) return n <= kExactDefaultCap ? ScalarMode::Exact : ScalarMode::Float;
  try {
    return parse_scalar_mode(flag);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

MatrixKind resolve_kind(const std::string& name) {
  try {
    return parse_matrix_kind(name);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::size_t> parse_n_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw UsageError("bad entry '" + item + "' in --n-list");
    }
  }
  if (out.empty()) throw UsageError("--n-list is empty");
  return out;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw UsageError("unsupported --format '" + format + "'");
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

template <class Fn>
double seconds(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

struct Options {
  std::string kind;
  std::size_t n = 0;
  std::string mode;
  std::string format = "json";
  std::string suite = "all";
  std::size_t n_max = 40;
  std::string perturb;
  std::string n_list;
  int repeat = 5;
  std::size_t ref_max = 512;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_emit(const Options& o, std::ostream& out) {
  const MatrixKind kind = resolve_kind(o.kind);
  require_format(o.format, {"json", "csv", "pretty"});
  const DenseMatrix m = make_matrix(kind, o.n, resolve_mode(o.mode, o.n));
  if (o.format == "json")
    out << matrix_to_json(m, kind).dump() << '\n';
  else if (o.format == "csv")
    out << matrix_to_csv(m);
  else
    out << matrix_to_pretty(m);
  return kExitOk;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const MatrixKind kind = resolve_kind(o.kind);
  require_format(o.format, {"json", "pretty"});

  json j;
  if (kind == MatrixKind::Mmin) {
    if (!o.mode.empty() && o.mode != "float")
      throw UsageError("the Mmin spectrum has transcendental entries; use --mode float");
    j = decomposition_to_json(AnyDecomposition{min_kernel_spectrum(o.n)});
  } else {
    switch (kind) {
      case MatrixKind::P:
      case MatrixKind::Pinv:
      case MatrixKind::C:
      case MatrixKind::B:
      case MatrixKind::Zrev:
        break;
      default:
        throw UsageError("no closed-form spectrum for kind '" + o.kind + "'");
    }
    j = decomposition_to_json(diagonalize(kind, o.n, resolve_mode(o.mode, o.n)));
  }

  if (o.format == "json") {
    out << j.dump() << '\n';
  } else {
    out << "matrix " << j["matrix"].get<std::string>() << ", n = " << o.n << ", mode "
        << j["mode"].get<std::string>() << ", residual " << j["residual"].dump() << '\n';
    std::size_t i = 1;
    for (const auto& ev : j["eigenvalues"]) {
      out << "  lambda_" << i++ << " = "
          << (ev.is_string() ? ev.get<std::string>() : format_double(ev.get<double>())) << '\n';
    }
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Suite suite;
  std::optional<Perturbation> perturbation;
  try {
    suite = parse_suite(o.suite);
    if (!o.perturb.empty()) perturbation = parse_perturbation(o.perturb);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (o.n_max < 1) throw UsageError("--n-max must be at least 1");

  const VerificationReport report =
      run_verification(suite, o.n_max, MatrixSource(perturbation));
  out << report.summary();
  if (const IdentityResult* f = report.first_failure()) {
    out << "verification FAILED: " << f->name << " (n = " << *f->first_failing_n << ")\n";
    return kExitVerifyFailed;
  }
  out << "verification passed: " << report.results.size() << " identities, n = 1.." << o.n_max
      << '\n';
  return kExitOk;
}

int cmd_norms(const Options& o, std::ostream& out) {
  require_format(o.format, {"csv", "pretty", "json"});
  std::vector<NormReport> rows;
  for (std::size_t n : parse_n_list(o.n_list)) rows.push_back(build_norm_report(n, o.seed));
  if (o.format == "csv") {
    out << norm_table_csv(rows);
  } else if (o.format == "pretty") {
    out << norm_table_pretty(rows);
  } else {
    json arr = json::array();
    for (const auto& r : rows) arr.push_back(norm_report_to_json(r));
    out << arr.dump() << '\n';
  }
  const bool ok = std::all_of(rows.begin(), rows.end(), [](const NormReport& r) { return r.all(); });
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_bench(const Options& o, std::ostream& out) {
  if (resolve_kind(o.kind) != MatrixKind::Mmin)
    throw UsageError("bench supports --kind Mmin only");
  if (o.repeat < 1) throw UsageError("--repeat must be at least 1");

  out << "kind,n,method,median_seconds,residual\n";
  for (std::size_t n : parse_n_list(o.n_list)) {
    std::vector<double> times;
    double residual = 0.0;
    for (int r = 0; r < o.repeat; ++r) {
      times.push_back(seconds([&] { residual = min_kernel_spectrum(n).residual; }));
    }
    out << "Mmin," << n << ",closed_form," << format_double(median(times)) << ','
        << format_double(residual) << '\n';

    if (n <= o.ref_max) {
      times.clear();
      const FloatMatrix m = make_matrix<double>(MatrixKind::Mmin, n);
      for (int r = 0; r < o.repeat; ++r) {
        times.push_back(seconds([&] {
          const SymmetricEigen eig = symmetric_eig_reference(m);
          residual = min_kernel_eigenpair_residual(eig.vectors, eig.values);
        }));
      }
      out << "Mmin," << n << ",jacobi_reference," << format_double(median(times)) << ','
          << format_double(residual) << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closed-form spectra of Cesaro-type matrices and min/max kernels"};
  app.require_subcommand(1);
  Options o;

  auto* emit = app.add_subcommand("emit", "Print a named matrix");
  emit->add_option("--kind", o.kind, "Matrix kind (P, Pinv, C, J, Lnil, V, Vinv, B, Mcoef, S, "
                                     "Zrev, Mmin, Kmax, Lones, MminInv, W, Dinv)")
      ->required();
  emit->add_option("--n", o.n, "Order")->required()->check(CLI::PositiveNumber);
  emit->add_option("--mode", o.mode, "exact or float (default: exact for n <= 100)");
  emit->add_option("--format", o.format, "json, csv or pretty");

  auto* spectrum = app.add_subcommand("spectrum", "Closed-form eigendecomposition");
  spectrum->add_option("--kind", o.kind, "P, Pinv, C, B, Zrev or Mmin")->required();
  spectrum->add_option("--n", o.n, "Order")->required()->check(CLI::PositiveNumber);
  spectrum->add_option("--mode", o.mode, "exact or float (default: exact for n <= 100)");
  spectrum->add_option("--format", o.format, "json or pretty");

  auto* verify = app.add_subcommand("verify", "Run the exact verification suites");
  verify->add_option("--suite", o.suite, "all, diagonalization, kernels or bounds");
  verify->add_option("--n-max", o.n_max, "Largest order checked");
  verify->add_option("--perturb", o.perturb, "Fault injection: add 1 to KIND:i:j");

  auto* norms = app.add_subcommand("norms", "Operator-norm bound table");
  norms->add_option("--n-list", o.n_list, "Comma-separated orders")->required();
  norms->add_option("--format", o.format, "csv, pretty or json");
  norms->add_option("--seed", o.seed, "Power-iteration seed");

  auto* bench = app.add_subcommand("bench", "Time closed-form vs reference spectra");
  bench->add_option("--kind", o.kind, "Mmin")->required();
  bench->add_option("--n-list", o.n_list, "Comma-separated orders")->required();
  bench->add_option("--repeat", o.repeat, "Runs per timing (median reported)");
  bench->add_option("--ref-max", o.ref_max, "Largest n timed with the reference eigensolver");

  for (auto* sub : {emit, spectrum, verify, norms, bench})
    sub->add_option("-o,--output", o.output, "Write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) {
      std::cerr << "cannot open " << o.output << '\n';
      return kExitUsage;
    }
  }
  std::ostream& out = o.output.empty() ? std::cout : file;

  try {
    if (emit->parsed()) return cmd_emit(o, out);
    if (spectrum->parsed()) return cmd_spectrum(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (norms->parsed()) return cmd_norms(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
