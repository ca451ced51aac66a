#include "cesaro/serialize.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace cesaro {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json scalar_to_json(const ExactScalar& q) { return to_string(q); }
json scalar_to_json(double x) { return x; }

namespace {

template <class T>
json entries_to_json(const Matrix<T>& m) {
  json rows = json::array();
  for (std::size_t i = 1; i <= m.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 1; j <= m.order(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
json vector_to_json(const std::vector<T>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

std::string mpz_str(const mpz_class& z) { return z.get_str(); }

}  // namespace

json matrix_to_json(const DenseMatrix& m, std::optional<MatrixKind> kind) {
  json out = json::object();
  if (kind) out["kind"] = std::string(to_string(*kind));
  out["n"] = order_of(m);
  out["mode"] = std::string(to_string(mode_of(m)));
  out["entries"] = std::visit([](const auto& x) { return entries_to_json(x); }, m);
  return out;
}

DenseMatrix matrix_from_json(const json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    const ScalarMode mode = parse_scalar_mode(j.at("mode").get<std::string>());
    const json& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != n) throw DomainError("entries must have n rows");
    for (const json& row : rows)
      if (!row.is_array() || row.size() != n) throw DomainError("entries must have n columns");

    if (mode == ScalarMode::Exact) {
      ExactMatrix m(n);
      for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t k = 1; k <= n; ++k)
          m(i, k) = parse_rational(rows[i - 1][k - 1].get<std::string>());
      return m;
    }
    FloatMatrix m(n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t k = 1; k <= n; ++k) m(i, k) = rows[i - 1][k - 1].get<double>();
    return m;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed matrix JSON: ") + e.what());
  }
}

std::string matrix_to_csv(const DenseMatrix& m) {
  const FloatMatrix f = std::visit([](const auto& x) { return to_float(x); }, m);
  std::string out;
  for (std::size_t i = 1; i <= f.order(); ++i) {
    for (std::size_t j = 1; j <= f.order(); ++j) {
      if (j > 1) out += ',';
      out += format_double(f(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string matrix_to_pretty(const DenseMatrix& m) {
  const std::size_t n = order_of(m);
  std::vector<std::string> cells;
  cells.reserve(n * n);
  std::size_t width = 1;
  std::visit(
      [&](const auto& x) {
        for (std::size_t i = 1; i <= n; ++i)
          for (std::size_t j = 1; j <= n; ++j) {
            std::string s;
            if constexpr (std::is_same_v<std::decay_t<decltype(x(i, j))>, double>)
              s = format_double(x(i, j));
            else
              s = to_string(x(i, j));
            width = std::max(width, s.size());
            cells.push_back(std::move(s));
          }
      },
      m);
  std::ostringstream os;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) os << "  ";
      os << std::setw(static_cast<int>(width)) << cells[i * n + j];
    }
    os << '\n';
  }
  return os.str();
}

json decomposition_to_json(const AnyDecomposition& d) {
  return std::visit(
      [](const auto& dec) {
        json out = json::object();
        out["matrix"] = std::string(to_string(dec.kind));
        out["n"] = dec.n;
        out["mode"] = std::string(to_string(dec.mode));
        out["eigenvalues"] = vector_to_json(dec.eigenvalues);
        out["diagonalizer"] = entries_to_json(dec.diagonalizer);
        if (dec.residual == 0.0)
          out["residual"] = 0;
        else
          out["residual"] = dec.residual;
        return out;
      },
      d);
}

template <class T>
json certificate_to_json(const PsdCertificate<T>& c) {
  json out = json::object();
  out["verdict"] = c.is_psd() ? "PSD" : "NotPSD";
  out["positive_definite"] = c.positive_definite;
  out["min_pivot"] = scalar_to_json(c.min_pivot());
  out["pivots"] = vector_to_json(c.pivots);
  out["tolerance"] = c.tolerance;
  out["witness"] = c.witness ? vector_to_json(*c.witness) : json(nullptr);
  out["witness_value"] = c.witness_value ? scalar_to_json(*c.witness_value) : json(nullptr);
  return out;
}

template json certificate_to_json(const PsdCertificate<ExactScalar>&);
template json certificate_to_json(const PsdCertificate<double>&);

template <class T>
json similarity_to_json(const SimilarityReport<T>& r) {
  json out = json::object();
  out["off_diagonal_max"] = scalar_to_json(r.off_diagonal_max);
  out["diagonal"] = vector_to_json(r.diagonal);
  out["exact"] = r.exact;
  return out;
}

template json similarity_to_json(const SimilarityReport<ExactScalar>&);
template json similarity_to_json(const SimilarityReport<double>&);

json norm_report_to_json(const NormReport& r) {
  json out = json::object();
  out["n"] = r.n;
  out["trace_bound"] = to_string(r.trace_bound);
  out["contraction_diag"] = vector_to_json(r.contraction_diag);
  out["norm_K_upper"] = r.norm_K_upper;
  out["gershgorin_W"] = mpz_str(r.gershgorin_W);
  out["paper_bound_W"] = mpz_str(r.paper_bound_W);
  out["min_kernel_norm"] = r.min_kernel_norm;
  out["min_kernel_approx"] = r.min_kernel_approx;
  out["oracle_lambda_max_K"] = r.oracle_lambda_max_K;
  out["oracle_lambda_max_W"] = r.oracle_lambda_max_W;
  out["flags"] = {{"trace_ok", r.trace_ok}, {"norm_K_ok", r.norm_K_ok},
                  {"gershgorin_ok", r.gershgorin_ok}};
  return out;
}

namespace {

std::vector<std::string> norm_row(const NormReport& r) {
  return {std::to_string(r.n),
          format_double(r.trace_bound.get_d()),
          format_double(r.oracle_lambda_max_K),
          r.norm_K_ok ? "true" : "false",
          mpz_str(r.gershgorin_W),
          mpz_str(r.paper_bound_W),
          format_double(r.min_kernel_norm),
          format_double(r.min_kernel_approx)};
}

const std::vector<std::string> kNormHeader = {"n",      "H_n",          "lambda_max_K",
                                              "bound4_ok", "gersh_W",   "paper_bound_W",
                                              "lambda_max_M", "approx_4n2_pi2"};

}  // namespace

std::string norm_table_csv(std::span<const NormReport> rows) {
  std::string out;
  for (std::size_t c = 0; c < kNormHeader.size(); ++c) {
    if (c > 0) out += ',';
    out += kNormHeader[c];
  }
  out += '\n';
  for (const NormReport& r : rows) {
    const auto cells = norm_row(r);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out += ',';
      out += cells[c];
    }
    out += '\n';
  }
  return out;
}

std::string norm_table_pretty(std::span<const NormReport> rows) {
  std::vector<std::vector<std::string>> table{kNormHeader};
  for (const NormReport& r : rows) table.push_back(norm_row(r));
  std::vector<std::size_t> width(kNormHeader.size(), 0);
  for (const auto& row : table)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) os << "  ";
      os << std::setw(static_cast<int>(width[c])) << row[c];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace cesaro
