#pragma once

#include <json.hpp>

#include <optional>
#include <span>
#include <string>

#include "cesaro/bounds.hpp"
#include "cesaro/kernels.hpp"
#include "cesaro/matrix.hpp"
#include "cesaro/oracle.hpp"
#include "cesaro/spectra.hpp"

namespace cesaro {

using json = nlohmann::json;

/// %.17g
std::string format_double(double x);

/// Exact scalars become "num/den" strings, floats become JSON numbers.
json scalar_to_json(const ExactScalar& q);
json scalar_to_json(double x);

/// {"kind": ..., "n": ..., "mode": "exact"|"float", "entries": [[...], ...]}.
/// "kind" is omitted when not given.
json matrix_to_json(const DenseMatrix& m, std::optional<MatrixKind> kind = std::nullopt);
/// Inverse of matrix_to_json. Throws DomainError on malformed input.
DenseMatrix matrix_from_json(const json& j);

/// One row per line, comma separated, entries as %.17g.
std::string matrix_to_csv(const DenseMatrix& m);
std::string matrix_to_pretty(const DenseMatrix& m);

/// {"matrix", "n", "mode", "eigenvalues", "diagonalizer", "residual"}.
json decomposition_to_json(const AnyDecomposition& d);

template <class T>
json certificate_to_json(const PsdCertificate<T>& c);

template <class T>
json similarity_to_json(const SimilarityReport<T>& r);

json norm_report_to_json(const NormReport& r);

/// Columns: n, H_n, lambda_max_K, bound4_ok, gersh_W, paper_bound_W,
/// lambda_max_M, approx_4n2_pi2.
std::string norm_table_csv(std::span<const NormReport> rows);
std::string norm_table_pretty(std::span<const NormReport> rows);

}  // namespace cesaro
