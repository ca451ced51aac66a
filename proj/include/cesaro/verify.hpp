#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cesaro/matrix.hpp"

namespace cesaro {

/// Adds +1 to entry (row, col) of every `kind` matrix handed out by a
/// MatrixSource whose order covers that entry. Used for fault injection.
struct Perturbation {
  MatrixKind kind;
  std::size_t row = 1;
  std::size_t col = 1;
};

/// Parses "KIND:i:j", e.g. "B:1:2". Throws DomainError.
Perturbation parse_perturbation(std::string_view text);

/// Supplies the named matrices to the verification suites.
class MatrixSource {
 public:
  MatrixSource() = default;
  explicit MatrixSource(std::optional<Perturbation> perturbation)
      : perturbation_(perturbation) {}

  ExactMatrix get(MatrixKind kind, std::size_t n) const;

 private:
  std::optional<Perturbation> perturbation_;
};

enum class Suite { All, Diagonalization, Kernels, Bounds };

Suite parse_suite(std::string_view text);
std::string_view to_string(Suite suite);

struct IdentityResult {
  std::string suite;
  std::string name;
  bool passed = true;
  /// Reported but excluded from the overall verdict.
  bool informational = false;
  std::size_t cases = 0;
  std::optional<std::size_t> first_failing_n;
  std::string detail;
};

struct VerificationReport {
  std::vector<IdentityResult> results;

  bool passed() const;
  const IdentityResult* first_failure() const;
  /// One line per identity, in suite order.
  std::string summary() const;
};

/// Runs every identity of the chosen suite(s) for n = 1..n_max.
VerificationReport run_verification(Suite suite, std::size_t n_max,
                                    const MatrixSource& source = MatrixSource{});

}  // namespace cesaro
