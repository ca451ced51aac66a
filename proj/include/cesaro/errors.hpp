#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cesaro {

/// Argument outside the operation's domain (n < 1, non-nilpotent input, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands of incompatible order or scalar mode.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrixError : public std::runtime_error {
 public:
  explicit SingularMatrixError(std::size_t pivot_index)
      : std::runtime_error("matrix is singular at elimination step " +
                           std::to_string(pivot_index)),
        pivot_index_(pivot_index) {}

  /// 1-based elimination step at which no usable pivot remained.
  std::size_t pivot_index() const noexcept { return pivot_index_; }

 private:
  std::size_t pivot_index_;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// A closed form failed its own exact self-check. Indicates a bug.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cesaro
