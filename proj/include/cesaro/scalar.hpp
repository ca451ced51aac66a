#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

#include "cesaro/errors.hpp"

namespace cesaro {

/// Arbitrary-precision rational. gmpxx canonicalizes every arithmetic result,
/// so values are always in lowest terms with a positive denominator.
using ExactScalar = mpq_class;

enum class ScalarMode { Exact, Float };

std::string_view to_string(ScalarMode mode);
ScalarMode parse_scalar_mode(std::string_view text);

/// num/den in lowest terms. Throws DomainError when den == 0.
ExactScalar make_rational(long num, long den = 1);

/// 1/q. Throws DomainError for q == 0.
ExactScalar reciprocal(const ExactScalar& q);

/// "num/den", or just "num" for integers.
std::string to_string(const ExactScalar& q);
ExactScalar parse_rational(std::string_view text);

/// Nearest-below double (truncation); error is within one ulp.
inline double to_double(const ExactScalar& q) { return q.get_d(); }

/// Rising factorial (x)_k = x(x+1)...(x+k-1), with (x)_0 = 1.
ExactScalar pochhammer(long x, unsigned long k);

/// C(i, j), zero when j > i.
ExactScalar binomial(unsigned long i, unsigned long j);

/// H_n = 1 + 1/2 + ... + 1/n. Throws DomainError for n < 1.
ExactScalar harmonic(long n);

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<ExactScalar> {
  static constexpr ScalarMode mode = ScalarMode::Exact;
  static ExactScalar from_ratio(long num, long den = 1) { return make_rational(num, den); }
  static ExactScalar from_exact(const ExactScalar& q) { return q; }
  static bool is_zero(const ExactScalar& q) { return sgn(q) == 0; }
  static ExactScalar abs(const ExactScalar& q) { return ::abs(q); }
  static double to_double(const ExactScalar& q) { return q.get_d(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr ScalarMode mode = ScalarMode::Float;
  static double from_ratio(long num, long den = 1) {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  static double from_exact(const ExactScalar& q) { return q.get_d(); }
  static bool is_zero(double x) { return x == 0.0; }
  static double abs(double x) { return std::fabs(x); }
  static double to_double(double x) { return x; }
};

}  // namespace cesaro
