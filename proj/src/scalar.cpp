#include "cesaro/scalar.hpp"

#include <string>

namespace cesaro {

std::string_view to_string(ScalarMode mode) {
  return mode == ScalarMode::Exact ? "exact" : "float";
}

ScalarMode parse_scalar_mode(std::string_view text) {
  if (text == "exact") return ScalarMode::Exact;
  if (text == "float") return ScalarMode::Float;
  throw DomainError("unknown scalar mode '" + std::string(text) + "'");
}

ExactScalar make_rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  ExactScalar q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

ExactScalar reciprocal(const ExactScalar& q) {
  if (sgn(q) == 0) throw DomainError("reciprocal of zero");
  ExactScalar r = 1 / q;
  return r;
}

std::string to_string(const ExactScalar& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

ExactScalar parse_rational(std::string_view text) {
  const std::string s(text);
  ExactScalar q;
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw DomainError("cannot parse rational '" + s + "'");
  }
  if (q.get_den() == 0) throw DomainError("rational with zero denominator");
  q.canonicalize();
  return q;
}

ExactScalar pochhammer(long x, unsigned long k) {
  mpz_class acc = 1;
  for (unsigned long t = 0; t < k; ++t) acc *= x + static_cast<long>(t);
  return ExactScalar(acc);
}

ExactScalar binomial(unsigned long i, unsigned long j) {
  if (j > i) return ExactScalar(0);
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), i, j);
  return ExactScalar(c);
}

ExactScalar harmonic(long n) {
  if (n < 1) throw DomainError("harmonic number requires n >= 1");
  ExactScalar h = 0;
  for (long i = 1; i <= n; ++i) h += make_rational(1, i);
  return h;
}

}  // namespace cesaro
