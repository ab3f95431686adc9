#ifndef WEAKHECKE_RATIONAL_HPP
#define WEAKHECKE_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace weakhecke {

using Rational = mpq_class;
using Integer = mpz_class;

// Invalid mathematical input: weight mismatch, bad parameters, malformed files.
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An operation was asked for more output than its inputs determine. `required`
// is the minimum input precision that would make the call succeed.
struct PrecisionError : std::runtime_error {
  long required;
  PrecisionError(const std::string& what, long required_precision)
      : std::runtime_error(what), required(required_precision) {}
};

// A certified internal consistency check failed; indicates a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

long floor_div(long a, long b);

// base^e with e of either sign, exact. base must be nonzero when e < 0.
Rational rational_pow(long base, long e);

Integer integer_pow(long base, unsigned long e);
Integer factorial(unsigned long n);

// Canonical "num/den": lowest terms, den >= 1, sign on the numerator.
std::string format_rational(const Rational& r);

// Inverse of format_rational. Accepts "num" or "num/den". With
// require_canonical the input must already be in lowest terms with a positive
// denominator and no redundant leading zeros, so files round-trip bit-exactly.
Rational parse_rational(const std::string& s, bool require_canonical = true);

double to_double(const Rational& r);

}  // namespace weakhecke

#endif
