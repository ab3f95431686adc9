#ifndef WEAKHECKE_QSERIES_HPP
#define WEAKHECKE_QSERIES_HPP

#include <map>

#include "weakhecke/rational.hpp"

namespace weakhecke {

// Truncated Fourier-Laurent expansion sum_n c(n) q^n of a weight-w form.
// Coefficients are exact rationals, known for -pole_order <= n < precision and
// provably zero below -pole_order. pole_order is kept tight: c(-pole_order)
// is nonzero unless pole_order = 0. Values are immutable after construction.
class FourierSeries {
 public:
  FourierSeries(int weight, long precision, std::map<long, Rational> coeffs = {});

  static FourierSeries zero(int weight, long precision);
  static FourierSeries constant(int weight, const Rational& value, long precision);
  static FourierSeries monomial(int weight, long exponent, const Rational& coeff,
                                long precision);

  int weight() const { return weight_; }
  long pole_order() const { return pole_order_; }
  long precision() const { return precision_; }
  const std::map<long, Rational>& coeffs() const { return coeffs_; }

  // c(n): exact zero below the pole bound; asking at or beyond the precision
  // horizon is an error, never a silent zero.
  Rational coeff(long n) const;

  bool is_zero() const { return coeffs_.empty(); }
  long leading_exponent() const;  // smallest n with c(n) != 0; throws if zero

  FourierSeries truncated(long new_precision) const;
  FourierSeries scaled(const Rational& s) const;
  FourierSeries pow(unsigned e) const;

  // Equality on the overlap of the two precision ranges.
  bool agrees_with(const FourierSeries& other) const;
  // Field-for-field equality (same weight, pole, precision, coefficients).
  bool identical(const FourierSeries& other) const;

 private:
  int weight_;
  long pole_order_;
  long precision_;
  std::map<long, Rational> coeffs_;
};

// Same-weight coefficientwise sum/difference; precision = min of inputs.
FourierSeries operator+(const FourierSeries& a, const FourierSeries& b);
FourierSeries operator-(const FourierSeries& a, const FourierSeries& b);
FourierSeries operator-(const FourierSeries& a);

// Cauchy product; weights add, pole orders add, precision follows the
// pessimistic rule min(a.prec - b.pole, b.prec - a.pole).
FourierSeries operator*(const FourierSeries& a, const FourierSeries& b);
FourierSeries operator*(const Rational& s, const FourierSeries& a);

// Multiplicative inverse b with a*b = 1 to the requested product precision.
// Needs a.precision >= precision + 2*max(leading exponent, 0).
FourierSeries series_invert(const FourierSeries& a, long precision);

// Exact Bernoulli number B_n (standard recurrence, memoized, thread-safe).
Rational bernoulli(unsigned long n);

// sigma_power(n) = sum of d^power over divisors d of n.
Integer sigma(unsigned long power, unsigned long n);

// E_w = 1 - (2w/B_w) sum sigma_{w-1}(n) q^n, weight w >= 4 even.
FourierSeries eisenstein(int weight, long precision);

// Delta = (E4^3 - E6^2)/1728 and j = E4^3/Delta.
FourierSeries delta(long precision);
FourierSeries j_invariant(long precision);

}  // namespace weakhecke

#endif
