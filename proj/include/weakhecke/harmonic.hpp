#ifndef WEAKHECKE_HARMONIC_HPP
#define WEAKHECKE_HARMONIC_HPP

#include <map>

#include "weakhecke/qseries.hpp"

namespace weakhecke {

// Exact scalar sum_e r_e pi^e: a sparse Laurent polynomial in a formal pi.
// Keeping pi symbolic makes "the pi powers cancel" literally checkable.
class ScalarPi {
 public:
  ScalarPi() {}
  static ScalarPi rational(const Rational& r);
  static ScalarPi pi_power(long e, const Rational& coeff);

  const std::map<long, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rational rational_value() const;  // throws unless purely pi^0

  ScalarPi& operator+=(const ScalarPi& other);
  friend ScalarPi operator+(ScalarPi a, const ScalarPi& b) { return a += b; }
  friend ScalarPi operator-(const ScalarPi& a);
  friend ScalarPi operator-(ScalarPi a, const ScalarPi& b) { return a += -b; }
  friend ScalarPi operator*(const ScalarPi& a, const ScalarPi& b);
  friend ScalarPi operator*(const Rational& s, const ScalarPi& a);

  bool operator==(const ScalarPi& other) const = default;

 private:
  std::map<long, Rational> terms_;  // pi-exponent -> coefficient, no zeros
  void prune();
};

// q-expansion with ScalarPi coefficients, as produced by the xi and D
// operators acting on formal harmonic forms.
struct PiSeries {
  int weight = 0;
  long precision = 1;
  std::map<long, ScalarPi> coeffs;  // nonzero entries only

  static PiSeries from_series(const FourierSeries& f);
  PiSeries scaled(const ScalarPi& s) const;
  bool operator==(const PiSeries& other) const = default;
};

// Harmonic Maass form of weight 2-2k as formal coefficient data: holomorphic
// part c+(n) (support bounded below) and non-holomorphic part c-(n) (support
// bounded above, with the n = 0 slot multiplying y^(2k-1)). Coefficients are
// real, so conjugation is the identity in every implemented formula. The
// incomplete-Gamma shape of the non-holomorphic terms is carried as a tag and
// never evaluated.
struct FormalHarmonicForm {
  int k = 1;  // weight 2 - 2k
  std::map<long, ScalarPi> plus;
  std::map<long, ScalarPi> minus;
  long precision = 1;  // |exponent| < precision on both parts

  FormalHarmonicForm normalized() const;  // drop zero coefficients
  bool operator==(const FormalHarmonicForm& other) const = default;
};

// xi_{2-2k}: constant term (2k-1) c-(0), n-th term -(4 pi)^(2k-1) n^(2k-1) c-(-n).
PiSeries xi_op(const FormalHarmonicForm& f);

// D^(2k-1): constant term -(2k-1)!/(4 pi)^(2k-1) c-(0), n-th term n^(2k-1) c+(n).
PiSeries d_op(const FormalHarmonicForm& f);

// Flipping involution exchanging the roles of xi and D^(2k-1):
//   c+_flip(n) = -(2k-2)! c-(-n)        (n != 0),   c+_flip(0) = -c+(0),
//   c-_flip(n) = -c+(-n) / (2k-2)!      (n != 0),   c-_flip(0) = -c-(0).
FormalHarmonicForm flip(const FormalHarmonicForm& f);

}  // namespace weakhecke

#endif
