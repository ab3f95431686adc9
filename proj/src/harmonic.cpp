#include "weakhecke/harmonic.hpp"

namespace weakhecke {

void ScalarPi::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

ScalarPi ScalarPi::rational(const Rational& r) { return pi_power(0, r); }

ScalarPi ScalarPi::pi_power(long e, const Rational& coeff) {
  ScalarPi s;
  if (coeff != 0) s.terms_[e] = coeff;
  return s;
}

bool ScalarPi::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational ScalarPi::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw DomainError("ScalarPi: value has nonzero pi powers");
  return terms_.begin()->second;
}

ScalarPi& ScalarPi::operator+=(const ScalarPi& other) {
  for (const auto& [e, v] : other.terms_) terms_[e] += v;
  prune();
  return *this;
}

ScalarPi operator-(const ScalarPi& a) {
  ScalarPi out;
  for (const auto& [e, v] : a.terms()) out.terms_[e] = -v;
  return out;
}

ScalarPi operator*(const ScalarPi& a, const ScalarPi& b) {
  ScalarPi out;
  for (const auto& [ea, va] : a.terms())
    for (const auto& [eb, vb] : b.terms()) out.terms_[ea + eb] += va * vb;
  out.prune();
  return out;
}

ScalarPi operator*(const Rational& s, const ScalarPi& a) {
  return ScalarPi::pi_power(0, s) * a;
}

PiSeries PiSeries::from_series(const FourierSeries& f) {
  PiSeries out;
  out.weight = f.weight();
  out.precision = f.precision();
  for (const auto& [n, v] : f.coeffs()) out.coeffs[n] = ScalarPi::rational(v);
  return out;
}

PiSeries PiSeries::scaled(const ScalarPi& s) const {
  PiSeries out;
  out.weight = weight;
  out.precision = precision;
  if (s.is_zero()) return out;
  for (const auto& [n, v] : coeffs) {
    ScalarPi sv = s * v;
    if (!sv.is_zero()) out.coeffs[n] = sv;
  }
  return out;
}

FormalHarmonicForm FormalHarmonicForm::normalized() const {
  FormalHarmonicForm out;
  out.k = k;
  out.precision = precision;
  for (const auto& [n, v] : plus)
    if (!v.is_zero()) out.plus[n] = v;
  for (const auto& [n, v] : minus)
    if (!v.is_zero()) out.minus[n] = v;
  return out;
}

PiSeries xi_op(const FormalHarmonicForm& f) {
  PiSeries out;
  out.weight = 2 * f.k;
  out.precision = f.precision;
  long w_exp = 2 * f.k - 1;
  ScalarPi four_pi_pow = ScalarPi::pi_power(w_exp, rational_pow(4, w_exp));
  for (const auto& [mn, v] : f.minus) {
    if (v.is_zero()) continue;
    long n = -mn;
    if (n == 0) {
      ScalarPi term = Rational(w_exp) * v;
      if (!term.is_zero()) out.coeffs[0] = term;
      continue;
    }
    ScalarPi term = -(rational_pow(n, w_exp) * (four_pi_pow * v));
    if (!term.is_zero()) out.coeffs[n] = term;
  }
  return out;
}

PiSeries d_op(const FormalHarmonicForm& f) {
  PiSeries out;
  out.weight = 2 * f.k;
  out.precision = f.precision;
  long w_exp = 2 * f.k - 1;
  auto y_slot = f.minus.find(0);
  if (y_slot != f.minus.end() && !y_slot->second.is_zero()) {
    Rational fac{factorial(static_cast<unsigned long>(w_exp))};
    ScalarPi scale = ScalarPi::pi_power(-w_exp, -fac / rational_pow(4, w_exp));
    ScalarPi term = scale * y_slot->second;
    if (!term.is_zero()) out.coeffs[0] = term;
  }
  for (const auto& [n, v] : f.plus) {
    if (n == 0 || v.is_zero()) continue;
    ScalarPi term = rational_pow(n, w_exp) * v;
    if (!term.is_zero()) out.coeffs[n] = term;
  }
  return out;
}

FormalHarmonicForm flip(const FormalHarmonicForm& f) {
  FormalHarmonicForm out;
  out.k = f.k;
  out.precision = f.precision;
  Rational fac{factorial(static_cast<unsigned long>(2 * f.k - 2))};
  for (const auto& [n, v] : f.minus) {
    if (v.is_zero()) continue;
    if (n == 0)
      out.minus[0] = -v;
    else
      out.plus[-n] = (-fac) * v;
  }
  for (const auto& [n, v] : f.plus) {
    if (v.is_zero()) continue;
    if (n == 0)
      out.plus[0] = -v;
    else
      out.minus[-n] = (Rational(-1) / fac) * v;
  }
  return out.normalized();
}

}  // namespace weakhecke
