#include "weakhecke/qseries.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

namespace weakhecke {

FourierSeries::FourierSeries(int weight, long precision, std::map<long, Rational> coeffs)
    : weight_(weight), precision_(precision), coeffs_(std::move(coeffs)) {
  if (weight_ % 2 != 0) throw DomainError("FourierSeries: weight must be even");
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0)
      it = coeffs_.erase(it);
    else
      ++it;
  }
  pole_order_ = 0;
  if (!coeffs_.empty()) {
    long lead = coeffs_.begin()->first;
    if (lead < 0) pole_order_ = -lead;
    if (coeffs_.rbegin()->first >= precision_)
      throw DomainError("FourierSeries: coefficient beyond declared precision");
  }
  if (precision_ <= -pole_order_)
    throw DomainError("FourierSeries: precision must exceed the pole lower bound");
}

FourierSeries FourierSeries::zero(int weight, long precision) {
  return FourierSeries(weight, precision);
}

FourierSeries FourierSeries::constant(int weight, const Rational& value, long precision) {
  std::map<long, Rational> c;
  if (value != 0) c[0] = value;
  return FourierSeries(weight, precision, std::move(c));
}

FourierSeries FourierSeries::monomial(int weight, long exponent, const Rational& coeff,
                                      long precision) {
  std::map<long, Rational> c;
  if (coeff != 0) c[exponent] = coeff;
  return FourierSeries(weight, precision, std::move(c));
}

Rational FourierSeries::coeff(long n) const {
  if (n >= precision_)
    throw PrecisionError("FourierSeries::coeff: exponent " + std::to_string(n) +
                             " is beyond precision " + std::to_string(precision_),
                         n + 1);
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

long FourierSeries::leading_exponent() const {
  if (coeffs_.empty()) throw DomainError("leading_exponent: zero series");
  return coeffs_.begin()->first;
}

FourierSeries FourierSeries::truncated(long new_precision) const {
  if (new_precision > precision_)
    throw PrecisionError("truncated: cannot extend precision", new_precision);
  std::map<long, Rational> c;
  for (const auto& [n, v] : coeffs_)
    if (n < new_precision) c[n] = v;
  return FourierSeries(weight_, new_precision, std::move(c));
}

FourierSeries FourierSeries::scaled(const Rational& s) const {
  std::map<long, Rational> c;
  if (s != 0)
    for (const auto& [n, v] : coeffs_) c[n] = s * v;
  return FourierSeries(weight_, precision_, std::move(c));
}

FourierSeries FourierSeries::pow(unsigned e) const {
  long start_prec = std::max(precision_ + pole_order_ * static_cast<long>(e), 1L);
  FourierSeries acc = FourierSeries::constant(0, 1, start_prec);
  for (unsigned i = 0; i < e; ++i) acc = acc * (*this);
  return acc;
}

bool FourierSeries::agrees_with(const FourierSeries& other) const {
  long lo = std::min(-pole_order_, -other.pole_order_);
  long hi = std::min(precision_, other.precision_);
  for (long n = lo; n < hi; ++n) {
    auto a = coeffs_.find(n);
    auto b = other.coeffs_.find(n);
    Rational va = a == coeffs_.end() ? Rational(0) : a->second;
    Rational vb = b == other.coeffs_.end() ? Rational(0) : b->second;
    if (va != vb) return false;
  }
  return true;
}

bool FourierSeries::identical(const FourierSeries& other) const {
  return weight_ == other.weight_ && pole_order_ == other.pole_order_ &&
         precision_ == other.precision_ && coeffs_ == other.coeffs_;
}

FourierSeries operator+(const FourierSeries& a, const FourierSeries& b) {
  if (a.weight() != b.weight())
    throw DomainError("series add: weight mismatch (" + std::to_string(a.weight()) + " vs " +
                      std::to_string(b.weight()) + ")");
  long prec = std::min(a.precision(), b.precision());
  std::map<long, Rational> c;
  for (const auto& [n, v] : a.coeffs())
    if (n < prec) c[n] += v;
  for (const auto& [n, v] : b.coeffs())
    if (n < prec) c[n] += v;
  return FourierSeries(a.weight(), prec, std::move(c));
}

FourierSeries operator-(const FourierSeries& a) { return a.scaled(Rational(-1)); }

FourierSeries operator-(const FourierSeries& a, const FourierSeries& b) { return a + (-b); }

FourierSeries operator*(const FourierSeries& a, const FourierSeries& b) {
  long prec = std::min(a.precision() - b.pole_order(), b.precision() - a.pole_order());
  long low = -(a.pole_order() + b.pole_order());
  if (prec <= low)
    throw PrecisionError("series mul: inputs determine no output coefficients", low + 1);
  std::map<long, Rational> c;
  for (const auto& [i, vi] : a.coeffs()) {
    for (const auto& [j, vj] : b.coeffs()) {
      long n = i + j;
      if (n >= prec) break;  // b iterated in increasing j
      c[n] += vi * vj;
    }
  }
  return FourierSeries(a.weight() + b.weight(), prec, std::move(c));
}

FourierSeries operator*(const Rational& s, const FourierSeries& a) { return a.scaled(s); }

FourierSeries series_invert(const FourierSeries& a, long precision) {
  if (a.is_zero()) throw DomainError("series_invert: zero series has no inverse");
  long lead = a.leading_exponent();
  long required = precision + 2 * std::max(lead, 0L);
  if (a.precision() < required)
    throw PrecisionError("series_invert: input precision " + std::to_string(a.precision()) +
                             " insufficient, need at least " + std::to_string(required),
                         required);
  // a = q^lead * u with u(0) != 0; invert u by the geometric recurrence.
  long out_prec = precision + std::max(0L, -lead);
  long terms = out_prec + lead;  // v(m) needed for 0 <= m < terms
  std::vector<Rational> u(terms), v(terms);
  for (long m = 0; m < terms; ++m) u[m] = a.coeff(m + lead);
  Rational inv0 = 1 / u[0];
  for (long m = 0; m < terms; ++m) {
    if (m == 0) {
      v[0] = inv0;
      continue;
    }
    Rational acc = 0;
    for (long i = 1; i <= m; ++i) acc += u[i] * v[m - i];
    v[m] = -inv0 * acc;
  }
  std::map<long, Rational> c;
  for (long m = 0; m < terms; ++m)
    if (v[m] != 0) c[m - lead] = v[m];
  return FourierSeries(-a.weight(), out_prec, std::move(c));
}

Rational bernoulli(unsigned long n) {
  static std::vector<Rational> cache{Rational(1)};
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  while (cache.size() <= n) {
    unsigned long m = cache.size();
    // sum_{j=0}^{m} C(m+1, j) B_j = 0
    Rational acc = 0;
    for (unsigned long j = 0; j < m; ++j) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
      acc += Rational(binom) * cache[j];
    }
    Rational bm = -acc / Rational(static_cast<long>(m) + 1);
    bm.canonicalize();
    cache.push_back(bm);
  }
  return cache[n];
}

Integer sigma(unsigned long power, unsigned long n) {
  Integer out = 0;
  for (unsigned long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out += integer_pow(static_cast<long>(d), power);
    unsigned long e = n / d;
    if (e != d) out += integer_pow(static_cast<long>(e), power);
  }
  return out;
}

FourierSeries eisenstein(int weight, long precision) {
  if (weight < 4 || weight % 2 != 0)
    throw DomainError("eisenstein: weight must be even and >= 4, got " + std::to_string(weight));
  Rational factor = Rational(-2 * weight) / bernoulli(static_cast<unsigned long>(weight));
  factor.canonicalize();
  std::map<long, Rational> c;
  c[0] = 1;
  for (long n = 1; n < precision; ++n)
    c[n] = factor * Rational(sigma(static_cast<unsigned long>(weight - 1),
                                   static_cast<unsigned long>(n)));
  return FourierSeries(weight, precision, std::move(c));
}

FourierSeries delta(long precision) {
  if (precision < 1) throw DomainError("delta: precision must be >= 1");
  FourierSeries e4 = eisenstein(4, precision);
  FourierSeries e6 = eisenstein(6, precision);
  FourierSeries top = e4 * e4 * e4 - e6 * e6;
  return top.scaled(Rational(1, 1728));
}

FourierSeries j_invariant(long precision) {
  if (precision < 1) throw DomainError("j_invariant: precision must be >= 1");
  FourierSeries e4 = eisenstein(4, precision + 1);
  FourierSeries e43 = e4 * e4 * e4;
  FourierSeries dlt = delta(precision + 2);
  FourierSeries inv = series_invert(dlt, precision);
  return e43 * inv;
}

}  // namespace weakhecke
