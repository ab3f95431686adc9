#include "weakhecke/operators.hpp"

#include <numeric>

namespace weakhecke {

long hecke_required_precision(long m, long out_precision) {
  return m * (out_precision - 1) + 1;
}

long hecke_max_out_precision(const FourierSeries& f, long m) {
  return floor_div(f.precision() - 1, m) + 1;
}

FourierSeries hecke(const FourierSeries& f, long m, long out_precision) {
  if (m < 1) throw DomainError("hecke: index m must be >= 1");
  long required = hecke_required_precision(m, out_precision);
  if (f.precision() < required)
    throw PrecisionError("hecke: input precision " + std::to_string(f.precision()) +
                             " insufficient for output precision " +
                             std::to_string(out_precision) + ", need at least " +
                             std::to_string(required),
                         required);
  long exp = f.weight() - 1;
  std::map<long, Rational> c;
  long lo = -m * f.pole_order();
  if (out_precision <= lo) throw PrecisionError("hecke: requested output window is empty", lo + 1);
  for (long n = lo; n < out_precision; ++n) {
    long g = n == 0 ? m : std::gcd(m, n < 0 ? -n : n);
    Rational acc = 0;
    for (long d = 1; d <= g; ++d) {
      if (g % d != 0) continue;
      long idx = (m / d) * (n / d);  // m n / d^2, integral since d | m and d | n
      if (idx < -f.pole_order()) continue;
      Rational term = f.coeff(idx);
      if (term == 0) continue;
      acc += rational_pow(d, exp) * term;
    }
    if (acc != 0) c[n] = acc;
  }
  return FourierSeries(f.weight(), out_precision, std::move(c));
}

FourierSeries bol(const FourierSeries& f, int k) {
  if (k < 1) throw DomainError("bol: k must be >= 1");
  if (f.weight() != 2 - 2 * k)
    throw DomainError("bol: weight " + std::to_string(f.weight()) + " does not match 2-2k for k=" +
                      std::to_string(k));
  long exp = 2 * k - 1;
  std::map<long, Rational> c;
  for (const auto& [n, v] : f.coeffs()) {
    if (n == 0) continue;
    c[n] = rational_pow(n, exp) * v;
  }
  return FourierSeries(2 * k, f.precision(), std::move(c));
}

}  // namespace weakhecke
