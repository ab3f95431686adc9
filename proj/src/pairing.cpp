#include "weakhecke/pairing.hpp"

#include <algorithm>

#include "weakhecke/operators.hpp"
#include "weakhecke/spaces.hpp"

namespace weakhecke {

namespace {

void check_pairing_precision(const FourierSeries& f, const FourierSeries& g, const char* who) {
  if (f.precision() <= g.pole_order())
    throw PrecisionError(std::string(who) + ": first argument precision " +
                             std::to_string(f.precision()) + " must exceed pole order " +
                             std::to_string(g.pole_order()) + " of the second",
                         g.pole_order() + 1);
  if (g.precision() <= f.pole_order())
    throw PrecisionError(std::string(who) + ": second argument precision " +
                             std::to_string(g.precision()) + " must exceed pole order " +
                             std::to_string(f.pole_order()) + " of the first",
                         f.pole_order() + 1);
}

}  // namespace

Rational pairing_zero(const FourierSeries& f, const FourierSeries& g, int k) {
  if (f.weight() != 2 * k || g.weight() != 2 * k)
    throw DomainError("pairing_zero: both arguments must have weight 2k = " +
                      std::to_string(2 * k));
  check_pairing_precision(f, g, "pairing_zero");
  Rational acc = 0;
  for (long n = -g.pole_order(); n <= f.pole_order(); ++n) {
    if (n == 0) continue;
    Rational a = f.coeff(-n);
    if (a == 0) continue;
    Rational b = g.coeff(n);
    if (b == 0) continue;
    acc += a * b / rational_pow(n, 2 * k - 1);
  }
  return acc;
}

Rational bf_pairing(const FourierSeries& f, const FourierSeries& g) {
  check_pairing_precision(f, g, "bf_pairing");
  Rational acc = 0;
  for (long n = -g.pole_order(); n <= f.pole_order(); ++n) acc += f.coeff(-n) * g.coeff(n);
  return acc;
}

ScalarPi bf_pairing(const FourierSeries& f, const FormalHarmonicForm& g) {
  long plus_pole = 0;
  for (const auto& [n, v] : g.plus)
    if (!v.is_zero()) plus_pole = std::max(plus_pole, -n);
  if (f.precision() <= plus_pole)
    throw PrecisionError("bf_pairing: form precision must exceed the harmonic plus-part pole",
                         plus_pole + 1);
  if (g.precision <= f.pole_order())
    throw PrecisionError("bf_pairing: harmonic precision must exceed the form pole order",
                         f.pole_order() + 1);
  ScalarPi acc;
  for (const auto& [n, v] : g.plus) {
    if (v.is_zero() || n > f.pole_order()) continue;
    acc += f.coeff(-n) * v;
  }
  return acc;
}

long degeneracy_required_precision(int weight, long pole) {
  // The verdict transfers through bol back to weight 2k, so the controlling
  // valence bound is the one at weight 2k, not at the dual weight.
  return certificate_bound(weight, pole) + 1;
}

DegeneracyResult is_degenerate(const FourierSeries& f, long max_pole_hint) {
  if (f.weight() < 2 || f.weight() % 2 != 0)
    throw DomainError("is_degenerate: weight must be even and >= 2");
  int k = f.weight() / 2;

  DegeneracyResult result;
  if (f.coeff(0) != 0) {
    result.obstruction = Obstruction::constant_term;
    result.exponent = 0;
    return result;
  }

  long pole = std::max(f.pole_order(), max_pole_hint);
  long bound = certificate_bound(f.weight(), pole);
  long min_prec = std::max(bound + 1, 1L);
  if (f.precision() < min_prec)
    throw PrecisionError("is_degenerate: precision " + std::to_string(f.precision()) +
                             " below certificate requirement " + std::to_string(min_prec),
                         min_prec);

  std::map<long, Rational> hc;
  for (const auto& [n, v] : f.coeffs()) {
    if (n == 0) continue;
    hc[n] = v / rational_pow(n, 2 * k - 1);
  }
  FourierSeries h(2 - 2 * k, f.precision(), std::move(hc));

  EchelonBasis basis = weak_basis(2 - 2 * k, pole, min_prec);
  MembershipResult mem = membership(h, basis);
  if (!mem.in_span) {
    result.obstruction = Obstruction::residual;
    result.exponent = mem.obstruction_exponent;
    return result;
  }

  // The candidate h is plain coefficient data, so agreeing with a span element
  // through the dual-weight bound is not yet a proof. But f and bol(span
  // element) are both weakly holomorphic of weight 2k with pole <= P, so their
  // difference vanishing through the weight-2k bound forces exact equality.
  FourierSeries span_form = FourierSeries::zero(2 - 2 * k, min_prec);
  for (std::size_t i = 0; i < basis.elements.size(); ++i)
    if (mem.coordinates[i] != 0) span_form = span_form + basis.elements[i].scaled(mem.coordinates[i]);
  FourierSeries image = bol(span_form, k);
  for (long n = -pole; n <= bound; ++n) {
    if (f.coeff(n) != image.coeff(n)) {
      result.obstruction = Obstruction::residual;
      result.exponent = n;
      return result;
    }
  }
  result.degenerate = true;
  result.witness = std::move(h);
  return result;
}

}  // namespace weakhecke
