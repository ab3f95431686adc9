#include "weakhecke/spaces.hpp"

#include <algorithm>

#include "weakhecke/ratmat.hpp"

namespace weakhecke {

long certificate_bound(int weight, long max_pole) {
  return max_pole + floor_div(weight, 12) + 1;
}

namespace {

// All products E4^a E6^b of total weight w, ascending in a.
std::vector<FourierSeries> weight_monomials(int w, long precision) {
  std::vector<FourierSeries> out;
  if (w < 0) return out;
  if (w == 0) {
    out.push_back(FourierSeries::constant(0, 1, precision));
    return out;
  }
  FourierSeries e4 = eisenstein(4, precision);
  FourierSeries e6 = eisenstein(6, precision);
  for (int a = 0; 4 * a <= w; ++a) {
    if ((w - 4 * a) % 6 != 0) continue;
    int b = (w - 4 * a) / 6;
    FourierSeries m = FourierSeries::constant(0, 1, precision);
    for (int i = 0; i < a; ++i) m = m * e4;
    for (int i = 0; i < b; ++i) m = m * e6;
    out.push_back(std::move(m));
  }
  return out;
}

EchelonBasis echelonize(std::vector<FourierSeries> gens, int weight, long max_pole,
                        long precision) {
  EchelonBasis basis;
  basis.weight = weight;
  basis.max_pole = max_pole;
  basis.precision = precision;
  if (gens.empty()) return basis;

  long lo = -max_pole;
  std::size_t ncols = static_cast<std::size_t>(precision - lo);
  RatMatrix m(gens.size(), ncols);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].precision() < precision)
      throw InternalError("echelonize: generator precision below basis precision");
    if (gens[i].pole_order() > max_pole)
      throw InternalError("echelonize: generator pole exceeds slice bound");
    for (const auto& [n, v] : gens[i].coeffs())
      if (n < precision) m.at(i, static_cast<std::size_t>(n - lo)) = v;
  }
  std::vector<std::size_t> pivot_cols = m.rref();

  for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
    std::map<long, Rational> c;
    for (std::size_t j = 0; j < ncols; ++j)
      if (m.at(r, j) != 0) c[static_cast<long>(j) + lo] = m.at(r, j);
    basis.elements.emplace_back(weight, precision, std::move(c));
    basis.pivots.push_back(static_cast<long>(pivot_cols[r]) + lo);
  }
  return basis;
}

}  // namespace

EchelonBasis holomorphic_basis(int weight, long precision) {
  if (weight % 2 != 0) throw DomainError("holomorphic_basis: weight must be even");
  if (weight < 0) throw DomainError("holomorphic_basis: weight must be nonnegative");
  long min_prec = certificate_bound(weight, 0) + 1;
  if (precision < min_prec)
    throw PrecisionError("holomorphic_basis: precision " + std::to_string(precision) +
                             " below certificate requirement " + std::to_string(min_prec),
                         min_prec);
  return echelonize(weight_monomials(weight, precision), weight, 0, precision);
}

EchelonBasis weak_basis(int weight, long max_pole, long precision) {
  if (weight % 2 != 0) throw DomainError("weak_basis: weight must be even");
  if (max_pole < 0) throw DomainError("weak_basis: max_pole must be >= 0");
  long min_prec = certificate_bound(weight, max_pole) + 1;
  if (precision < min_prec)
    throw PrecisionError("weak_basis: precision " + std::to_string(precision) +
                             " below certificate requirement " + std::to_string(min_prec),
                         min_prec);
  int big_weight = weight + 12 * static_cast<int>(max_pole);
  if (big_weight < 0) {
    EchelonBasis empty;
    empty.weight = weight;
    empty.max_pole = max_pole;
    empty.precision = precision;
    return empty;
  }
  if (max_pole == 0) return echelonize(weight_monomials(weight, precision), weight, 0, precision);

  std::vector<FourierSeries> monos = weight_monomials(big_weight, precision + max_pole);
  FourierSeries delta_pow = delta(precision + 2 * max_pole).pow(static_cast<unsigned>(max_pole));
  FourierSeries delta_inv = series_invert(delta_pow, precision);
  std::vector<FourierSeries> gens;
  gens.reserve(monos.size());
  for (const FourierSeries& m : monos) gens.push_back(m * delta_inv);
  return echelonize(std::move(gens), weight, max_pole, precision);
}

EchelonBasis weak_cusp_basis(int weight, long max_pole, long precision) {
  EchelonBasis full = weak_basis(weight, max_pole, precision);
  std::vector<FourierSeries> kernel_gens;
  const FourierSeries* eliminator = nullptr;
  for (const FourierSeries& e : full.elements)
    if (e.coeff(0) != 0) eliminator = &e;
  for (const FourierSeries& e : full.elements) {
    if (&e == eliminator) continue;
    if (e.coeff(0) == 0) {
      kernel_gens.push_back(e);
    } else {
      Rational factor = e.coeff(0) / eliminator->coeff(0);
      kernel_gens.push_back(e - eliminator->scaled(factor));
    }
  }
  return echelonize(std::move(kernel_gens), weight, max_pole, precision);
}

MembershipResult membership(const FourierSeries& f, const EchelonBasis& basis) {
  if (f.weight() != basis.weight)
    throw DomainError("membership: weight mismatch (" + std::to_string(f.weight()) + " vs " +
                      std::to_string(basis.weight) + ")");
  long bound = certificate_bound(basis.weight, basis.max_pole);
  long min_prec = bound + 1;
  if (f.precision() < min_prec || basis.precision < min_prec)
    throw PrecisionError("membership: shared precision below certificate bound, need at least " +
                             std::to_string(min_prec),
                         min_prec);
  MembershipResult result;
  if (f.pole_order() > basis.max_pole) {
    result.in_span = false;
    result.obstruction_exponent = f.leading_exponent();
    return result;
  }
  FourierSeries residual = f;
  result.coordinates.reserve(basis.elements.size());
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    Rational c = f.coeff(basis.pivots[i]);
    result.coordinates.push_back(c);
    if (c != 0) residual = residual - basis.elements[i].scaled(c);
  }
  for (long n = -basis.max_pole; n <= bound; ++n) {
    if (residual.coeff(n) != 0) {
      result.in_span = false;
      result.coordinates.clear();
      result.obstruction_exponent = n;
      return result;
    }
  }
  result.in_span = true;
  return result;
}

}  // namespace weakhecke
