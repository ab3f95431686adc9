#ifndef WEAKHECKE_RATPOLY_HPP
#define WEAKHECKE_RATPOLY_HPP

#include <utility>
#include <vector>

#include "weakhecke/ratmat.hpp"
#include "weakhecke/rational.hpp"

namespace weakhecke {

// Univariate polynomial over the rationals, coefficients ascending.
class RatPoly {
 public:
  RatPoly() {}
  explicit RatPoly(std::vector<Rational> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly x();

  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& lead() const;

  RatPoly monic() const;
  RatPoly derivative() const;
  Rational eval(const Rational& x) const;

  bool operator==(const RatPoly& other) const = default;

 private:
  std::vector<Rational> c_;
};

RatPoly operator+(const RatPoly& a, const RatPoly& b);
RatPoly operator-(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const Rational& s, const RatPoly& a);

// Quotient and remainder; divisor must be nonzero.
std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b);
// Division known to be exact; throws InternalError on a nonzero remainder.
RatPoly poly_divexact(const RatPoly& a, const RatPoly& b);
// Monic gcd.
RatPoly poly_gcd(RatPoly a, RatPoly b);
RatPoly poly_pow(const RatPoly& a, unsigned e);

// Monic characteristic polynomial det(xI - A), Faddeev-LeVerrier.
RatPoly charpoly(const RatMatrix& a);
RatMatrix eval_poly_at_matrix(const RatPoly& p, const RatMatrix& a);

// Distinct rational roots, ascending. Exact: integer-root search on the
// monicized integer model via Sturm isolation, no float anywhere.
std::vector<Rational> rational_roots(const RatPoly& f);

struct PolyFactor {
  RatPoly factor;  // monic irreducible
  int multiplicity;
};

// Monic irreducible factorization. Handles arbitrary rational roots exactly;
// rootless remainders of degree <= 3 are certified irreducible directly and
// higher degrees via factor-degree patterns modulo several primes. Throws
// DomainError if a remainder cannot be certified (does not occur for the
// Hecke characteristic polynomials in the supported weight range).
std::vector<PolyFactor> factor_poly(const RatPoly& f);

}  // namespace weakhecke

#endif
