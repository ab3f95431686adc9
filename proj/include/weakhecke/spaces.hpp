#ifndef WEAKHECKE_SPACES_HPP
#define WEAKHECKE_SPACES_HPP

#include <vector>

#include "weakhecke/qseries.hpp"

namespace weakhecke {

// Row-reduced basis of a pole-bounded slice of a weight space. Element i has
// coefficient 1 at pivots[i] and 0 at every other pivot; pivots are strictly
// increasing and are the earliest exponents possible (reduction from q^-P up).
struct EchelonBasis {
  int weight = 0;
  long max_pole = 0;
  long precision = 1;
  std::vector<FourierSeries> elements;
  std::vector<long> pivots;

  long dimension() const { return static_cast<long>(elements.size()); }
};

// Vanishing through exponent B = max_pole + floor(weight/12) + 1 certifies a
// form in the slice is identically zero (multiply by Delta^P and apply the
// valence formula). Verdicts that scan up to B are exact, not "to precision".
long certificate_bound(int weight, long max_pole);

// Echelon basis of M_w from the monomials E4^a E6^b with 4a + 6b = w.
EchelonBasis holomorphic_basis(int weight, long precision);

// Basis of {f in M^!_w : pole order <= max_pole}, spanned by
// Delta^-P * (holomorphic forms of weight w + 12P). Needs
// precision >= certificate_bound + 1 so membership stays certifiable.
EchelonBasis weak_basis(int weight, long max_pole, long precision);

// Kernel of the constant-term functional on weak_basis.
EchelonBasis weak_cusp_basis(int weight, long max_pole, long precision);

struct MembershipResult {
  bool in_span = false;
  std::vector<Rational> coordinates;    // valid when in_span
  long obstruction_exponent = 0;        // first nonzero residual exponent otherwise
};

// Exact span membership with the valence-formula certificate. A form whose
// residual vanishes on all exponents up to the certificate bound is exactly
// in the span, not merely to working precision.
MembershipResult membership(const FourierSeries& f, const EchelonBasis& basis);

}  // namespace weakhecke

#endif
