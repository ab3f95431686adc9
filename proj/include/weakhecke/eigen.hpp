#ifndef WEAKHECKE_EIGEN_HPP
#define WEAKHECKE_EIGEN_HPP

#include <optional>
#include <vector>

#include "weakhecke/pairing.hpp"
#include "weakhecke/ratpoly.hpp"
#include "weakhecke/spaces.hpp"

namespace weakhecke {

// The slice quotient dimension disagreed with 2 dim M_2k: the pole bound is
// too small for the quotient to have stabilized.
struct StabilizationError : std::runtime_error {
  long computed;
  long expected;
  StabilizationError(const std::string& what, long computed_dim, long expected_dim)
      : std::runtime_error(what), computed(computed_dim), expected(expected_dim) {}
};

// Coordinate model of M^!_2k / D^(2k-1)(S^!_(2-2k)) on the slice of pole
// order <= max_pole. Coordinates are 2d rational functionals (d = dim M_2k)
// on slice coefficients that vanish on every degenerate generator; the
// section maps coordinates back to representative forms.
struct QuotientModel {
  int k = 1;
  long max_pole = 1;
  long precision = 1;
  EchelonBasis slice;                         // weak_basis(2k, P, N)
  EchelonBasis degenerate;                    // echelonized bol images inside the slice
  RatMatrix functionals;                      // 2d x dim(slice)
  std::vector<std::size_t> section_indices;   // slice elements representing unit classes
  long quotient_dim = 0;                      // 2 dim M_2k once stabilized
  long holomorphic_dim = 0;                   // dim M_2k
  long quotient_dim_next = 0;                 // same computation at max_pole + 1

  // Class coordinates of a slice member (certified via membership).
  RatVector class_coordinates(const FourierSeries& f) const;
  // Representative form of a coordinate vector.
  FourierSeries section(const RatVector& coords) const;
};

// Builds the quotient model, verifying codimension 2 dim M_2k and recording
// stabilization between max_pole and max_pole + 1.
QuotientModel build_quotient(int k, long max_pole, long precision);

// Matrix of [f] -> [f|T_m] in model coordinates: lift through the section,
// apply T_m, re-coordinatize inside the enlarged slice of pole <= m*max_pole.
// Includes the explicit well-definedness check that degenerate generators map
// to zero classes.
RatMatrix hecke_on_quotient(const QuotientModel& model, long m);

struct EigenClass {
  RatPoly charpoly_factor;             // monic irreducible
  std::optional<Rational> eigenvalue;  // set for degree-1 factors
  int multiplicity;                    // algebraic multiplicity in the char poly
  FourierSeries representative;        // canonicalized
  RatVector coordinates;               // class coordinates of the representative
};

// Eigenvalue classes of T_m on the quotient: one entry per independent
// eigenvector for rational eigenvalues, one entry per irreducible factor of
// degree >= 2 (reported with its invariant subspace representative, no
// algebraic-number arithmetic). Deterministic order: rational eigenvalues
// ascending, then factors by degree and coefficients.
std::vector<EigenClass> eigenforms(const QuotientModel& model, long m);

struct EigenVerification {
  bool holds = false;
  DegeneracyResult certificate;  // witness or obstruction for f|T_m - lambda f
};

// Checks f|T_m = lambda f modulo the degenerate subspace, exactly.
EigenVerification verify_eigen(const FourierSeries& f, int k, long m, const Rational& lambda);

// Matrix of T_m on M_2k in the echelon basis (used to cross-check the
// char-poly squaring structure on the quotient).
RatMatrix hecke_matrix_on_holomorphic(int weight, long m);

}  // namespace weakhecke

#endif
