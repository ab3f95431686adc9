#ifndef WEAKHECKE_OPERATORS_HPP
#define WEAKHECKE_OPERATORS_HPP

#include "weakhecke/qseries.hpp"

namespace weakhecke {

// Input precision the Hecke operator T_m needs to deliver out_precision
// output coefficients (the n-th output coefficient reads c(m*n)).
long hecke_required_precision(long m, long out_precision);

// Largest output precision T_m can honestly produce from f.
long hecke_max_out_precision(const FourierSeries& f, long m);

// T_m on a weight-2kappa expansion:
//   c'(n) = sum_{d | gcd(m,n)} d^(2kappa-1) c(m n / d^2),
// with gcd(m,0) = m so the constant term picks up sigma_{2kappa-1}(m) c(0).
// For negative weights d^(2kappa-1) is a rational, handled exactly.
FourierSeries hecke(const FourierSeries& f, long m, long out_precision);

// Bol operator D^(2k-1), weight 2-2k -> 2k: c'(n) = n^(2k-1) c(n), c'(0) = 0.
// Pole order and precision are preserved.
FourierSeries bol(const FourierSeries& f, int k);

}  // namespace weakhecke

#endif
