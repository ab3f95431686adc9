#ifndef WEAKHECKE_PAIRING_HPP
#define WEAKHECKE_PAIRING_HPP

#include <optional>

#include "weakhecke/harmonic.hpp"
#include "weakhecke/qseries.hpp"

namespace weakhecke {

// {f,g}_0 = sum_{n != 0} c_f(-n) c_g(n) / n^(2k-1). The sum is finite: only
// -g.pole_order <= n <= f.pole_order contribute.
Rational pairing_zero(const FourierSeries& f, const FourierSeries& g, int k);

// Bruinier-Funke pairing {f,G} = sum_n c_f(-n) c_G+(n), n = 0 included.
Rational bf_pairing(const FourierSeries& f, const FourierSeries& g);
ScalarPi bf_pairing(const FourierSeries& f, const FormalHarmonicForm& g);

enum class Obstruction { none, constant_term, residual };

struct DegeneracyResult {
  bool degenerate = false;
  std::optional<FourierSeries> witness;  // h with bol(h,k) = f, when degenerate
  Obstruction obstruction = Obstruction::none;
  long exponent = 0;  // obstructing exponent otherwise
};

// Exact decision of f in D^(2k-1)(S^!_(2-2k)). Requires c_f(0) = 0, forms the
// candidate h with c_h(n) = c_f(n)/n^(2k-1), and certifies h in the
// pole-bounded weak space via the valence bound. On success bol(h,k) = f is
// re-verified coefficientwise. max_pole_hint widens the search slice; the
// verdict is independent of it for any value >= f.pole_order.
DegeneracyResult is_degenerate(const FourierSeries& f, long max_pole_hint = -1);

// Input precision is_degenerate needs on a weight-2k form of the given pole.
long degeneracy_required_precision(int weight, long pole);

}  // namespace weakhecke

#endif
