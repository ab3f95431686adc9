#ifndef WEAKHECKE_NUMERIC_HPP
#define WEAKHECKE_NUMERIC_HPP

#include <complex>

#include "weakhecke/qseries.hpp"

namespace weakhecke {

// Floating-point corroboration layer: evaluates the truncated
// fundamental-domain inner product for convergent pairs. Double precision
// with agreement-based refinement; the exact modules carry the proof burden.

// The truncated-integral limit does not exist: some jointly non-decaying
// Fourier mode survives in both forms (its index is recorded).
struct DivergentPairError : std::runtime_error {
  long mode;
  DivergentPairError(const std::string& what, long divergent_mode)
      : std::runtime_error(what), mode(divergent_mode) {}
};

struct ConvergenceError : std::runtime_error {
  double last, previous;
  ConvergenceError(const std::string& what, double last_value, double previous_value)
      : std::runtime_error(what), last(last_value), previous(previous_value) {}
};

struct QuadratureSpec {
  double truncation_height = 6.0;  // T > 1
  int panels_x = 8;
  int panels_y = 8;
  long series_terms = 0;      // 0: choose from the tail heuristic
  double tolerance = 1e-12;   // relative agreement target between grid levels
  double abs_floor = 1e-14;   // absolute agreement floor (near-zero values)
  int max_refinements = 6;

  void validate() const;  // T > 1 etc.
};

struct EvalResult {
  std::complex<double> value;
  double tail_bound;  // heuristic, from max-coefficient growth; not rigorous
};

// sum_{n=-p}^{L-1} c(n) e^(2 pi i n z) for y >= sqrt(3)/2.
EvalResult eval_form(const FourierSeries& f, std::complex<double> z, long series_terms);

// Series length making the heuristic tail bound at y = sqrt(3)/2 < tol/10.
long choose_series_terms(const FourierSeries& f, double tolerance);

struct InnerResult {
  double value = 0;
  double previous = 0;         // value at the coarser grid level
  double estimated_error = 0;  // |value - previous|
  int panels_x = 0, panels_y = 0;
  long series_terms = 0;
  double truncation_height = 0;
};

// Integral of f conj(g) y^(2k) dx dy / y^2 over the truncated fundamental
// domain F_T, by panelwise Gauss-Legendre with grid-doubling until two levels
// agree. Refuses pairs whose T -> infinity limit diverges.
InnerResult truncated_inner(const FourierSeries& f, const FourierSeries& g,
                            const QuadratureSpec& spec);

struct HermitianReport {
  double lhs = 0;  // <T_m f, g>_T
  double rhs = 0;  // <f, T_m g>_T
  double relative_gap = 0;
  InnerResult lhs_detail, rhs_detail;
};

// Numeric corroboration of Hecke Hermiticity on cusp forms.
HermitianReport check_hermitian_numeric(const FourierSeries& f, const FourierSeries& g, long m,
                                        const QuadratureSpec& spec);

}  // namespace weakhecke

#endif
