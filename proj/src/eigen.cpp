#include "weakhecke/eigen.hpp"

#include <algorithm>

#include "weakhecke/operators.hpp"

namespace weakhecke {

namespace {

// Degenerate generators of the pole-bounded slice: bol images of the weak
// cusp basis at the dual weight, expressed in slice coordinates.
struct SlicePair {
  EchelonBasis slice;
  std::vector<FourierSeries> bol_images;
  RatMatrix coords;  // one row per generator
};

SlicePair build_slice_pair(int k, long max_pole, long precision) {
  SlicePair out;
  out.slice = weak_basis(2 * k, max_pole, precision);
  EchelonBasis cusp = weak_cusp_basis(2 - 2 * k, max_pole, precision);
  out.coords = RatMatrix(cusp.elements.size(), out.slice.elements.size());
  for (std::size_t i = 0; i < cusp.elements.size(); ++i) {
    FourierSeries image = bol(cusp.elements[i], k);
    MembershipResult mem = membership(image, out.slice);
    if (!mem.in_span)
      throw InternalError("build_quotient: bol image escaped the slice (certificate bug)");
    for (std::size_t j = 0; j < mem.coordinates.size(); ++j) out.coords.at(i, j) = mem.coordinates[j];
    out.bol_images.push_back(std::move(image));
  }
  return out;
}

// Free/pivot split of the degenerate coordinate matrix; the class functionals
// read the free entries after reduction against the RREF rows.
struct Functionals {
  RatMatrix rref;                      // RREF of the generator coordinates
  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> free_cols;

  RatVector reduce(RatVector v) const {
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      const Rational& c = v[pivot_cols[i]];
      if (c == 0) continue;
      Rational f = c;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rref.at(i, j);
    }
    RatVector out(free_cols.size());
    for (std::size_t l = 0; l < free_cols.size(); ++l) out[l] = v[free_cols[l]];
    return out;
  }
};

Functionals make_functionals(const RatMatrix& generator_coords) {
  Functionals f;
  f.rref = generator_coords;
  f.pivot_cols = f.rref.rref();
  std::vector<bool> is_pivot(generator_coords.cols(), false);
  for (std::size_t p : f.pivot_cols) is_pivot[p] = true;
  for (std::size_t j = 0; j < generator_coords.cols(); ++j)
    if (!is_pivot[j]) f.free_cols.push_back(j);
  // drop all-zero rows so pivot rows and pivot columns correspond 1:1
  std::size_t rank = f.pivot_cols.size();
  RatMatrix trimmed(rank, f.rref.cols());
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < f.rref.cols(); ++j) trimmed.at(i, j) = f.rref.at(i, j);
  f.rref = std::move(trimmed);
  return f;
}

long holomorphic_dimension(int weight) {
  long n = certificate_bound(weight, 0) + 1;
  return holomorphic_basis(weight, n).dimension();
}

}  // namespace

RatVector QuotientModel::class_coordinates(const FourierSeries& f) const {
  MembershipResult mem = membership(f, slice);
  if (!mem.in_span)
    throw DomainError("class_coordinates: form is not in the pole-bounded slice (exponent " +
                      std::to_string(mem.obstruction_exponent) + ")");
  return functionals.apply(mem.coordinates);
}

FourierSeries QuotientModel::section(const RatVector& coords) const {
  if (coords.size() != section_indices.size())
    throw DomainError("section: coordinate dimension mismatch");
  FourierSeries out = FourierSeries::zero(2 * k, precision);
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (coords[j] != 0) out = out + slice.elements[section_indices[j]].scaled(coords[j]);
  return out;
}

QuotientModel build_quotient(int k, long max_pole, long precision) {
  if (k < 1) throw DomainError("build_quotient: k must be >= 1");
  if (max_pole < 1) throw DomainError("build_quotient: max_pole must be >= 1");
  long min_prec = certificate_bound(2 * k, max_pole + 1) + 1;  // P+1 check included
  if (precision < min_prec)
    throw PrecisionError("build_quotient: precision " + std::to_string(precision) +
                             " below certificate requirement " + std::to_string(min_prec),
                         min_prec);

  QuotientModel model;
  model.k = k;
  model.max_pole = max_pole;
  model.precision = precision;
  model.holomorphic_dim = holomorphic_dimension(2 * k);

  SlicePair pair = build_slice_pair(k, max_pole, precision);
  model.slice = std::move(pair.slice);

  // echelonize the bol images as series for canonical principal-part reduction
  {
    const std::vector<FourierSeries>& gens = pair.bol_images;
    EchelonBasis deg;
    deg.weight = 2 * k;
    deg.max_pole = max_pole;
    deg.precision = precision;
    if (!gens.empty()) {
      RatMatrix m(gens.size(), static_cast<std::size_t>(precision + max_pole));
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (const auto& [n, v] : gens[i].coeffs())
          if (n < precision) m.at(i, static_cast<std::size_t>(n + max_pole)) = v;
      std::vector<std::size_t> pivot_cols = m.rref();
      for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
        std::map<long, Rational> c;
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (m.at(r, j) != 0) c[static_cast<long>(j) - max_pole] = m.at(r, j);
        deg.elements.emplace_back(2 * k, precision, std::move(c));
        deg.pivots.push_back(static_cast<long>(pivot_cols[r]) - max_pole);
      }
    }
    model.degenerate = std::move(deg);
  }

  Functionals fun = make_functionals(pair.coords);
  model.quotient_dim = static_cast<long>(fun.free_cols.size());
  model.section_indices = fun.free_cols;
  model.functionals = RatMatrix(fun.free_cols.size(), model.slice.elements.size());
  for (std::size_t j = 0; j < model.slice.elements.size(); ++j) {
    RatVector unit(model.slice.elements.size(), Rational(0));
    unit[j] = 1;
    RatVector phi = fun.reduce(std::move(unit));
    for (std::size_t l = 0; l < phi.size(); ++l) model.functionals.at(l, j) = phi[l];
  }

  if (model.quotient_dim != 2 * model.holomorphic_dim)
    throw StabilizationError(
        "build_quotient: slice quotient dimension " + std::to_string(model.quotient_dim) +
            " != 2 dim M_2k = " + std::to_string(2 * model.holomorphic_dim) +
            " (pole bound too small)",
        model.quotient_dim, 2 * model.holomorphic_dim);

  {
    SlicePair next = build_slice_pair(k, max_pole + 1, precision);
    model.quotient_dim_next =
        next.slice.dimension() - static_cast<long>(next.coords.rank());
  }
  if (model.quotient_dim_next != model.quotient_dim)
    throw StabilizationError("build_quotient: quotient dimension not stable between pole bounds " +
                                 std::to_string(max_pole) + " and " + std::to_string(max_pole + 1),
                             model.quotient_dim_next, model.quotient_dim);
  return model;
}

RatMatrix hecke_on_quotient(const QuotientModel& model, long m) {
  if (m < 1) throw DomainError("hecke_on_quotient: m must be >= 1");
  long big_pole = m * model.max_pole;
  long big_bound = certificate_bound(2 * model.k, big_pole);
  long out_prec = big_bound + 1;
  long required = hecke_required_precision(m, out_prec);
  if (model.precision < required)
    throw PrecisionError("hecke_on_quotient: model precision " + std::to_string(model.precision) +
                             " insufficient for T_" + std::to_string(m) + ", need at least " +
                             std::to_string(required),
                         required);

  SlicePair big = build_slice_pair(model.k, big_pole, out_prec);
  Functionals fun = make_functionals(big.coords);
  if (static_cast<long>(fun.free_cols.size()) != model.quotient_dim)
    throw StabilizationError("hecke_on_quotient: enlarged slice quotient dimension " +
                                 std::to_string(fun.free_cols.size()) + " differs from model's " +
                                 std::to_string(model.quotient_dim),
                             static_cast<long>(fun.free_cols.size()), model.quotient_dim);

  auto big_class = [&](const FourierSeries& f) {
    MembershipResult mem = membership(f.precision() > out_prec ? f.truncated(out_prec) : f,
                                      big.slice);
    if (!mem.in_span)
      throw InternalError("hecke_on_quotient: lift escaped the enlarged slice (certificate bug)");
    return fun.reduce(mem.coordinates);
  };

  // well-definedness: degenerate generators of the model slice must map to
  // the zero class in the enlarged slice
  for (const FourierSeries& u : model.degenerate.elements) {
    RatVector cls = big_class(u);
    for (const Rational& c : cls)
      if (c != 0)
        throw InternalError(
            "hecke_on_quotient: degenerate generator has nonzero class (certificate bug)");
  }

  std::size_t dim = static_cast<std::size_t>(model.quotient_dim);
  RatMatrix x(dim, dim), y(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const FourierSeries& g = model.slice.elements[model.section_indices[j]];
    RatVector xg = big_class(g);
    RatVector yg = big_class(hecke(g, m, out_prec));
    for (std::size_t i = 0; i < dim; ++i) {
      x.at(i, j) = xg[i];
      y.at(i, j) = yg[i];
    }
  }
  return x.inverse() * y;
}

namespace {

FourierSeries canonical_representative(const QuotientModel& model, const RatVector& coords) {
  FourierSeries f = model.section(coords);
  for (std::size_t i = 0; i < model.degenerate.elements.size(); ++i) {
    Rational c = f.coeff(model.degenerate.pivots[i]);
    if (c != 0) f = f - model.degenerate.elements[i].scaled(c);
  }
  if (!f.is_zero()) {
    Rational lead = f.coeff(f.leading_exponent());
    f = f.scaled(1 / lead);
  }
  return f;
}

}  // namespace

std::vector<EigenClass> eigenforms(const QuotientModel& model, long m) {
  RatMatrix a = hecke_on_quotient(model, m);
  RatPoly cp = charpoly(a);
  std::vector<PolyFactor> factors = factor_poly(cp);
  std::size_t dim = a.rows();

  std::vector<EigenClass> out;
  for (const PolyFactor& pf : factors) {
    if (pf.factor.degree() == 1) {
      Rational lambda = -pf.factor.coeff(0);
      RatMatrix shifted = a - RatMatrix::identity(dim).scaled(lambda);
      RatMatrix null = shifted.nullspace();
      for (std::size_t col = 0; col < null.cols(); ++col) {
        RatVector v(dim);
        for (std::size_t i = 0; i < dim; ++i) v[i] = null.at(i, col);
        EigenClass cls;
        cls.charpoly_factor = pf.factor;
        cls.eigenvalue = lambda;
        cls.multiplicity = pf.multiplicity;
        cls.representative = canonical_representative(model, v);
        cls.coordinates = std::move(v);
        out.push_back(std::move(cls));
      }
    } else {
      RatMatrix null = eval_poly_at_matrix(pf.factor, a).nullspace();
      if (null.cols() == 0)
        throw InternalError("eigenforms: irreducible factor with empty invariant subspace");
      RatVector v(dim);
      for (std::size_t i = 0; i < dim; ++i) v[i] = null.at(i, 0);
      EigenClass cls;
      cls.charpoly_factor = pf.factor;
      cls.eigenvalue = std::nullopt;
      cls.multiplicity = pf.multiplicity;
      cls.representative = canonical_representative(model, v);
      cls.coordinates = std::move(v);
      out.push_back(std::move(cls));
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const EigenClass& a, const EigenClass& b) {
    bool ra = a.eigenvalue.has_value(), rb = b.eigenvalue.has_value();
    if (ra != rb) return ra;  // rational eigenvalues first
    if (ra && rb && *a.eigenvalue != *b.eigenvalue) return *a.eigenvalue < *b.eigenvalue;
    if (a.charpoly_factor.degree() != b.charpoly_factor.degree())
      return a.charpoly_factor.degree() < b.charpoly_factor.degree();
    for (long i = a.charpoly_factor.degree(); i >= 0; --i) {
      std::size_t idx = static_cast<std::size_t>(i);
      if (a.charpoly_factor.coeff(idx) != b.charpoly_factor.coeff(idx))
        return a.charpoly_factor.coeff(idx) < b.charpoly_factor.coeff(idx);
    }
    return false;
  });
  return out;
}

EigenVerification verify_eigen(const FourierSeries& f, int k, long m, const Rational& lambda) {
  if (f.weight() != 2 * k) throw DomainError("verify_eigen: weight does not match 2k");
  if (m < 1) throw DomainError("verify_eigen: m must be >= 1");
  long big_pole = m * f.pole_order();
  long needed = certificate_bound(2 * k, big_pole) + 1;
  long required_in = hecke_required_precision(m, needed);
  if (f.precision() < required_in)
    throw PrecisionError("verify_eigen: precision " + std::to_string(f.precision()) +
                             " insufficient, need at least " + std::to_string(required_in),
                         required_in);
  FourierSeries image = hecke(f, m, needed);
  FourierSeries shifted = image - f.truncated(needed).scaled(lambda);
  EigenVerification out;
  out.certificate = is_degenerate(shifted, big_pole);
  out.holds = out.certificate.degenerate;
  return out;
}

RatMatrix hecke_matrix_on_holomorphic(int weight, long m) {
  long bound = certificate_bound(weight, 0);
  long basis_prec = std::max(hecke_required_precision(m, bound + 1), bound + 1);
  EchelonBasis basis = holomorphic_basis(weight, basis_prec);
  std::size_t dim = basis.elements.size();
  RatMatrix out(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    FourierSeries image = hecke(basis.elements[j], m, bound + 1);
    MembershipResult mem = membership(image, basis);
    if (!mem.in_span)
      throw InternalError("hecke_matrix_on_holomorphic: T_m image escaped M_w (certificate bug)");
    for (std::size_t i = 0; i < dim; ++i) out.at(i, j) = mem.coordinates[i];
  }
  return out;
}

}  // namespace weakhecke
