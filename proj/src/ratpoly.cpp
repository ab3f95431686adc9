#include "weakhecke/ratpoly.hpp"

#include <algorithm>
#include <cstdint>

namespace weakhecke {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::x() { return RatPoly({Rational(0), Rational(1)}); }

const Rational& RatPoly::lead() const {
  if (c_.empty()) throw DomainError("RatPoly: zero polynomial has no leading coefficient");
  return c_.back();
}

RatPoly RatPoly::monic() const {
  if (is_zero()) throw DomainError("RatPoly: cannot make zero polynomial monic");
  Rational inv = 1 / lead();
  std::vector<Rational> out(c_);
  for (auto& v : out) v *= inv;
  return RatPoly(std::move(out));
}

RatPoly RatPoly::derivative() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(Rational(static_cast<long>(i)) * c_[i]);
  return RatPoly(std::move(out));
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
  return RatPoly(std::move(out));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
  return RatPoly(std::move(out));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rational> out(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return RatPoly(std::move(out));
}

RatPoly operator*(const Rational& s, const RatPoly& a) {
  std::vector<Rational> out(a.coeffs());
  for (auto& v : out) v *= s;
  return RatPoly(std::move(out));
}

std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw DomainError("poly_divmod: division by zero polynomial");
  std::vector<Rational> rem(a.coeffs());
  long db = b.degree();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<Rational> quo(a.degree() - db + 1, Rational(0));
  Rational inv = 1 / b.lead();
  for (long i = a.degree(); i >= db; --i) {
    Rational f = rem[i] * inv;
    if (f == 0) continue;
    quo[i - db] = f;
    for (long j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly poly_divexact(const RatPoly& a, const RatPoly& b) {
  auto [q, r] = poly_divmod(a, b);
  if (!r.is_zero()) throw InternalError("poly_divexact: division was not exact");
  return q;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = poly_divmod(a, b).second;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.monic();
}

RatPoly poly_pow(const RatPoly& a, unsigned e) {
  RatPoly out = RatPoly::constant(1);
  for (unsigned i = 0; i < e; ++i) out = out * a;
  return out;
}

namespace {

Rational trace(const RatMatrix& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a.at(i, i);
  return t;
}

}  // namespace

RatPoly charpoly(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("charpoly: non-square matrix");
  std::size_t n = a.rows();
  if (n == 0) return RatPoly({Rational(1)});
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RatMatrix m = a;
  c[n - 1] = -trace(m);
  for (std::size_t j = 2; j <= n; ++j) {
    RatMatrix shifted = m + RatMatrix::identity(n).scaled(c[n - j + 1]);
    m = a * shifted;
    c[n - j] = -trace(m) / Rational(static_cast<long>(j));
  }
  return RatPoly(std::move(c));
}

RatMatrix eval_poly_at_matrix(const RatPoly& p, const RatMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("eval_poly_at_matrix: non-square matrix");
  std::size_t n = a.rows();
  RatMatrix acc(n, n);
  for (long i = p.degree(); i >= 0; --i) {
    acc = acc * a;
    acc = acc + RatMatrix::identity(n).scaled(p.coeff(static_cast<std::size_t>(i)));
  }
  return acc;
}

namespace {

// ---- exact real-root machinery (Sturm chains over Q) ----

int sign_of(const Rational& r) { return mpq_sgn(r.get_mpq_t()); }

std::vector<RatPoly> sturm_chain(const RatPoly& f) {
  std::vector<RatPoly> chain{f, f.derivative()};
  while (!chain.back().is_zero()) {
    const RatPoly& p0 = chain[chain.size() - 2];
    const RatPoly& p1 = chain.back();
    RatPoly r = poly_divmod(p0, p1).second;
    chain.push_back(Rational(-1) * r);
  }
  chain.pop_back();
  return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
  int variations = 0, last = 0;
  for (const RatPoly& p : chain) {
    int s = p.is_zero() ? 0 : sign_of(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

// Number of distinct real roots in (a, b].
long roots_in(const std::vector<RatPoly>& chain, const Rational& a, const Rational& b) {
  return sign_variations(chain, a) - sign_variations(chain, b);
}

void integer_roots_rec(const RatPoly& g, const std::vector<RatPoly>& chain, const Integer& lo,
                       const Integer& hi, std::vector<Integer>& out) {
  if (roots_in(chain, Rational(lo), Rational(hi)) == 0) return;
  if (hi - lo == 1) {
    if (g.eval(Rational(hi)) == 0) out.push_back(hi);
    return;
  }
  Integer mid;
  mpz_fdiv_q_2exp(mid.get_mpz_t(), Integer(lo + hi).get_mpz_t(), 1);
  integer_roots_rec(g, chain, lo, mid, out);
  integer_roots_rec(g, chain, mid, hi, out);
}

// All integer roots of a monic square-free integer polynomial, via Sturm
// isolation plus integer bisection. Exact for arbitrarily large coefficients;
// no divisor enumeration needed.
std::vector<Integer> integer_roots(const RatPoly& g) {
  // Cauchy bound: every root satisfies |r| <= 1 + max |a_i|.
  Integer bound = 0;
  for (const Rational& c : g.coeffs()) {
    Integer a = abs(c.get_num());
    if (a > bound) bound = a;
  }
  bound += 1;
  std::vector<RatPoly> chain = sturm_chain(g);
  std::vector<Integer> out;
  integer_roots_rec(g, chain, -bound - 1, bound, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ---- factor-degree certificates modulo small primes ----

using ZpPoly = std::vector<std::uint64_t>;  // ascending coefficients in [0, p)

ZpPoly zp_trim(ZpPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

long zp_degree(const ZpPoly& a) { return static_cast<long>(a.size()) - 1; }

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  }
  return zp_trim(std::move(out));
}

std::uint64_t zp_inv(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

ZpPoly zp_monic(ZpPoly a, std::uint64_t p) {
  a = zp_trim(std::move(a));
  if (a.empty()) return a;
  std::uint64_t inv = zp_inv(a.back(), p);
  for (auto& v : a) v = v * inv % p;
  return a;
}

// a mod m, with m monic.
ZpPoly zp_mod(ZpPoly a, const ZpPoly& m, std::uint64_t p) {
  a = zp_trim(std::move(a));
  while (a.size() >= m.size()) {
    std::uint64_t f = a.back();
    std::size_t shift = a.size() - m.size();
    if (f != 0)
      for (std::size_t j = 0; j + 1 < m.size(); ++j)
        a[shift + j] = (a[shift + j] + p - f * m[j] % p) % p;
    a.pop_back();
    a = zp_trim(std::move(a));
  }
  return a;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
  a = zp_monic(std::move(a), p);
  b = zp_monic(std::move(b), p);
  while (!b.empty()) {
    ZpPoly r = zp_mod(std::move(a), b, p);
    a = std::move(b);
    b = zp_monic(std::move(r), p);
  }
  return a;
}

ZpPoly zp_divexact(ZpPoly a, const ZpPoly& b, std::uint64_t p) {
  // b monic, division exact
  if (a.size() < b.size()) return {};
  ZpPoly quo(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    std::uint64_t f = a.back();
    std::size_t shift = a.size() - b.size();
    quo[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - f * b[j] % p) % p;
    a = zp_trim(std::move(a));
  }
  return zp_trim(std::move(quo));
}

ZpPoly zp_powmod(ZpPoly base, std::uint64_t e, const ZpPoly& m, std::uint64_t p) {
  ZpPoly result{1};
  base = zp_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) result = zp_mod(zp_mul(result, base, p), m, p);
    base = zp_mod(zp_mul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

ZpPoly zp_derivative(const ZpPoly& a, std::uint64_t p) {
  ZpPoly out;
  for (std::size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * (i % p) % p);
  return zp_trim(std::move(out));
}

// Distinct-degree factorization of a monic square-free polynomial mod p:
// returns the multiset of irreducible factor degrees.
std::vector<long> zp_factor_degrees(ZpPoly f, std::uint64_t p) {
  std::vector<long> degrees;
  ZpPoly h{0, 1};  // x^(p^d) mod f, updated per round
  h = zp_mod(std::move(h), f, p);
  long d = 0;
  while (zp_degree(f) > 0) {
    ++d;
    if (2 * d > zp_degree(f)) {
      degrees.push_back(zp_degree(f));
      break;
    }
    h = zp_powmod(std::move(h), p, f, p);
    ZpPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    ZpPoly g = zp_gcd(diff, f, p);
    long dg = zp_degree(g);
    if (dg > 0) {
      for (long i = 0; i < dg / d; ++i) degrees.push_back(d);
      f = zp_divexact(std::move(f), g, p);
      h = zp_mod(std::move(h), f, p);
    }
  }
  return degrees;
}

// Irreducibility certificate over Q: intersect the achievable factor-degree
// sums across several primes; irreducible once only 0 and n survive. Same
// idea large computer-algebra systems use before running full factorization.
bool certify_irreducible(const RatPoly& h) {
  long n = h.degree();
  Integer den = 1;
  for (const Rational& c : h.coeffs()) den = lcm(den, c.get_den());
  std::vector<Integer> zc(h.coeffs().size());
  for (std::size_t i = 0; i < zc.size(); ++i) zc[i] = Rational(h.coeffs()[i] * Rational(den)).get_num();

  static const std::uint64_t primes[] = {1009, 1013, 1019, 1021, 1031, 1033, 1039, 1049,
                                         1051, 1061, 1063, 1069, 1087, 1091, 1093, 1097};
  std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
  for (std::uint64_t p : primes) {
    if (mpz_fdiv_ui(zc.back().get_mpz_t(), p) == 0) continue;
    ZpPoly fp(zc.size());
    for (std::size_t i = 0; i < zc.size(); ++i) fp[i] = mpz_fdiv_ui(zc[i].get_mpz_t(), p);
    fp = zp_monic(std::move(fp), p);
    if (zp_degree(zp_gcd(fp, zp_derivative(fp, p), p)) != 0) continue;  // not square-free mod p
    std::vector<long> degs = zp_factor_degrees(fp, p);
    std::vector<bool> sums(static_cast<std::size_t>(n) + 1, false);
    sums[0] = true;
    for (long dg : degs)
      for (long s = n; s >= dg; --s)
        if (sums[static_cast<std::size_t>(s - dg)]) sums[static_cast<std::size_t>(s)] = true;
    for (long s = 0; s <= n; ++s)
      possible[static_cast<std::size_t>(s)] =
          possible[static_cast<std::size_t>(s)] && sums[static_cast<std::size_t>(s)];
    bool irreducible = true;
    for (long s = 1; s < n; ++s)
      if (possible[static_cast<std::size_t>(s)]) irreducible = false;
    if (irreducible) return true;
  }
  return false;
}

}  // namespace

std::vector<Rational> rational_roots(const RatPoly& f) {
  if (f.is_zero()) throw DomainError("rational_roots: zero polynomial");
  if (f.degree() == 0) return {};
  RatPoly sq = poly_divexact(f, poly_gcd(f, f.derivative()));
  // integer model, then y = lead*x turns it into a monic integer polynomial
  Integer den = 1;
  for (const Rational& c : sq.coeffs()) den = lcm(den, c.get_den());
  std::vector<Integer> zc(sq.coeffs().size());
  for (std::size_t i = 0; i < zc.size(); ++i) zc[i] = Rational(sq.coeffs()[i] * Rational(den)).get_num();
  Integer lead = zc.back();
  long n = sq.degree();
  std::vector<Rational> gc(zc.size());
  gc[static_cast<std::size_t>(n)] = 1;
  for (long i = 0; i < n; ++i) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(n - 1 - i));
    gc[static_cast<std::size_t>(i)] = Rational(zc[static_cast<std::size_t>(i)] * scale);
  }
  RatPoly g(std::move(gc));
  std::vector<Rational> roots;
  for (const Integer& y : integer_roots(g)) {
    Rational r{y, lead};
    r.canonicalize();
    if (f.eval(r) == 0) roots.push_back(r);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<PolyFactor> factor_poly(const RatPoly& f) {
  if (f.is_zero()) throw DomainError("factor_poly: zero polynomial");
  RatPoly m = f.monic();
  if (m.degree() == 0) return {};
  RatPoly sq = poly_divexact(m, poly_gcd(m, m.derivative()));

  std::vector<RatPoly> irreducibles;
  RatPoly rem = sq.monic();
  for (const Rational& r : rational_roots(sq)) {
    RatPoly lin({-r, Rational(1)});
    irreducibles.push_back(lin);
    rem = poly_divexact(rem, lin);
  }
  if (rem.degree() >= 4) {
    if (!certify_irreducible(rem))
      throw DomainError("factor_poly: cannot certify irreducibility of degree " +
                        std::to_string(rem.degree()) + " factor");
    irreducibles.push_back(rem.monic());
  } else if (rem.degree() >= 2) {
    // degree 2 or 3 without a rational root is irreducible over Q
    irreducibles.push_back(rem.monic());
  } else if (rem.degree() == 1) {
    throw InternalError("factor_poly: linear factor escaped root finding");
  }

  std::sort(irreducibles.begin(), irreducibles.end(), [](const RatPoly& a, const RatPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (long i = a.degree(); i >= 0; --i) {
      std::size_t idx = static_cast<std::size_t>(i);
      if (a.coeff(idx) != b.coeff(idx)) return a.coeff(idx) < b.coeff(idx);
    }
    return false;
  });

  std::vector<PolyFactor> out;
  for (const RatPoly& q : irreducibles) {
    int mult = 0;
    RatPoly cur = m;
    while (true) {
      auto [quo, r] = poly_divmod(cur, q);
      if (!r.is_zero()) break;
      ++mult;
      cur = quo;
    }
    out.push_back({q, mult});
  }
  return out;
}

}  // namespace weakhecke
