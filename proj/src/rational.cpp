#include "weakhecke/rational.hpp"

namespace weakhecke {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Rational rational_pow(long base, long e) {
  if (base == 0 && e < 0) throw DomainError("rational_pow: 0 to a negative power");
  Integer p = integer_pow(base < 0 ? -base : base, static_cast<unsigned long>(e < 0 ? -e : e));
  if (base < 0 && (e % 2 != 0)) p = -p;
  Rational r;
  if (e >= 0) {
    r = Rational(p);
  } else {
    r = Rational(Integer(1), p);
    r.canonicalize();
  }
  return r;
}

Integer integer_pow(long base, unsigned long e) {
  Integer out, b(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::string format_rational(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool valid_integer_token(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return false;
  // no redundant leading zero ("-0" and "007" are rejected, "0" is fine)
  if (s[i] == '0' && s.size() - i > 1) return false;
  if (s == "-0") return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& s, bool require_canonical) {
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!valid_integer_token(num) || !valid_integer_token(den))
    throw DomainError("parse_rational: malformed rational '" + s + "'");
  Integer n(num), d(den);
  if (d <= 0) throw DomainError("parse_rational: non-positive denominator in '" + s + "'");
  Rational r(n, d);
  if (require_canonical) {
    Rational canon = r;
    canon.canonicalize();
    if (cmp(canon.get_num(), r.get_num()) != 0 || cmp(canon.get_den(), r.get_den()) != 0)
      throw DomainError("parse_rational: '" + s + "' is not in lowest terms");
    return canon;
  }
  r.canonicalize();
  return r;
}

double to_double(const Rational& r) { return mpq_get_d(r.get_mpq_t()); }

}  // namespace weakhecke
