#include <cmath>

#include "cmod/error.hpp"
#include "cmod/rational.hpp"

namespace cmod {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorKind::InvalidInput, "not a rational number: '" + text + "'");
  q.canonicalize();
  return q;
}

namespace {

// log2 |q| rounded down, for nonzero q.
long log2_floor(const Rational& q) {
  long en = 0, ed = 0;
  mpz_get_d_2exp(&en, q.get_num_mpz_t());
  mpz_get_d_2exp(&ed, q.get_den_mpz_t());
  return en - ed;
}

}  // namespace

std::vector<double> to_doubles_scaled(std::span<const Rational> q, long* exponent) {
  long top = 0;
  bool any = false;
  for (const auto& v : q) {
    if (sgn(v) == 0) continue;
    long e = log2_floor(v);
    if (!any || e > top) top = e;
    any = true;
  }
  if (!any || (top < 900 && top > -900)) top = 0;
  std::vector<double> out;
  out.reserve(q.size());
  for (const auto& v : q) {
    if (sgn(v) == 0) {
      out.push_back(0.0);
      continue;
    }
    long en = 0, ed = 0;
    double n = mpz_get_d_2exp(&en, v.get_num_mpz_t());
    double d = mpz_get_d_2exp(&ed, v.get_den_mpz_t());
    out.push_back(std::ldexp(n / d, static_cast<int>(en - ed - top)));
  }
  if (exponent) *exponent = top;
  return out;
}

Integer lcm_of_denominators(std::span<const Rational> q) {
  Integer l = 1;
  for (const auto& v : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

Integer gcd_of_numerators(std::span<const Rational> q) {
  Integer g = 0;
  for (const auto& v : q) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  return g;
}

}  // namespace cmod
