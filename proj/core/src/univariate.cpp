#include "cmod/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cmod/error.hpp"
#include "cmod/roots.hpp"

namespace cmod {

namespace {
const Rational kZero(0);
}

UnivariatePoly::UnivariatePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UnivariatePoly::UnivariatePoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

UnivariatePoly UnivariatePoly::constant(const Rational& c) { return UnivariatePoly(std::vector<Rational>{c}); }

UnivariatePoly UnivariatePoly::monomial(const Rational& c, int exponent) {
  std::vector<Rational> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  return UnivariatePoly(std::move(v));
}

UnivariatePoly UnivariatePoly::linear_root(const Rational& root) {
  return UnivariatePoly(std::vector<Rational>{-root, Rational(1)});
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& UnivariatePoly::coeff(int exponent) const {
  if (exponent < 0 || exponent > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(exponent)];
}

const Rational& UnivariatePoly::leading() const { return is_zero() ? kZero : coeffs_.back(); }

Rational UnivariatePoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> UnivariatePoly::eval(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

UnivariatePoly UnivariatePoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UnivariatePoly(std::move(v));
}

UnivariatePoly UnivariatePoly::monic() const {
  if (is_zero()) return {};
  UnivariatePoly r = *this;
  Rational inv = 1 / leading();
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

UnivariatePoly UnivariatePoly::primitive() const {
  if (is_zero()) return {};
  Integer l = lcm_of_denominators(coeffs_);
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c *= l;
  Integer g = gcd_of_numerators(v);
  if (sgn(v.back()) < 0) g = -g;
  for (auto& c : v) {
    c /= g;
    c.canonicalize();
  }
  return UnivariatePoly(std::move(v));
}

UnivariatePoly UnivariatePoly::compose(const UnivariatePoly& q) const {
  UnivariatePoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += constant(*it);
  }
  return acc;
}

UnivariatePoly UnivariatePoly::pow(unsigned e) const {
  UnivariatePoly result = constant(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

UnivariatePoly& UnivariatePoly::operator+=(const UnivariatePoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UnivariatePoly& UnivariatePoly::operator-=(const UnivariatePoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UnivariatePoly& UnivariatePoly::operator*=(const UnivariatePoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(v);
  trim();
  return *this;
}

UnivariatePoly& UnivariatePoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UnivariatePoly UnivariatePoly::operator-() const {
  UnivariatePoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string UnivariatePoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = degree(); e >= 0; --e) {
    const Rational& c = coeffs_[static_cast<std::size_t>(e)];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    bool unit = (a == 1);
    if (!unit || e == 0) os << cmod::to_string(a);
    if (e > 0) {
      if (!unit) os << "*";
      os << var;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {UnivariatePoly(), a};
  std::vector<Rational> r = a.coeffs();
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  Rational inv = 1 / b.leading();
  const auto& bc = b.coeffs();
  int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    const Rational& lead = r[static_cast<std::size_t>(i)];
    if (sgn(lead) == 0) continue;
    Rational f = lead * inv;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * bc[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {UnivariatePoly(std::move(q)), UnivariatePoly(std::move(r))};
}

UnivariatePoly operator%(const UnivariatePoly& a, const UnivariatePoly& b) { return divmod(a, b).second; }

UnivariatePoly exact_divide(const UnivariatePoly& a, const UnivariatePoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::Divisibility, "polynomial is not divisible by " + b.to_string());
  return q;
}

UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::UndefinedGcd, "gcd(0, 0) is undefined");
  UnivariatePoly x = a.monic(), y = b.monic();
  while (!y.is_zero()) {
    UnivariatePoly r = (x % y).monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

ExtendedGcd xgcd(const UnivariatePoly& a, const UnivariatePoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::UndefinedGcd, "gcd(0, 0) is undefined");
  UnivariatePoly r0 = a, r1 = b;
  UnivariatePoly s0 = UnivariatePoly::constant(1), s1;
  UnivariatePoly t0, t1 = UnivariatePoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UnivariatePoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    UnivariatePoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

std::vector<std::pair<UnivariatePoly, int>> squarefree_decomposition(const UnivariatePoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree decomposition of the zero polynomial");
  std::vector<std::pair<UnivariatePoly, int>> out;
  if (f.degree() == 0) return out;
  UnivariatePoly fm = f.monic();
  UnivariatePoly fp = fm.derivative();
  UnivariatePoly a = gcd(fm, fp);
  UnivariatePoly b = exact_divide(fm, a);
  UnivariatePoly c = exact_divide(fp, a);
  UnivariatePoly dd = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    UnivariatePoly g = gcd(b, dd);
    if (g.degree() > 0) out.emplace_back(g, i);
    b = exact_divide(b, g);
    c = exact_divide(dd, g);
    dd = c - b.derivative();
    ++i;
  }
  return out;
}

UnivariatePoly squarefree_part(const UnivariatePoly& f) {
  if (f.degree() <= 0) return f.is_zero() ? f : UnivariatePoly::constant(1);
  return exact_divide(f.monic(), gcd(f, f.derivative()));
}

std::vector<Rational> rational_roots(const UnivariatePoly& f) {
  std::vector<Rational> out;
  if (f.degree() < 1) return out;
  UnivariatePoly p = f.primitive();
  // Every rational root a/b in lowest terms has b | lc(p), so lc(p)*root is an integer.
  const Rational& lead = p.leading();
  if (sgn(p.coeff(0)) == 0) out.emplace_back(0);
  UnivariatePoly sf = squarefree_part(p);
  RootSet rs;
  try {
    rs = complex_roots(sf, 1e-12);
  } catch (const IllConditionedError& e) {
    rs = e.partial();
  }
  for (const auto& r : rs.roots) {
    if (std::abs(r.im) > 1e-6 * std::max(1.0, std::abs(r.re))) continue;
    long double scaled = static_cast<long double>(r.re) * lead.get_d();
    if (!std::isfinite(static_cast<double>(scaled)) || std::fabs(static_cast<double>(scaled)) > 4e18) continue;
    long long center = std::llround(scaled);
    for (long long cand : {center, center - 1, center + 1}) {
      Rational q(Integer(static_cast<long>(cand)), lead.get_num());
      q.canonicalize();
      if (sgn(q) != 0 && sgn(p(q)) == 0 &&
          std::find(out.begin(), out.end(), q) == out.end()) {
        out.push_back(q);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cmod
