#include "cmod/binary_form.hpp"

#include <algorithm>
#include <sstream>

#include "cmod/error.hpp"

namespace cmod {

BinaryForm::BinaryForm(int degree) : degree_(degree), c_(static_cast<std::size_t>(degree) + 1) {
  if (degree < 0) throw Error(ErrorKind::InvalidInput, "binary form of negative degree");
}

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs) : degree_(degree), c_(std::move(coeffs)) {
  if (degree < 0 || c_.size() != static_cast<std::size_t>(degree) + 1)
    throw Error(ErrorKind::InvalidInput, "binary form needs degree+1 coefficients");
}

BinaryForm BinaryForm::constant(const Rational& c) { return BinaryForm(0, {c}); }

BinaryForm BinaryForm::monomial(const Rational& c, int a, int b) {
  BinaryForm f(a + b);
  f.c_[static_cast<std::size_t>(b)] = c;
  return f;
}

BinaryForm BinaryForm::homogenize(const UnivariatePoly& p, int degree) {
  if (p.degree() > degree)
    throw Error(ErrorKind::InvalidInput, "cannot homogenize a degree " + std::to_string(p.degree()) +
                                             " polynomial to degree " + std::to_string(degree));
  BinaryForm f(degree);
  for (int e = 0; e <= p.degree(); ++e) f.c_[static_cast<std::size_t>(degree - e)] = p.coeff(e);
  return f;
}

bool BinaryForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

const Rational& BinaryForm::leading() const {
  for (const auto& q : c_)
    if (sgn(q) != 0) return q;
  return c_.front();
}

UnivariatePoly BinaryForm::dehomogenize() const {
  std::vector<Rational> v(c_.size());
  for (int i = 0; i <= degree_; ++i) v[static_cast<std::size_t>(degree_ - i)] = c_[static_cast<std::size_t>(i)];
  return UnivariatePoly(std::move(v));
}

UnivariatePoly BinaryForm::dehomogenize_y() const { return UnivariatePoly(c_); }

int BinaryForm::z_valuation() const {
  for (int i = 0; i <= degree_; ++i)
    if (sgn(c_[static_cast<std::size_t>(i)]) != 0) return i;
  throw Error(ErrorKind::ZeroPolynomial, "Z-valuation of the zero form");
}

Rational BinaryForm::operator()(const Rational& y, const Rational& z) const {
  Rational acc = 0;
  std::vector<Rational> zp(c_.size());
  zp[0] = 1;
  for (std::size_t i = 1; i < zp.size(); ++i) zp[i] = zp[i - 1] * z;
  Rational yp = 1;
  for (int i = degree_; i >= 0; --i) {
    acc += c_[static_cast<std::size_t>(i)] * yp * zp[static_cast<std::size_t>(i)];
    yp *= y;
  }
  return acc;
}

std::complex<double> BinaryForm::eval(std::complex<double> y, std::complex<double> z) const {
  std::complex<double> acc = 0;
  for (int i = 0; i <= degree_; ++i) {
    double c = c_[static_cast<std::size_t>(i)].get_d();
    if (c == 0) continue;
    acc += c * std::pow(y, degree_ - i) * std::pow(z, i);
  }
  return acc;
}

BinaryForm BinaryForm::derivative_y() const {
  if (degree_ == 0) return BinaryForm(0);
  BinaryForm d(degree_ - 1);
  for (int i = 0; i < degree_; ++i) d.c_[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] * (degree_ - i);
  return d;
}

BinaryForm BinaryForm::derivative_z() const {
  if (degree_ == 0) return BinaryForm(0);
  BinaryForm d(degree_ - 1);
  for (int i = 1; i <= degree_; ++i) d.c_[static_cast<std::size_t>(i - 1)] = c_[static_cast<std::size_t>(i)] * i;
  return d;
}

BinaryForm BinaryForm::monic() const {
  if (is_zero()) return *this;
  BinaryForm r = *this;
  Rational inv = 1 / leading();
  for (auto& q : r.c_) q *= inv;
  return r;
}

BinaryForm BinaryForm::primitive() const {
  if (is_zero()) return *this;
  BinaryForm r = *this;
  Integer l = lcm_of_denominators(r.c_);
  for (auto& q : r.c_) q *= l;
  Integer g = gcd_of_numerators(r.c_);
  if (sgn(r.leading()) < 0) g = -g;
  for (auto& q : r.c_) {
    q /= g;
    q.canonicalize();
  }
  return r;
}

BinaryForm BinaryForm::pow(unsigned e) const {
  BinaryForm result = constant(1), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
  if (o.degree_ != degree_) throw Error(ErrorKind::InvalidInput, "adding binary forms of different degrees");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) {
  if (o.degree_ != degree_) throw Error(ErrorKind::InvalidInput, "subtracting binary forms of different degrees");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

BinaryForm& BinaryForm::operator*=(const Rational& c) {
  for (auto& q : c_) q *= c;
  return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm r(a.degree_ + b.degree_);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

BinaryForm BinaryForm::operator-() const {
  BinaryForm r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

std::string BinaryForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree_; ++i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (sgn(c) == 0) continue;
    int a = degree_ - i, b = i;
    Rational m = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    bool unit = (m == 1) && (a + b > 0);
    bool need_star = false;
    if (!unit) {
      os << cmod::to_string(m);
      need_star = true;
    }
    if (a > 0) {
      os << (need_star ? "*" : "") << "Y";
      if (a > 1) os << "^" << a;
      need_star = true;
    }
    if (b > 0) {
      os << (need_star ? "*" : "") << "Z";
      if (b > 1) os << "^" << b;
    }
  }
  return os.str();
}

BinaryForm exact_divide(const BinaryForm& a, const BinaryForm& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero form");
  if (b.degree() > a.degree()) throw Error(ErrorKind::Divisibility, "divisor has larger degree");
  const int deg = a.degree() - b.degree();
  if (a.is_zero()) return BinaryForm(deg);
  int va = a.z_valuation(), vb = b.z_valuation();
  if (vb > va) throw Error(ErrorKind::Divisibility, b.to_string() + " does not divide " + a.to_string());
  UnivariatePoly q = exact_divide(a.dehomogenize(), b.dehomogenize());
  BinaryForm out = BinaryForm::homogenize(q, deg - (va - vb));
  return out * BinaryForm::monomial(1, 0, va - vb);
}

BinaryForm gcd(const BinaryForm& a, const BinaryForm& b) {
  if (a.is_zero() && b.is_zero()) throw Error(ErrorKind::UndefinedGcd, "gcd of two zero forms");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  int v = std::min(a.z_valuation(), b.z_valuation());
  UnivariatePoly g = gcd(a.dehomogenize(), b.dehomogenize());
  return BinaryForm::homogenize(g, g.degree()) * BinaryForm::monomial(1, 0, v);
}

int SquarefreeFactorization::distinct_roots() const {
  int n = 0;
  for (const auto& [g, m] : factors) n += g.degree();
  return n;
}

std::vector<int> SquarefreeFactorization::root_pattern() const {
  std::vector<int> p;
  for (const auto& [g, m] : factors)
    for (int i = 0; i < g.degree(); ++i) p.push_back(m);
  std::sort(p.rbegin(), p.rend());
  return p;
}

BinaryForm SquarefreeFactorization::expand() const {
  BinaryForm r = BinaryForm::constant(scalar);
  for (const auto& [g, m] : factors) r = r * g.pow(static_cast<unsigned>(m));
  return r;
}

SquarefreeFactorization squarefree_factor(const BinaryForm& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree factorization of the zero form");
  SquarefreeFactorization out;
  out.scalar = f.leading();
  int v = f.z_valuation();
  UnivariatePoly a = f.dehomogenize();
  bool z_placed = (v == 0);
  for (auto& [g, m] : squarefree_decomposition(a)) {
    BinaryForm h = BinaryForm::homogenize(g, g.degree());
    if (m == v) {
      h = h * BinaryForm::Z();
      z_placed = true;
    }
    out.factors.emplace_back(std::move(h), m);
  }
  if (!z_placed) out.factors.emplace_back(BinaryForm::Z(), v);
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return x.second < y.second; });
  return out;
}

std::optional<PerfectPower> perfect_power(const BinaryForm& f, int e) {
  if (e < 1) throw Error(ErrorKind::InvalidInput, "perfect_power exponent must be positive");
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "perfect_power of the zero form");
  if (f.degree() % e != 0) return std::nullopt;
  SquarefreeFactorization sf = squarefree_factor(f);
  BinaryForm base = BinaryForm::constant(1);
  for (const auto& [g, m] : sf.factors) {
    if (m % e != 0) return std::nullopt;
    base = base * g.pow(static_cast<unsigned>(m / e));
  }
  base = base.primitive();
  Rational scalar = f.leading() / base.pow(static_cast<unsigned>(e)).leading();
  return PerfectPower{scalar, base};
}

std::optional<Rational> proportionality(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree() || a.is_zero() || b.is_zero()) return std::nullopt;
  Rational c = a.leading() / b.leading();
  for (int i = 0; i <= a.degree(); ++i)
    if (a.coeff(i) != c * b.coeff(i)) return std::nullopt;
  return c;
}

}  // namespace cmod
