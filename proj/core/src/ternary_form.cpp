#include "cmod/ternary_form.hpp"

#include <sstream>

#include "cmod/error.hpp"

namespace cmod {

namespace {

int degree_of(const Exponent& e) { return e[0] + e[1] + e[2]; }

void add_into(SparsePoly::Terms& terms, const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

SparsePoly::Terms multiply(const SparsePoly::Terms& a, const SparsePoly::Terms& b) {
  SparsePoly::Terms out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_into(out, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return out;
}

}  // namespace

SparsePoly SparsePoly::constant(const Rational& c) {
  SparsePoly p;
  p.add_term({0, 0, 0}, c);
  return p;
}

SparsePoly SparsePoly::variable(int index) {
  SparsePoly p;
  Exponent e{0, 0, 0};
  e[static_cast<std::size_t>(index)] = 1;
  p.add_term(e, 1);
  return p;
}

int SparsePoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
  return d;
}

void SparsePoly::add_term(const Exponent& e, const Rational& c) { add_into(terms_, e, c); }

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [e, c] : o.terms_) add_into(terms_, e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  for (const auto& [e, c] : o.terms_) add_into(terms_, e, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  r.terms_ = multiply(a.terms_, b.terms_);
  return r;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result = constant(1), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

TernaryForm::TernaryForm(int degree) : degree_(degree) {
  if (degree < 0) throw Error(ErrorKind::InvalidInput, "ternary form of negative degree");
}

TernaryForm TernaryForm::from(const SparsePoly& p, int degree_if_zero) {
  if (p.is_zero()) return TernaryForm(degree_if_zero);
  const auto& terms = p.terms();
  int first = degree_of(terms.begin()->first);
  for (const auto& [e, c] : terms) {
    int d = degree_of(e);
    if (d != first)
      throw Error(ErrorKind::NonHomogeneous, "polynomial is not homogeneous: monomials of degree " +
                                                 std::to_string(first) + " and " + std::to_string(d));
  }
  TernaryForm f(first);
  f.terms_ = terms;
  return f;
}

TernaryForm TernaryForm::monomial(const Rational& c, int a, int b, int cz) {
  TernaryForm f(a + b + cz);
  f.add_term({a, b, cz}, c);
  return f;
}

TernaryForm TernaryForm::from_x_coefficients(int degree, const std::vector<BinaryForm>& coeffs) {
  TernaryForm f(degree);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const BinaryForm& g = coeffs[k];
    if (g.is_zero()) continue;
    if (g.degree() != degree - static_cast<int>(k))
      throw Error(ErrorKind::InvalidInput, "coefficient of X^" + std::to_string(k) + " has degree " +
                                               std::to_string(g.degree()) + ", expected " +
                                               std::to_string(degree - static_cast<int>(k)));
    for (int i = 0; i <= g.degree(); ++i) f.add_term({static_cast<int>(k), g.degree() - i, i}, g.coeff(i));
  }
  return f;
}

TernaryForm TernaryForm::from_binary(const BinaryForm& g) { return from_x_coefficients(g.degree(), {g}); }

Rational TernaryForm::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TernaryForm::add_term(const Exponent& e, const Rational& c) {
  if (degree_of(e) != degree_) throw Error(ErrorKind::NonHomogeneous, "monomial degree does not match form degree");
  add_into(terms_, e, c);
}

int TernaryForm::x_degree() const { return terms_.empty() ? -1 : terms_.begin()->first[0]; }

BinaryForm TernaryForm::x_coefficient(int k) const {
  BinaryForm g(degree_ - k);
  std::vector<Rational> c(static_cast<std::size_t>(degree_ - k) + 1);
  for (const auto& [e, q] : terms_)
    if (e[0] == k) c[static_cast<std::size_t>(e[2])] = q;
  return BinaryForm(degree_ - k, std::move(c));
}

TernaryForm TernaryForm::partial(int var) const {
  TernaryForm d(degree_ > 0 ? degree_ - 1 : 0);
  for (const auto& [e, c] : terms_) {
    int p = e[static_cast<std::size_t>(var)];
    if (p == 0) continue;
    Exponent ne = e;
    ne[static_cast<std::size_t>(var)]--;
    add_into(d.terms_, ne, c * p);
  }
  return d;
}

Rational TernaryForm::operator()(const Point3& p) const {
  std::array<std::vector<Rational>, 3> powers;
  for (std::size_t v = 0; v < 3; ++v) {
    powers[v].resize(static_cast<std::size_t>(degree_) + 1);
    powers[v][0] = 1;
    for (std::size_t i = 1; i < powers[v].size(); ++i) powers[v][i] = powers[v][i - 1] * p[v];
  }
  Rational acc = 0;
  for (const auto& [e, c] : terms_)
    acc += c * powers[0][static_cast<std::size_t>(e[0])] * powers[1][static_cast<std::size_t>(e[1])] *
           powers[2][static_cast<std::size_t>(e[2])];
  return acc;
}

std::complex<double> TernaryForm::eval(const CPoint3& p) const {
  std::array<std::vector<std::complex<double>>, 3> powers;
  for (std::size_t v = 0; v < 3; ++v) {
    powers[v].resize(static_cast<std::size_t>(degree_) + 1);
    powers[v][0] = 1;
    for (std::size_t i = 1; i < powers[v].size(); ++i) powers[v][i] = powers[v][i - 1] * p[v];
  }
  std::complex<double> acc = 0;
  for (const auto& [e, c] : terms_)
    acc += c.get_d() * powers[0][static_cast<std::size_t>(e[0])] * powers[1][static_cast<std::size_t>(e[1])] *
           powers[2][static_cast<std::size_t>(e[2])];
  return acc;
}

TernaryForm TernaryForm::substitute(const Matrix3& m) const {
  // Old coordinate i becomes the linear form sum_j m[i][j] * new_j.
  std::array<std::vector<SparsePoly::Terms>, 3> powers;
  for (std::size_t i = 0; i < 3; ++i) {
    SparsePoly::Terms lin;
    for (std::size_t j = 0; j < 3; ++j) {
      Exponent e{0, 0, 0};
      e[j] = 1;
      add_into(lin, e, m[i][j]);
    }
    powers[i].resize(static_cast<std::size_t>(degree_) + 1);
    powers[i][0] = SparsePoly::Terms{{Exponent{0, 0, 0}, Rational(1)}};
    for (std::size_t k = 1; k < powers[i].size(); ++k) powers[i][k] = multiply(powers[i][k - 1], lin);
  }
  TernaryForm out(degree_);
  for (const auto& [e, c] : terms_) {
    SparsePoly::Terms t = multiply(powers[0][static_cast<std::size_t>(e[0])], powers[1][static_cast<std::size_t>(e[1])]);
    t = multiply(t, powers[2][static_cast<std::size_t>(e[2])]);
    for (const auto& [te, tc] : t) add_into(out.terms_, te, tc * c);
  }
  return out;
}

TernaryForm TernaryForm::pow(unsigned e) const {
  TernaryForm result = monomial(1, 0, 0, 0), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

TernaryForm TernaryForm::primitive() const {
  if (is_zero()) return *this;
  std::vector<Rational> c;
  for (const auto& [e, q] : terms_) c.push_back(q);
  Integer l = lcm_of_denominators(c);
  for (auto& q : c) q *= l;
  Integer g = gcd_of_numerators(c);
  if (sgn(c.front()) < 0) g = -g;
  TernaryForm out(degree_);
  Rational factor = Rational(l) / Rational(g);
  factor.canonicalize();
  for (const auto& [e, q] : terms_) out.terms_.emplace(e, q * factor);
  return out;
}

TernaryForm& TernaryForm::operator+=(const TernaryForm& o) {
  if (o.is_zero()) return *this;
  if (o.degree_ != degree_) throw Error(ErrorKind::InvalidInput, "adding ternary forms of different degrees");
  for (const auto& [e, c] : o.terms_) add_into(terms_, e, c);
  return *this;
}

TernaryForm& TernaryForm::operator-=(const TernaryForm& o) {
  if (o.is_zero()) return *this;
  if (o.degree_ != degree_) throw Error(ErrorKind::InvalidInput, "subtracting ternary forms of different degrees");
  for (const auto& [e, c] : o.terms_) add_into(terms_, e, -c);
  return *this;
}

TernaryForm& TernaryForm::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, q] : terms_) q *= c;
  return *this;
}

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
  TernaryForm r(a.degree_ + b.degree_);
  r.terms_ = multiply(a.terms_, b.terms_);
  return r;
}

TernaryForm TernaryForm::operator-() const {
  TernaryForm r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

std::string TernaryForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  static const char* names[3] = {"X", "Y", "Z"};
  for (const auto& [e, c] : terms_) {
    Rational m = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    bool star = false;
    if (m != 1 || degree_of(e) == 0) {
      os << cmod::to_string(m);
      star = true;
    }
    for (std::size_t v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      os << (star ? "*" : "") << names[v];
      if (e[v] > 1) os << "^" << e[v];
      star = true;
    }
  }
  return os.str();
}

TernaryForm exact_divide(const TernaryForm& a, const TernaryForm& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero form");
  if (b.degree() > a.degree()) throw Error(ErrorKind::Divisibility, "divisor has larger degree");
  TernaryForm rem = a;
  TernaryForm quot(a.degree() - b.degree());
  const auto& [lb, cb] = *b.terms().begin();
  while (!rem.is_zero()) {
    const auto& [la, ca] = *rem.terms().begin();
    Exponent q{la[0] - lb[0], la[1] - lb[1], la[2] - lb[2]};
    if (q[0] < 0 || q[1] < 0 || q[2] < 0)
      throw Error(ErrorKind::Divisibility, b.to_string() + " does not divide " + a.to_string());
    Rational f = ca / cb;
    TernaryForm t = TernaryForm::monomial(f, q[0], q[1], q[2]);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

std::optional<Rational> proportionality(const TernaryForm& a, const TernaryForm& b) {
  if (a.is_zero() || b.is_zero() || a.degree() != b.degree() || a.terms().size() != b.terms().size())
    return std::nullopt;
  Rational c = a.terms().begin()->second / b.terms().begin()->second;
  auto ib = b.terms().begin();
  for (auto ia = a.terms().begin(); ia != a.terms().end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != c * ib->second) return std::nullopt;
  return c;
}

}  // namespace cmod
