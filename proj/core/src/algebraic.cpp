#include "cmod/algebraic.hpp"

#include "cmod/error.hpp"

namespace cmod {

namespace {
const UnivariatePoly kZeroPoly;

XPoly reduce(const XPoly& p, const UnivariatePoly& s) {
  std::vector<UnivariatePoly> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.push_back(q % s);
  return XPoly(std::move(c));
}

UnivariatePoly mulmod(const UnivariatePoly& a, const UnivariatePoly& b, const UnivariatePoly& s) {
  return (a * b) % s;
}

UnivariatePoly inverse_mod(const UnivariatePoly& a, const UnivariatePoly& s) {
  ExtendedGcd e = xgcd(a, s);
  if (e.g.degree() != 0) throw Error(ErrorKind::Internal, "non-invertible element in split arithmetic");
  return e.s % s;
}

XPoly make_monic(const XPoly& p, const UnivariatePoly& s) {
  if (p.is_zero()) return p;
  UnivariatePoly inv = inverse_mod(p.leading(), s);
  std::vector<UnivariatePoly> c;
  for (const auto& q : p.coeffs()) c.push_back(mulmod(q, inv, s));
  return XPoly(std::move(c));
}

// a mod b in (Q[y]/s)[x], b monic.
XPoly remainder(XPoly a, const XPoly& b, const UnivariatePoly& s) {
  const int db = b.degree();
  std::vector<UnivariatePoly> c = a.coeffs();
  for (int i = a.degree(); i >= db; --i) {
    UnivariatePoly lead = c[static_cast<std::size_t>(i)];
    if (lead.is_zero()) continue;
    for (int j = 0; j <= db; ++j) {
      auto& t = c[static_cast<std::size_t>(i - db + j)];
      t = (t - mulmod(lead, b.coeff(j), s)) % s;
    }
  }
  c.resize(static_cast<std::size_t>(std::max(db, 0)));
  return XPoly(std::move(c));
}

void gcd_split(const UnivariatePoly& s, const XPoly& a, const XPoly& b, std::vector<SplitPoly>& out) {
  for (auto& [s1, b1] : normalize_over_roots(s, b)) {
    XPoly a1 = reduce(a, s1);
    if (b1.is_zero()) {
      for (auto& [s2, a2] : normalize_over_roots(s1, a1)) out.push_back({s2, make_monic(a2, s2)});
      continue;
    }
    XPoly bm = make_monic(b1, s1);
    gcd_split(s1, bm, remainder(a1, bm, s1), out);
  }
}

}  // namespace

XPoly::XPoly(std::vector<UnivariatePoly> coeffs) : c_(std::move(coeffs)) { trim(); }

void XPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly XPoly::from_form(const TernaryForm& g) {
  std::vector<std::vector<Rational>> c(static_cast<std::size_t>(std::max(g.x_degree(), 0)) + 1);
  for (const auto& [e, q] : g.terms()) {
    auto& v = c[static_cast<std::size_t>(e[0])];
    if (v.size() <= static_cast<std::size_t>(e[1])) v.resize(static_cast<std::size_t>(e[1]) + 1);
    v[static_cast<std::size_t>(e[1])] += q;
  }
  std::vector<UnivariatePoly> out;
  for (auto& v : c) out.emplace_back(std::move(v));
  return XPoly(std::move(out));
}

const UnivariatePoly& XPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return kZeroPoly;
  return c_[static_cast<std::size_t>(k)];
}

UnivariatePoly XPoly::at(const Rational& y0) const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const auto& q : c_) v.push_back(q(y0));
  return UnivariatePoly(std::move(v));
}

std::vector<std::complex<double>> XPoly::at(std::complex<double> y0) const {
  std::vector<std::complex<double>> v;
  v.reserve(c_.size());
  for (const auto& q : c_) v.push_back(q.eval(y0));
  return v;
}

XPoly XPoly::derivative_x() const {
  std::vector<UnivariatePoly> c;
  for (std::size_t k = 1; k < c_.size(); ++k) c.push_back(c_[k] * Rational(static_cast<long>(k)));
  return XPoly(std::move(c));
}

XPoly XPoly::derivative_y() const {
  std::vector<UnivariatePoly> c;
  for (const auto& q : c_) c.push_back(q.derivative());
  return XPoly(std::move(c));
}

std::vector<SplitPoly> normalize_over_roots(const UnivariatePoly& s, const XPoly& p) {
  std::vector<SplitPoly> out;
  std::vector<SplitPoly> work{{s, reduce(p, s)}};
  while (!work.empty()) {
    SplitPoly cur = std::move(work.back());
    work.pop_back();
    if (cur.poly.is_zero()) {
      out.push_back(std::move(cur));
      continue;
    }
    UnivariatePoly g = gcd(cur.poly.leading(), cur.modulus);
    if (g.degree() == 0) {
      out.push_back(std::move(cur));
      continue;
    }
    // The leading coefficient vanishes exactly on the roots of g.
    UnivariatePoly rest = exact_divide(cur.modulus, g);
    std::vector<UnivariatePoly> lowered(cur.poly.coeffs().begin(), cur.poly.coeffs().end() - 1);
    work.push_back({g, reduce(XPoly(std::move(lowered)), g)});
    if (rest.degree() > 0) work.push_back({rest, reduce(cur.poly, rest)});
  }
  return out;
}

std::vector<SplitPoly> gcd_over_roots(const UnivariatePoly& s, const std::vector<XPoly>& polys) {
  if (polys.empty()) throw Error(ErrorKind::InvalidInput, "gcd of an empty list");
  std::vector<SplitPoly> pieces;
  for (auto& piece : normalize_over_roots(s, polys.front()))
    pieces.push_back({piece.modulus, make_monic(piece.poly, piece.modulus)});
  for (std::size_t i = 1; i < polys.size(); ++i) {
    std::vector<SplitPoly> next;
    for (const auto& piece : pieces) gcd_split(piece.modulus, piece.poly, reduce(polys[i], piece.modulus), next);
    pieces = std::move(next);
  }
  return pieces;
}

std::vector<SplitCount> distinct_roots_over(const UnivariatePoly& s, const XPoly& p) {
  std::vector<SplitCount> out;
  for (const auto& piece : normalize_over_roots(s, p)) {
    if (piece.poly.is_zero()) {
      out.push_back({piece.modulus, -1, 0});
      continue;
    }
    const int deg = piece.poly.degree();
    for (const auto& g : gcd_over_roots(piece.modulus, {piece.poly, piece.poly.derivative_x()}))
      out.push_back({g.modulus, deg, deg - std::max(g.poly.degree(), 0)});
  }
  return out;
}

}  // namespace cmod
