#include "cmod/singular.hpp"

#include <algorithm>
#include <cmath>

#include "cmod/algebraic.hpp"
#include "cmod/binary_form.hpp"
#include "cmod/error.hpp"
#include "cmod/resultant.hpp"

namespace cmod {

using cd = std::complex<double>;

const char* to_string(SingularType t) {
  switch (t) {
    case SingularType::Node: return "NODE";
    case SingularType::CuspA2: return "CUSP_A2";
    case SingularType::TacnodeA3: return "TACNODE_A3";
    case SingularType::OrdinaryTriple: return "ORDINARY_TRIPLE";
    case SingularType::Y3X4: return "Y3_X4";
    case SingularType::Other: return "OTHER";
  }
  return "OTHER";
}

namespace {

bool zero(const Rational& q, double) { return sgn(q) == 0; }
bool zero(const cd& z, double thr) { return std::abs(z) <= thr; }
double magnitude(const Rational& q) { return std::abs(q.get_d()); }
double magnitude(const cd& z) { return std::abs(z); }
cd as_scalar(const Rational& q, cd) { return cd(q.get_d()); }
Rational as_scalar(const Rational& q, Rational) { return q; }

// Dense polynomial in (u, v) of total degree <= n; c[a][b] multiplies u^a v^b.
template <class T>
struct Bi {
  int n = 0;
  std::vector<std::vector<T>> c;

  explicit Bi(int deg) : n(deg), c(static_cast<std::size_t>(deg) + 1, std::vector<T>(static_cast<std::size_t>(deg) + 1, T(0))) {}

  T& at(int a, int b) { return c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  T get(int a, int b) const {
    if (a < 0 || b < 0 || a + b > n) return T(0);
    return c[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

  Bi mul(const Bi& o) const {
    Bi r(n);
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) {
        if (c[a][b] == T(0)) continue;
        for (int p = 0; a + p <= n; ++p)
          for (int q = 0; a + b + p + q <= n; ++q) r.at(a + p, b + q) += c[a][b] * o.c[p][q];
      }
    return r;
  }

  double scale() const {
    double s = 0;
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) s = std::max(s, magnitude(c[a][b]));
    return s;
  }
};

// l(u, v) = lu u + lv v + l1.
template <class T>
Bi<T> linear(int n, const T& lu, const T& lv, const T& l1) {
  Bi<T> r(n);
  r.at(0, 0) = l1;
  if (n >= 1) {
    r.at(1, 0) = lu;
    r.at(0, 1) = lv;
  }
  return r;
}

template <class T>
std::vector<Bi<T>> powers(const Bi<T>& l, int n) {
  std::vector<Bi<T>> p;
  Bi<T> one(l.n);
  one.at(0, 0) = T(1);
  p.push_back(one);
  for (int i = 1; i <= n; ++i) p.push_back(p.back().mul(l));
  return p;
}

// g(N (u, v, 1)) for the 3x3 matrix N given by rows.
template <class T>
Bi<T> local_expansion(const TernaryForm& g, const std::array<std::array<T, 3>, 3>& N) {
  const int n = g.degree();
  std::array<std::vector<Bi<T>>, 3> pw;
  for (int i = 0; i < 3; ++i) pw[static_cast<std::size_t>(i)] = powers(linear<T>(n, N[i][0], N[i][1], N[i][2]), n);
  Bi<T> f(n);
  for (const auto& [e, q] : g.terms()) {
    Bi<T> t = pw[0][static_cast<std::size_t>(e[0])].mul(pw[1][static_cast<std::size_t>(e[1])]).mul(pw[2][static_cast<std::size_t>(e[2])]);
    T s = as_scalar(q, T(0));
    for (int a = 0; a <= n; ++a)
      for (int b = 0; a + b <= n; ++b) f.at(a, b) += s * t.c[a][b];
  }
  return f;
}

// f(u0 s + p t, v0 s + q t).
template <class T>
Bi<T> rotate(const Bi<T>& f, const T& u0, const T& p, const T& v0, const T& q) {
  const int n = f.n;
  auto pu = powers(linear<T>(n, u0, p, T(0)), n);
  auto pv = powers(linear<T>(n, v0, q, T(0)), n);
  Bi<T> r(n);
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b) {
      if (f.c[a][b] == T(0)) continue;
      Bi<T> t = pu[static_cast<std::size_t>(a)].mul(pv[static_cast<std::size_t>(b)]);
      for (int x = 0; x <= n; ++x)
        for (int y = 0; x + y <= n; ++y) r.at(x, y) += f.c[a][b] * t.c[x][y];
    }
  return r;
}

std::vector<int> cone_pattern(const Bi<Rational>& f, int m) {
  std::vector<Rational> c;
  for (int i = 0; i <= m; ++i) c.push_back(f.get(m - i, i));
  return squarefree_factor(BinaryForm(m, std::move(c))).root_pattern();
}

std::vector<int> cone_pattern(const Bi<cd>& f, int m, double thr, double tol) {
  // cone(u, 1) in u; a drop in degree is a root at infinity.
  std::vector<cd> c;
  for (int a = 0; a <= m; ++a) c.push_back(zero(f.get(a, m - a), thr) ? cd(0) : f.get(a, m - a));
  int deg = m;
  while (deg > 0 && c[static_cast<std::size_t>(deg)] == cd(0)) --deg;
  std::vector<int> p;
  if (deg < m) p.push_back(m - deg);
  if (deg > 0) {
    c.resize(static_cast<std::size_t>(deg) + 1);
    RootSet r;
    try {
      r = complex_roots(std::span<const cd>(c), std::sqrt(tol));
    } catch (const IllConditionedError& e) {
      r = e.partial();
    }
    for (int k : r.multiplicity) p.push_back(k);
  }
  std::sort(p.rbegin(), p.rend());
  return p;
}

template <class T>
struct Local {
  int multiplicity = 0;
  std::vector<int> pattern;
  SingularType type = SingularType::Other;
};

template <class T>
SingularType type_of(const Bi<T>& f, int m, const std::vector<int>& pattern, double thr) {
  if (m == 2 && pattern == std::vector<int>{1, 1}) return SingularType::Node;
  if (m == 3 && pattern == std::vector<int>{1, 1, 1}) return SingularType::OrdinaryTriple;
  if (!((m == 2 || m == 3) && pattern == std::vector<int>{m})) return SingularType::Other;
  // Move the cone line to t = 0.
  T u0(1), v0(0);
  T lead = f.get(m, 0);
  if (!zero(lead, thr)) {
    u0 = -f.get(m - 1, 1) / (T(m) * lead);
    v0 = T(1);
  }
  T p(0), q(1);
  if (magnitude(u0) < magnitude(v0)) {
    p = T(1);
    q = T(0);
  }
  Bi<T> g = rotate(f, u0, p, v0, q);
  const double rel = thr / std::max(f.scale(), 1e-300);
  const double gthr = rel * g.scale();
  if (m == 2) {
    if (!zero(g.get(3, 0), gthr)) return SingularType::CuspA2;
    T disc = g.get(2, 1) * g.get(2, 1) - T(4) * g.get(0, 2) * g.get(4, 0);
    if (!zero(disc, gthr * g.scale())) return SingularType::TacnodeA3;
    return SingularType::Other;
  }
  return zero(g.get(4, 0), gthr) ? SingularType::Other : SingularType::Y3X4;
}

template <class T>
Local<T> analyze(const Bi<T>& f, double thr, double tol) {
  Local<T> out;
  int m = 0;
  for (; m <= f.n; ++m) {
    bool nonzero = false;
    for (int a = 0; a <= m; ++a) nonzero |= !zero(f.get(a, m - a), thr);
    if (nonzero) break;
  }
  if (m > f.n) throw Error(ErrorKind::NonReduced, "the form vanishes to full order at a point");
  if (m == 0) throw Error(ErrorKind::InvalidInput, "the point is not on the curve");
  out.multiplicity = m;
  if (m == 1) return out;
  if constexpr (std::is_same_v<T, Rational>) out.pattern = cone_pattern(f, m);
  else out.pattern = cone_pattern(f, m, thr, tol);
  out.type = type_of(f, m, out.pattern, thr);
  return out;
}

// Columns: the two unit vectors other than the lead index of p, then p with p[lead] = 1.
template <class T>
std::array<std::array<T, 3>, 3> chart(const std::array<T, 3>& p, int& lead) {
  lead = 0;
  for (int i = 1; i < 3; ++i)
    if (magnitude(p[static_cast<std::size_t>(i)]) > magnitude(p[static_cast<std::size_t>(lead)])) lead = i;
  std::array<std::array<T, 3>, 3> N{};
  for (auto& r : N) r.fill(T(0));
  int col = 0;
  for (int i = 0; i < 3; ++i)
    if (i != lead) N[static_cast<std::size_t>(i)][static_cast<std::size_t>(col++)] = T(1);
  for (int i = 0; i < 3; ++i) N[static_cast<std::size_t>(i)][2] = p[static_cast<std::size_t>(i)] / p[static_cast<std::size_t>(lead)];
  return N;
}

double numeric_threshold(const Bi<cd>& f, double tol) { return std::sqrt(tol) * std::max(f.scale(), 1e-300); }

TernaryForm cone_form(const Bi<Rational>& f, int m, const Point3& p, int lead) {
  // u = X_j - p_j X_lead, v = X_k - p_k X_lead with p_lead = 1.
  int j = lead == 0 ? 1 : 0, k = lead == 2 ? 1 : 2;
  auto var = [](int i) {
    Exponent e{0, 0, 0};
    e[static_cast<std::size_t>(i)] = 1;
    return e;
  };
  auto lin = [&](int i) {
    TernaryForm t(1);
    t.add_term(var(i), 1);
    t.add_term(var(lead), -p[static_cast<std::size_t>(i)] / p[static_cast<std::size_t>(lead)]);
    return t;
  };
  TernaryForm U = lin(j), V = lin(k), out(m);
  for (int a = 0; a <= m; ++a) {
    const Rational& c = f.get(a, m - a);
    if (sgn(c) == 0) continue;
    out += U.pow(static_cast<unsigned>(a)) * V.pow(static_cast<unsigned>(m - a)) * c;
  }
  return out;
}

// Restriction of a form to Z = 0 as a binary form with X in the first slot.
BinaryForm at_infinity(const TernaryForm& g) {
  BinaryForm b(g.degree());
  std::vector<Rational> c(static_cast<std::size_t>(g.degree()) + 1);
  for (const auto& [e, q] : g.terms())
    if (e[2] == 0) c[static_cast<std::size_t>(e[1])] += q;
  return BinaryForm(g.degree(), std::move(c));
}

struct Candidate {
  std::optional<Point3> exact;
  CPoint3 approx;
};

// Roots of a univariate polynomial: rational ones exactly, the rest numerically.
void split_roots(const UnivariatePoly& f, std::vector<Rational>& rat, std::vector<cd>& num, double tol) {
  UnivariatePoly s = squarefree_part(f);
  if (s.degree() < 1) return;
  rat = rational_roots(s);
  UnivariatePoly rest = s;
  for (const auto& r : rat) rest = exact_divide(rest, UnivariatePoly(std::vector<Rational>{-r, 1}));
  if (rest.degree() < 1) return;
  RootSet rs;
  try {
    rs = complex_roots(rest, tol);
  } catch (const IllConditionedError& e) {
    rs = e.partial();
  }
  for (const auto& r : rs.roots) num.push_back(r.value());
}

bool less_point(const SingularPoint& a, const SingularPoint& b) {
  if (a.exact.has_value() != b.exact.has_value()) return a.exact.has_value();
  for (int i = 0; i < 3; ++i) {
    auto x = a.approx[static_cast<std::size_t>(i)], y = b.approx[static_cast<std::size_t>(i)];
    if (std::abs(x.real() - y.real()) > 1e-9) return x.real() < y.real();
    if (std::abs(x.imag() - y.imag()) > 1e-9) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace

SingularPoint analyze_point(const TernaryForm& g, const Point3& p) {
  if (sgn(p[0]) == 0 && sgn(p[1]) == 0 && sgn(p[2]) == 0) throw Error(ErrorKind::InvalidInput, "the point [0:0:0]");
  int lead = 0;
  auto N = chart<Rational>(p, lead);
  Bi<Rational> f = local_expansion<Rational>(g, N);
  Local<Rational> l = analyze(f, 0.0, kDefaultTol);
  SingularPoint out;
  Point3 q = p;
  Rational pl = p[static_cast<std::size_t>(lead)];
  for (auto& x : q) x /= pl;
  out.exact = q;
  out.approx = normalize(to_complex(q));
  out.multiplicity = l.multiplicity;
  out.cone_pattern = l.pattern;
  out.type = l.type;
  if (l.multiplicity >= 2) out.cone = cone_form(f, l.multiplicity, q, lead);
  return out;
}

SingularPoint analyze_point(const TernaryForm& g, const CPoint3& p, double tol) {
  int lead = 0;
  CPoint3 q = normalize(p);
  auto N = chart<cd>(q, lead);
  Bi<cd> f = local_expansion<cd>(g, N);
  Local<cd> l = analyze(f, numeric_threshold(f, tol), tol);
  SingularPoint out;
  out.approx = q;
  out.multiplicity = l.multiplicity;
  out.cone_pattern = l.pattern;
  out.type = l.type;
  return out;
}

int tangent_contact(const TernaryForm& g, const CPoint3& p, double tol) {
  int lead = 0;
  CPoint3 q = normalize(p);
  auto N = chart<cd>(q, lead);
  Bi<cd> f = local_expansion<cd>(g, N);
  const double thr = numeric_threshold(f, tol);
  if (!zero(f.get(0, 0), thr)) throw Error(ErrorKind::InvalidInput, "the point is not on the curve");
  cd a = f.get(1, 0), b = f.get(0, 1);
  if (zero(a, thr) && zero(b, thr)) throw Error(ErrorKind::SingularPoint, "tangent contact at a singular point");
  // Along the tangent direction (u, v) = s (-b, a).
  double nrm = std::sqrt(std::norm(a) + std::norm(b));
  cd du = -b / nrm, dv = a / nrm;
  for (int k = 2; k <= f.n; ++k) {
    cd s = 0;
    for (int i = 0; i <= k; ++i) s += f.get(i, k - i) * std::pow(du, i) * std::pow(dv, k - i);
    if (!zero(s, thr)) return k;
  }
  return f.n + 1;  // the tangent line is a component
}

std::vector<SingularPoint> singular_points(const TernaryForm& g, double tol) {
  if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "singular points of the zero form");
  if (g.degree() < 2) return {};

  static const std::vector<Point3> kCenters = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1},  {1, 2, 3},
                                               {1, -1, 2}, {2, 3, -1}, {1, 3, 7}, {3, -2, 5}, {5, 7, 11}};
  Point3 c{};
  bool found = false;
  for (const auto& cand : kCenters)
    if (sgn(g(cand)) != 0) {
      c = cand;
      found = true;
      break;
    }
  for (int i = 2; !found && i < 200; ++i) {
    Point3 cand{1, i, i * i + 1};
    if (sgn(g(cand)) != 0) {
      c = cand;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::Internal, "no projection center off the curve");

  int lead = 0;
  for (int i = 1; i < 3; ++i)
    if (abs(c[static_cast<std::size_t>(i)]) > abs(c[static_cast<std::size_t>(lead)])) lead = i;
  Matrix3 M{};
  for (int i = 0; i < 3; ++i) M[static_cast<std::size_t>(i)][0] = c[static_cast<std::size_t>(i)];
  int col = 1;
  for (int i = 0; i < 3; ++i)
    if (i != lead) M[static_cast<std::size_t>(i)][static_cast<std::size_t>(col++)] = 1;
  TernaryForm h = g.substitute(M);

  if (discriminant_in_X(h).is_zero()) throw Error(ErrorKind::NonReduced, "the curve has a repeated component");
  BinaryForm disc = discriminant_in_X(h);

  std::vector<Candidate> cands;
  // Affine chart Z = 1 of the moved coordinates.
  UnivariatePoly s = squarefree_part(disc.dehomogenize());
  if (s.degree() >= 1) {
    XPoly P = XPoly::from_form(h);
    for (const auto& piece : gcd_over_roots(s, {P, P.derivative_x(), P.derivative_y()})) {
      if (piece.poly.is_zero()) throw Error(ErrorKind::NonReduced, "the curve has a repeated component");
      if (piece.poly.degree() < 1) continue;
      std::vector<Rational> ry;
      std::vector<cd> ny;
      split_roots(piece.modulus, ry, ny, tol);
      for (const auto& y : ry) {
        std::vector<Rational> rx;
        std::vector<cd> nx;
        split_roots(piece.poly.at(y), rx, nx, tol);
        for (const auto& x : rx) cands.push_back({Point3{x, y, 1}, {}});
        for (const auto& x : nx) cands.push_back({std::nullopt, CPoint3{x, cd(y.get_d()), 1.0}});
      }
      for (const auto& y : ny) {
        std::vector<cd> coeffs = piece.poly.at(y);
        RootSet rs;
        try {
          rs = complex_roots(std::span<const cd>(coeffs), tol);
        } catch (const IllConditionedError& e) {
          rs = e.partial();
        }
        for (const auto& x : rs.roots) cands.push_back({std::nullopt, CPoint3{x.value(), y, 1.0}});
      }
    }
  }
  // The line Z = 0 of the moved coordinates; [1:0:0] is off the curve.
  if (sgn(disc.coeff(0)) == 0) {
    std::vector<BinaryForm> parts = {at_infinity(h), at_infinity(h.partial(0)), at_infinity(h.partial(1)),
                                     at_infinity(h.partial(2))};
    std::optional<BinaryForm> gg;
    for (const auto& b : parts) {
      if (b.is_zero()) continue;
      gg = gg ? gcd(*gg, b) : b.monic();
    }
    if (!gg) throw Error(ErrorKind::NonReduced, "the curve has a repeated component");
    std::vector<Rational> rx;
    std::vector<cd> nx;
    split_roots(gg->dehomogenize(), rx, nx, tol);
    for (const auto& x : rx) cands.push_back({Point3{x, 1, 0}, {}});
    for (const auto& x : nx) cands.push_back({std::nullopt, CPoint3{x, 1.0, 0.0}});
  }

  std::vector<SingularPoint> out;
  for (const auto& cand : cands) {
    SingularPoint sp;
    if (cand.exact) {
      sp = analyze_point(g, M * *cand.exact);
    } else {
      try {
        sp = analyze_point(g, cmod::apply(M, cand.approx), tol);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::InvalidInput) continue;
        throw;
      }
    }
    if (sp.multiplicity >= 2) out.push_back(std::move(sp));
  }
  std::sort(out.begin(), out.end(), less_point);
  return out;
}

}  // namespace cmod
