#include "cmod/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "cmod/error.hpp"
#include "cmod/resultant.hpp"

namespace cmod {

using cd = std::complex<double>;

namespace {

double norm3(const CPoint3& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2])); }

CPoint3 unit(const CPoint3& v) {
  double n = norm3(v);
  return {v[0] / n, v[1] / n, v[2] / n};
}

CPoint3 cross(const CPoint3& a, const CPoint3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

cd dot(const CPoint3& a, const CPoint3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// Distance between two projective points given as unit vectors.
double point_distance(const CPoint3& a, const CPoint3& b) { return norm3(cross(unit(a), unit(b))); }

// g(x, y0, 1), or g(x, 1, 0) on the line at infinity, exactly.
UnivariatePoly on_line(const TernaryForm& g, const PencilLine& line) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(g.degree(), 0)) + 1);
  for (const auto& [e, q] : g.terms()) {
    if (line.infinite) {
      if (e[2] == 0) c[static_cast<std::size_t>(e[0])] += q;
      continue;
    }
    Rational w = q;
    for (int i = 0; i < e[1]; ++i) w *= line.y0;
    c[static_cast<std::size_t>(e[0])] += w;
  }
  return UnivariatePoly(std::move(c));
}

// sum |c_k| r^k: the scale of the rounding error when evaluating f at |x| = r.
double abs_eval(const UnivariatePoly& f, double r) {
  double v = 0;
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) v = v * r + std::abs(it->get_d());
  return v;
}

}  // namespace

std::string PencilLine::to_string() const { return infinite ? "inf" : cmod::to_string(y0); }

PencilSetup setup(const TernaryForm& curve, const Point3& p) {
  if (curve.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero form does not define a curve");
  if (sgn(p[0]) == 0 && sgn(p[1]) == 0 && sgn(p[2]) == 0)
    throw Error(ErrorKind::InvalidInput, "[0:0:0] is not a projective point");
  std::size_t lead = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (abs(p[i]) > abs(p[lead])) lead = i;

  PencilSetup s;
  s.input = curve;
  s.basepoint = p;
  Matrix3 m{};
  for (std::size_t r = 0; r < 3; ++r) m[r][0] = p[r] / p[lead];
  std::size_t col = 1;
  for (std::size_t j = 0; j < 3; ++j) {
    if (j == lead) continue;
    m[j][col++] = 1;
  }
  s.from_standard = m;
  s.to_standard = inverse(m);

  TernaryForm g = curve.substitute(m);
  BinaryForm content;
  bool have = false;
  for (int k = 0; k <= g.x_degree(); ++k) {
    BinaryForm c = g.x_coefficient(k);
    if (c.is_zero()) continue;
    content = have ? gcd(content, c) : c.monic();
    have = true;
  }
  if (content.degree() > 0) {
    s.stripped = squarefree_factor(content).factors;
    g = exact_divide(g, TernaryForm::from_binary(content));
  }
  s.curve = g.primitive();
  s.d = s.curve.x_degree();
  s.m = s.curve.degree() - s.d;
  if (s.d <= 2)
    throw Error(ErrorKind::UnsupportedDegree,
                "the curve meets the pencil lines in " + std::to_string(s.d) + " points; at least 3 are required");
  s.affine = XPoly::from_form(s.curve);
  // One generic line certifies reducedness; otherwise fall back to the full resultant.
  s.reduced = false;
  for (long y = 0; y < 16 && !s.reduced; ++y) s.reduced = is_generic_line(s, Rational(y * (y % 2 ? -1 : 1), 1 + y % 3));
  if (!s.reduced) s.reduced = !pencil_discriminant(s).is_zero();
  for (const auto& [f, mult] : s.stripped)
    if (mult > 1) s.reduced = false;
  return s;
}

BinaryForm pencil_discriminant(const PencilSetup& s) { return discriminant_in_X(s.curve); }

bool is_generic_line(const PencilSetup& s, const Rational& y0) {
  UnivariatePoly q = s.affine.at(y0);
  return q.degree() == s.d && gcd(q, q.derivative()).degree() == 0;
}

UnivariatePoly restrict_to(const PencilSetup& s, const PencilLine& line) {
  if (!line.infinite) return s.affine.at(line.y0);
  std::vector<Rational> c(static_cast<std::size_t>(s.d) + 1);
  for (const auto& [e, q] : s.curve.terms())
    if (e[2] == 0) c[static_cast<std::size_t>(e[0])] += q;
  return UnivariatePoly(std::move(c));
}

RootSet intersect(const PencilSetup& s, const PencilLine& line, double tol) {
  UnivariatePoly q = restrict_to(s, line);
  if (q.is_zero()) throw Error(ErrorKind::LineContained, "the line " + line.to_string() + " lies on the curve");
  if (q.degree() == 0) return {};
  return complex_roots(q, tol);
}

std::vector<SpecialLine> special_lines(const PencilSetup& s, double tol) {
  const BinaryForm disc = pencil_discriminant(s);
  if (disc.is_zero())
    throw Error(ErrorKind::NonReduced, "the discriminant vanishes identically; the curve is not reduced");
  std::vector<SpecialLine> out;
  UnivariatePoly r = disc.dehomogenize();
  if (r.degree() > 0) {
    // A simple root of the discriminant is a fiber with exactly one double point,
    // since the vanishing order bounds sum (m_i - 1) from above. Only the repeated
    // part needs the computation over algebraic extensions.
    std::vector<SplitCount> pieces;
    UnivariatePoly repeated{1};
    const bool monic_in_x = s.affine.leading().is_constant();
    for (const auto& [f, mult] : squarefree_decomposition(r)) {
      if (f.degree() <= 0) continue;
      if (mult == 1 && monic_in_x) pieces.push_back({f, s.d, s.d - 1});
      else repeated *= f;
    }
    if (repeated.degree() > 0)
      for (auto& piece : distinct_roots_over(repeated, s.affine)) pieces.push_back(std::move(piece));
    for (const auto& piece : pieces) {
      if (piece.degree < 0) throw Error(ErrorKind::Internal, "a pencil line lies on the stripped curve");
      if (piece.distinct >= s.d) continue;
      UnivariatePoly rest = piece.modulus;
      for (const auto& y : rational_roots(piece.modulus)) {
        SpecialLine l;
        l.line = PencilLine::at(y);
        l.approx = y.get_d();
        l.minimal = UnivariatePoly::linear_root(y);
        l.degree = piece.degree;
        l.count = piece.distinct;
        out.push_back(std::move(l));
        rest = exact_divide(rest, UnivariatePoly::linear_root(y));
      }
      if (rest.degree() <= 0) continue;
      RootSet roots = complex_roots(rest, tol);
      for (const auto& y : roots.roots) {
        SpecialLine l;
        l.rational = false;
        l.approx = y.value();
        l.minimal = rest;
        l.degree = piece.degree;
        l.count = piece.distinct;
        out.push_back(std::move(l));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const SpecialLine& a, const SpecialLine& b) {
    if (a.approx.real() != b.approx.real()) return a.approx.real() < b.approx.real();
    return a.approx.imag() < b.approx.imag();
  });
  if (sgn(disc.coeff(0)) == 0) {
    UnivariatePoly q = restrict_to(s, PencilLine::infinity());
    if (q.is_zero()) throw Error(ErrorKind::Internal, "the line Z = 0 lies on the stripped curve");
    int distinct = q.degree() <= 0 ? 0 : q.degree() - gcd(q, q.derivative()).degree();
    if (distinct < s.d) {
      SpecialLine l;
      l.line = PencilLine::infinity();
      l.degree = std::max(q.degree(), 0);
      l.count = distinct;
      out.push_back(std::move(l));
    }
  }
  return out;
}

std::vector<CPoint3> special_points(const PencilSetup& s, const std::vector<SpecialLine>& lines, double) {
  std::vector<CPoint3> out;
  for (const auto& l : lines) {
    if (l.count != 1 || l.degree < 1) continue;
    std::vector<cd> c;
    if (l.line.infinite) {
      auto q = restrict_to(s, l.line);
      for (const auto& v : q.coeffs()) c.push_back(v.get_d());
    } else {
      c = s.affine.at(l.approx);
    }
    auto n = static_cast<std::size_t>(l.degree);
    cd x = -c[n - 1] / (static_cast<double>(n) * c[n]);
    out.push_back(l.line.infinite ? CPoint3{x, 1.0, 0.0} : CPoint3{x, l.approx, 1.0});
  }
  return out;
}

std::vector<Rational> sample_lines(const PencilSetup& s, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<Rational> seen;
  const long attempts = 200L * std::max(count, 1) + 1000;
  for (long i = 0; i < attempts && static_cast<int>(seen.size()) < count; ++i) {
    long a = static_cast<long>(rng() % 101) - 50;
    long b = static_cast<long>(rng() % 50) + 1;
    Rational y(a, b);
    y.canonicalize();
    if (seen.count(y)) continue;
    if (!is_generic_line(s, y)) continue;
    seen.insert(y);
  }
  if (static_cast<int>(seen.size()) < count)
    throw Error(ErrorKind::InsufficientSamples, "found only " + std::to_string(seen.size()) + " of " +
                                                    std::to_string(count) + " non-special sample lines");
  return {seen.begin(), seen.end()};
}

TangentReport tangent_point(const PencilSetup& s, const PencilLine& line, double tol) {
  TangentReport rep;
  rep.line = line;
  UnivariatePoly q = restrict_to(s, line);
  if (q.is_zero()) throw Error(ErrorKind::LineContained, "the line " + line.to_string() + " lies on the curve");
  try {
    rep.points = complex_roots(q, tol);
  } catch (const IllConditionedError& e) {
    throw Error(ErrorKind::DegenerateLine, "intersection on line " + line.to_string() + " is ill-conditioned");
  }
  if (rep.points.distinct() != s.d || rep.points.total() != s.d)
    throw Error(ErrorKind::DegenerateLine,
                "line " + line.to_string() + " meets C - p in " + std::to_string(rep.points.distinct()) +
                    " distinct points, not " + std::to_string(s.d));

  // Gradient restricted to the line exactly; evaluating the expanded ternary form at
  // a rounded y0 loses everything when the points cluster.
  const UnivariatePoly grad[3] = {on_line(s.curve.partial(0), line), on_line(s.curve.partial(1), line),
                                  on_line(s.curve.partial(2), line)};
  for (const auto& r : rep.points.roots) {
    const cd x = r.value();
    CPoint3 t{grad[0].eval(x), grad[1].eval(x), grad[2].eval(x)};
    double mass = 0;
    for (const auto& gi : grad) mass += abs_eval(gi, std::abs(x));
    if (norm3(t) <= 64 * std::numeric_limits<double>::epsilon() * s.curve.degree() * mass)
      throw Error(ErrorKind::SingularPoint, "singular point of C on line " + line.to_string());
    rep.tangent_lines.push_back(unit(t));
  }

  std::size_t bi = 0, bj = 1;
  double best = -1;
  for (std::size_t i = 0; i < rep.tangent_lines.size(); ++i)
    for (std::size_t j = i + 1; j < rep.tangent_lines.size(); ++j) {
      double c = norm3(cross(rep.tangent_lines[i], rep.tangent_lines[j]));
      if (c > best) {
        best = c;
        bi = i;
        bj = j;
      }
    }
  CPoint3 t = unit(cross(rep.tangent_lines[bi], rep.tangent_lines[bj]));
  for (const auto& l : rep.tangent_lines) rep.max_deviation = std::max(rep.max_deviation, std::abs(dot(l, t)));
  rep.t_point = normalize(t);
  rep.concurrent = rep.max_deviation <= tol;
  return rep;
}

const char* to_string(LocusKind k) {
  switch (k) {
    case LocusKind::Point: return "Point";
    case LocusKind::LineX0: return "LineX0";
    case LocusKind::Line: return "Line";
    case LocusKind::Scattered: return "Scattered";
  }
  return "Scattered";
}

LocusReport t_locus(const PencilSetup& s, int samples, std::uint64_t seed, double tol) {
  LocusReport rep;
  for (const auto& y : sample_lines(s, samples, seed)) {
    try {
      rep.samples.push_back(tangent_point(s, PencilLine::at(y), tol));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateLine && e.kind() != ErrorKind::SingularPoint) throw;
      rep.skipped++;
    }
  }
  if (rep.samples.size() < 3)
    throw Error(ErrorKind::InsufficientSamples, "fewer than 3 usable sample lines for the T-locus");

  std::vector<CPoint3> pts;
  for (const auto& t : rep.samples) {
    pts.push_back(*t.t_point);
    rep.max_t_x = std::max(rep.max_t_x, std::abs((*t.t_point)[0]));
  }
  double point_res = 0;
  for (const auto& p : pts) point_res = std::max(point_res, point_distance(p, pts[0]));

  std::size_t far = 1;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (point_distance(pts[i], pts[0]) > point_distance(pts[far], pts[0])) far = i;
  CPoint3 fitted = unit(cross(unit(pts[0]), unit(pts[far])));
  double line_res = 0;
  for (const auto& p : pts) line_res = std::max(line_res, std::abs(dot(fitted, unit(p))));

  if (point_res <= tol) {
    rep.kind = LocusKind::Point;
    rep.point = pts[0];
    rep.fit_residual = point_res;
  } else if (rep.max_t_x <= tol) {
    rep.kind = LocusKind::LineX0;
    rep.line = CPoint3{1.0, 0.0, 0.0};
    rep.fit_residual = rep.max_t_x;
  } else if (line_res <= tol) {
    rep.kind = LocusKind::Line;
    rep.line = fitted;
    rep.fit_residual = line_res;
  } else {
    rep.kind = LocusKind::Scattered;
    rep.fit_residual = line_res;
  }

  rep.special = special_points(s, special_lines(s, tol), tol);
  for (const auto& p : rep.special) {
    double r = 0;
    switch (rep.kind) {
      case LocusKind::Point: r = point_distance(p, *rep.point); break;
      case LocusKind::LineX0: r = std::abs(normalize(p)[0]); break;
      case LocusKind::Line: r = std::abs(dot(*rep.line, unit(p))); break;
      case LocusKind::Scattered: r = std::numeric_limits<double>::infinity(); break;
    }
    rep.special_residual = std::max(rep.special_residual, r);
  }
  rep.special_on_locus = rep.special_residual <= tol;
  return rep;
}

}  // namespace cmod
