#include "cmod/classify.hpp"

#include <algorithm>

#include "cmod/error.hpp"

namespace cmod {


const char* to_string(CaseId c) {
  switch (c) {
    case CaseId::D3ConcurrentLines: return "D3_CONCURRENT_LINES";
    case CaseId::D3ConicLine: return "D3_CONIC_LINE";
    case CaseId::D3Cuspidal: return "D3_CUSPIDAL";
    case CaseId::D3SmoothJ0: return "D3_SMOOTH_J0";
    case CaseId::D4ConcurrentLines: return "D4_CONCURRENT_LINES";
    case CaseId::D4TwoConics: return "D4_TWO_CONICS";
    case CaseId::D4CubicLine: return "D4_CUBIC_LINE";
    case CaseId::D4CyclicCover: return "D4_CYCLIC_COVER";
    case CaseId::D4Tacnode: return "D4_TACNODE";
    case CaseId::D4TriplePoint: return "D4_TRIPLE_POINT";
    case CaseId::Unclassified: return "UNCLASSIFIED";
  }
  return "UNCLASSIFIED";
}

const char* description(CaseId c) {
  switch (c) {
    case CaseId::D3ConcurrentLines: return "C is the union of three lines passing through one point";
    case CaseId::D3ConicLine: return "C is the union of a non-singular conic Q and a line L, not tangent to the conic";
    case CaseId::D3Cuspidal: return "C is a cuspidal cubic";
    case CaseId::D3SmoothJ0: return "C is a smooth elliptic curve with j-invariant 0";
    case CaseId::D4ConcurrentLines: return "C is the union of four concurrent lines";
    case CaseId::D4TwoConics: return "C is the union of two conics";
    case CaseId::D4CubicLine: return "C is the union of a cubic E and a line L";
    case CaseId::D4CyclicCover: return "C is a cyclic cover of P^1 of degree 4 ramified in 4 points";
    case CaseId::D4Tacnode: return "C is irreducible, has two 4-flexes and a tacnode";
    case CaseId::D4TriplePoint: return "C is irreducible and has a triple point of the form y^3=x^4 and a 4-flex";
    case CaseId::Unclassified: return "no case of the classification matches";
  }
  return "";
}

namespace {

std::vector<int> pattern_of(const BinaryForm& h) { return squarefree_factor(h).root_pattern(); }

void check_preconditions(const ModuliVerdict& v, const WeierstrassData& w, int d) {
  if (w.d != d) throw Error(ErrorKind::UnsupportedDegree, "expected d = " + std::to_string(d));
  if (w.m != 0 || !w.stripped.empty())
    throw Error(ErrorKind::InvalidInput, "classification needs m = 0 and no lines through p");
  if (!v.constant) throw Error(ErrorKind::InvalidInput, "classification needs constant moduli");
}

TernaryForm line(const Rational& a, const Rational& b, const Rational& c) {
  TernaryForm l(1);
  l.add_term({1, 0, 0}, a);
  l.add_term({0, 1, 0}, b);
  l.add_term({0, 0, 1}, c);
  return l;
}

bool divides(const TernaryForm& l, const TernaryForm& g) {
  try {
    exact_divide(g, l);
    return true;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Divisibility) throw;
    return false;
  }
}

// g with two of X, Y, Z fixed: the univariate polynomial in the free one.
UnivariatePoly slice(const TernaryForm& g, int var, const Point3& base) {
  std::vector<Rational> c(static_cast<std::size_t>(g.degree()) + 1);
  for (const auto& [e, q] : g.terms()) {
    Rational t = q;
    for (int i = 0; i < 3; ++i)
      if (i != var)
        for (int j = 0; j < e[static_cast<std::size_t>(i)]; ++j) t *= base[static_cast<std::size_t>(i)];
    c[static_cast<std::size_t>(e[static_cast<std::size_t>(var)])] += t;
  }
  return UnivariatePoly(std::move(c));
}

// Points on X = 0 at the simple roots of H, in the reduced coordinates.
std::vector<CPoint3> simple_root_points(const BinaryForm& h) {
  std::vector<CPoint3> out;
  for (const auto& [g, m] : squarefree_factor(h).factors) {
    if (m != 1) continue;
    UnivariatePoly a = g.dehomogenize();
    if (a.degree() < g.degree()) out.push_back({0.0, 1.0, 0.0});
    if (a.degree() < 1) continue;
    for (const auto& r : complex_roots(a).roots) out.push_back({0.0, r.value(), 1.0});
  }
  return out;
}

bool smooth_or_cuspidal(const std::vector<SingularPoint>& s) {
  return s.empty() || (s.size() == 1 && s[0].type == SingularType::CuspA2);
}

ClassificationResult finish(CaseId id, ClassificationEvidence ev) {
  return {id, description(id), std::move(ev)};
}

ClassificationEvidence base_evidence(const ModuliVerdict& v, int d) {
  ClassificationEvidence ev;
  ev.has_x_factor = v.c.has_x_factor;
  ev.k = v.c.k;
  ev.h_pattern = pattern_of(v.c.H);
  ev.alphas = v.c.companion.degree();
  ev.table_case = table_case(v.c, d);
  return ev;
}

}  // namespace

CaseId table_case(const ConstantVerdict& v, int d) {
  const std::vector<int> p = pattern_of(v.H);
  const bool x = v.has_x_factor;
  if (d == 3) {
    if (v.k == 1) return CaseId::D3ConcurrentLines;
    if (!x && v.k == 3) {
      if (p.size() == 1) return CaseId::D3ConcurrentLines;
      if (p.size() == 2) return CaseId::D3Cuspidal;
      return CaseId::D3SmoothJ0;
    }
    if (x && v.k == 2) return p.size() == 2 ? CaseId::D3ConicLine : CaseId::D3ConcurrentLines;
    return CaseId::Unclassified;
  }
  if (d == 4) {
    if (v.k == 1) return CaseId::D4ConcurrentLines;
    if (x && v.k == 3) return p.size() == 1 ? CaseId::D4ConcurrentLines : CaseId::D4CubicLine;
    if (!x && v.k == 2) return p.size() == 1 ? CaseId::D4ConcurrentLines : CaseId::D4TwoConics;
    if (!x && v.k == 4) {
      if (p == std::vector<int>{4}) return CaseId::D4ConcurrentLines;
      if (p == std::vector<int>{1, 1, 1, 1}) return CaseId::D4CyclicCover;
      if (p == std::vector<int>{2, 2}) return CaseId::D4TwoConics;
      if (p == std::vector<int>{2, 1, 1}) return CaseId::D4Tacnode;
      if (p == std::vector<int>{3, 1}) return CaseId::D4TriplePoint;
    }
  }
  return CaseId::Unclassified;
}

std::vector<TernaryForm> rational_line_factors(const TernaryForm& g) {
  if (g.degree() < 1) return {};
  for (const auto& l : {line(0, 0, 1), line(0, 1, 0)}) {
    if (!divides(l, g)) continue;
    std::vector<TernaryForm> out{l};
    for (auto& o : rational_line_factors(exact_divide(g, l)))
      if (!proportionality(o, l)) out.push_back(std::move(o));
    return out;
  }
  // Now g(x, 1, 0) and g(x, 0, 1) are nonzero.
  std::vector<TernaryForm> out;
  auto add = [&](const TernaryForm& l) {
    for (const auto& o : out)
      if (proportionality(o, l)) return;
    if (divides(l, g)) out.push_back(l);
  };
  // Y - r Z with r a root of g(0, y, 1).
  UnivariatePoly at_x0 = slice(g, 1, {0, 0, 1});
  if (!at_x0.is_zero())
    for (const auto& r : rational_roots(at_x0)) add(line(0, 1, -r));
  // X + b Y + c Z: -b is a root of g(x, 1, 0) and -c a root of g(x, 0, 1).
  std::vector<Rational> bs, cs;
  for (const auto& r : rational_roots(slice(g, 0, {0, 1, 0}))) bs.push_back(-r);
  for (const auto& r : rational_roots(slice(g, 0, {0, 0, 1}))) cs.push_back(-r);
  for (const auto& b : bs)
    for (const auto& c : cs) add(line(1, b, c));
  return out;
}

ClassificationResult classify_d3(const ModuliVerdict& v, const WeierstrassData& w) {
  check_preconditions(v, w, 3);
  ClassificationEvidence ev = base_evidence(v, 3);
  const TernaryForm c = w.form();
  ev.singular = singular_points(c);
  ev.lines = rational_line_factors(c);
  const CaseId id = ev.table_case;
  std::vector<SingularType> found, expected;
  for (const auto& p : ev.singular) found.push_back(p.type);
  switch (id) {
    case CaseId::D3ConcurrentLines: expected = {SingularType::OrdinaryTriple}; break;
    case CaseId::D3ConicLine: expected = {SingularType::Node, SingularType::Node}; break;
    case CaseId::D3Cuspidal: expected = {SingularType::CuspA2}; break;
    case CaseId::D3SmoothJ0: break;
    default: throw Error(ErrorKind::Internal, "constant cubic outside the three normal forms");
  }
  if (found != expected)
    throw Error(ErrorKind::Internal, std::string("singular points disagree with ") + to_string(id));
  ev.predicates.push_back(id == CaseId::D3SmoothJ0 ? "smooth" : "singular points match");
  if (id == CaseId::D3Cuspidal || id == CaseId::D3SmoothJ0) {
    for (const auto& p : simple_root_points(v.c.H)) ev.flex_contacts.push_back(tangent_contact(c, p));
  }
  return finish(id, std::move(ev));
}

ClassificationResult classify_d4(const ModuliVerdict& v, const WeierstrassData& w) {
  check_preconditions(v, w, 4);
  ClassificationEvidence ev = base_evidence(v, 4);
  const TernaryForm c = w.form();
  ev.singular = singular_points(c);
  ev.lines = rational_line_factors(c);
  const auto& s = ev.singular;

  std::vector<CaseId> hits;
  if (std::any_of(s.begin(), s.end(), [](const SingularPoint& p) { return p.multiplicity == 4; })) {
    ev.predicates.push_back("point of multiplicity 4");
    hits.push_back(CaseId::D4ConcurrentLines);
  }
  if (s.size() == 2 && s[0].type == SingularType::TacnodeA3 && s[1].type == SingularType::TacnodeA3) {
    ev.predicates.push_back("exactly two tacnodes");
    hits.push_back(CaseId::D4TwoConics);
  }
  for (const auto& l : ev.lines) {
    TernaryForm e = exact_divide(c, l);
    auto es = singular_points(e);
    if (smooth_or_cuspidal(es)) {
      ev.residual = e;
      ev.residual_singular = es;
      ev.predicates.push_back(es.empty() ? "line and smooth cubic" : "line and cuspidal cubic");
      hits.push_back(CaseId::D4CubicLine);
      break;
    }
  }
  if (s.empty()) {
    ev.predicates.push_back("smooth");
    hits.push_back(CaseId::D4CyclicCover);
  }
  if (s.size() == 1 && s[0].type == SingularType::TacnodeA3) {
    ev.predicates.push_back("single tacnode");
    hits.push_back(CaseId::D4Tacnode);
  }
  if (s.size() == 1 && s[0].type == SingularType::Y3X4) {
    ev.predicates.push_back("single triple point y^3=x^4");
    hits.push_back(CaseId::D4TriplePoint);
  }

  CaseId id = hits.size() == 1 ? hits[0] : CaseId::Unclassified;
  if (hits.size() > 1) ev.notes.push_back("several case predicates hold");
  if (id != ev.table_case)
    ev.notes.push_back(std::string("normal-form table suggests ") + to_string(ev.table_case));

  if (!v.c.has_x_factor && v.c.k == 4) {
    for (const auto& p : simple_root_points(v.c.H)) ev.flex_contacts.push_back(tangent_contact(c, p));
  } else if (id == CaseId::D4CubicLine && v.c.has_x_factor && ev.residual) {
    for (const auto& p : simple_root_points(v.c.H)) ev.flex_contacts.push_back(tangent_contact(*ev.residual, p));
  }
  if (id == CaseId::D4Tacnode) ev.notes.push_back("j-invariant 1728 of the normalization is not checked");
  return finish(id, std::move(ev));
}

ClassificationResult classify(const ModuliVerdict& v, const WeierstrassData& w) {
  if (w.d == 3) return classify_d3(v, w);
  if (w.d == 4) return classify_d4(v, w);
  throw Error(ErrorKind::UnsupportedDegree, "classification exists only for d = 3 and d = 4");
}

}  // namespace cmod
