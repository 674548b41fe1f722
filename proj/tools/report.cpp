#include "report.hpp"

#include <cmath>

namespace cmod::tool {

namespace {

// No "-0.0" in the output; non-finite values (an infinite invariant distance is a
// structural mismatch) become null.
json clean(double x) { return std::isfinite(x) ? json(x == 0.0 ? 0.0 : x) : json(nullptr); }

json forms(const std::vector<std::pair<BinaryForm, int>>& f) {
  json a = json::array();
  for (const auto& [g, m] : f) a.push_back({{"factor", g.to_string()}, {"multiplicity", m}});
  return a;
}

json strings(const std::vector<std::string>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

json optional_point(const std::optional<CPoint3>& p) { return p ? to_json(*p) : json(nullptr); }

}  // namespace

json to_json(const Rational& q) { return to_string(q); }

json to_json(const Point3& p) { return json::array({to_string(p[0]), to_string(p[1]), to_string(p[2])}); }

json to_json(std::complex<double> z) { return json{{"re", clean(z.real())}, {"im", clean(z.imag())}}; }

json to_json(const CPoint3& p) { return json::array({to_json(p[0]), to_json(p[1]), to_json(p[2])}); }

json to_json(const Matrix3& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(to_json(Point3{row[0], row[1], row[2]}));
  return a;
}

json to_json(const RootSet& r) {
  json a = json::array();
  for (std::size_t i = 0; i < r.roots.size(); ++i) {
    json z = to_json(r.roots[i].value());
    z["multiplicity"] = r.multiplicity[i];
    a.push_back(z);
  }
  return a;
}

json to_json(const WeierstrassData& w) {
  json F = json::object();
  for (int h = 2; h <= w.d; ++h) F[std::to_string(h)] = w.F[static_cast<std::size_t>(h)].to_string();
  return {{"d", w.d},
          {"m", w.m},
          {"form", w.form().to_string()},
          {"F", F},
          {"stripped", forms(w.stripped)},
          {"reduced", w.reduced},
          {"change",
           {{"linear", to_json(w.change.linear)},
            {"lead", w.change.lead.to_string('y')},
            {"lead_scaled", w.change.lead_scaled},
            {"shift", w.change.shift.to_string('y')},
            {"x_scale", w.change.x_scale.get_str()}}}};
}

json to_json(const ModuliVerdict& v) {
  json j{{"constant", v.constant}, {"d", v.d}, {"m", v.m}};
  if (v.constant) {
    json lambdas = json::array();
    for (const auto& l : v.c.lambdas) lambdas.push_back(to_json(l));
    j["k"] = v.c.k;
    j["H"] = v.c.H.to_string();
    j["lambdas"] = lambdas;
    j["z_exponents"] = v.c.z_exponents;
    j["has_x_factor"] = v.c.has_x_factor;
    j["product_form"] = v.c.paper_exponents;
    j["companion"] = v.c.companion.to_string('W');
    j["normal_form"] = expand_normal_form(v.c, v.d, v.m).to_string();
  } else {
    j["witness"] = {{"h", v.witness.h}, {"j", v.witness.j}};
  }
  return j;
}

json to_json(const OracleVerdict& v) {
  json lines = json::array();
  for (const auto& y : v.lines) lines.push_back(to_json(y));
  json witness = nullptr;
  if (v.witness) witness = json::array({to_json(v.witness->first), to_json(v.witness->second)});
  return {{"constant", v.constant},
          {"samples_used", v.samples_used},
          {"worst_deviation", clean(v.worst_deviation)},
          {"witness", witness},
          {"lines", lines}};
}

json to_json(const SpecialLine& l) {
  return {{"line", l.rational || l.line.infinite ? json(l.line.to_string()) : json(nullptr)},
          {"rational", l.rational},
          {"approx", l.line.infinite ? json(nullptr) : to_json(l.approx)},
          {"minimal", l.minimal.to_string('y')},
          {"degree", l.degree},
          {"count", l.count}};
}

json to_json(const TangentReport& t) {
  json tl = json::array();
  for (const auto& l : t.tangent_lines) tl.push_back(to_json(l));
  return {{"line", t.line.to_string()},
          {"points", to_json(t.points)},
          {"tangent_lines", tl},
          {"t_point", optional_point(t.t_point)},
          {"max_deviation", clean(t.max_deviation)},
          {"concurrent", t.concurrent}};
}

json to_json(const LocusReport& l) {
  json tp = json::array(), sp = json::array();
  for (const auto& t : l.samples) tp.push_back({{"line", t.line.to_string()}, {"t_point", optional_point(t.t_point)}});
  for (const auto& p : l.special) sp.push_back(to_json(p));
  return {{"kind", to_string(l.kind)},
          {"point", optional_point(l.point)},
          {"line", optional_point(l.line)},
          {"max_t_x", clean(l.max_t_x)},
          {"fit_residual", clean(l.fit_residual)},
          {"samples", tp},
          {"skipped", l.skipped},
          {"special_points", sp},
          {"special_residual", clean(l.special_residual)},
          {"special_on_locus", l.special_on_locus}};
}

json to_json(const SingularPoint& p) {
  return {{"exact", p.exact ? to_json(*p.exact) : json(nullptr)},
          {"approx", to_json(p.approx)},
          {"multiplicity", p.multiplicity},
          {"cone", p.cone ? json(p.cone->to_string()) : json(nullptr)},
          {"cone_pattern", p.cone_pattern},
          {"type", to_string(p.type)}};
}

json to_json(const ClassificationResult& c) {
  const auto& e = c.evidence;
  json sing = json::array(), res = json::array(), lines = json::array();
  for (const auto& p : e.singular) sing.push_back(to_json(p));
  for (const auto& p : e.residual_singular) res.push_back(to_json(p));
  for (const auto& l : e.lines) lines.push_back(l.to_string());
  return {{"case", to_string(c.id)},
          {"description", c.description},
          {"evidence",
           {{"has_x_factor", e.has_x_factor},
            {"k", e.k},
            {"h_pattern", e.h_pattern},
            {"alphas", e.alphas},
            {"table_case", to_string(e.table_case)},
            {"predicates", strings(e.predicates)},
            {"singular_points", sing},
            {"line_components", lines},
            {"residual", e.residual ? json(e.residual->to_string()) : json(nullptr)},
            {"residual_singular_points", res},
            {"flex_contacts", e.flex_contacts},
            {"notes", strings(e.notes)}}}};
}

json to_json(const WeierstrassFamily& f) {
  json c = json::object();
  for (int k = f.d; k >= 0; --k) {
    const auto& p = f.coeffs[static_cast<std::size_t>(k)];
    if (!p.is_zero()) c[std::to_string(k)] = p.to_string('y');
  }
  return {{"d", f.d}, {"genus", f.genus()}, {"equation", f.to_string()}, {"coefficients", c}};
}

json to_json(const JReport& j) {
  json params = json::array();
  for (const auto& t : j.parameters) params.push_back(to_json(t));
  return {{"constant", j.constant},
          {"value", j.value ? to_json(*j.value) : json(nullptr)},
          {"parameters", params},
          {"samples", j.samples},
          {"spread", clean(j.spread)},
          {"numeric_constant", j.numeric_constant},
          {"notes", strings(j.notes)}};
}

json to_json(const TrivialityVerdict& v) {
  return {{"isotrivial", v.isotrivial},
          {"pair", to_json(v.pair)},
          {"verdict", to_json(v.via_pair)},
          {"j", v.j ? to_json(*v.j) : json(nullptr)}};
}

json setup_json(const PencilSetup& s) {
  return {{"basepoint", to_json(s.basepoint)},
          {"to_standard", to_json(s.to_standard)},
          {"moved_curve", s.curve.to_string()},
          {"stripped", forms(s.stripped)},
          {"d", s.d},
          {"m", s.m},
          {"reduced", s.reduced}};
}

}  // namespace cmod::tool
