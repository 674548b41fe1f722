#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace cmod::tool {

namespace {

using cd = std::complex<double>;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  return s == "-0.000" ? "0.000" : s;
}

std::string cnum(cd z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

bool is_real(cd z, double scale) { return std::abs(z.imag()) <= 1e-7 * std::max(1.0, scale); }

struct Box {
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
};

double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  return v[static_cast<std::size_t>(q * static_cast<double>(v.size() - 1))];
}

// Finite affine point of a projective point, if real.
std::optional<std::pair<double, double>> affine(const CPoint3& p) {
  if (std::abs(p[2]) < 1e-12) return std::nullopt;
  cd x = p[0] / p[2], y = p[1] / p[2];
  if (!is_real(x, std::abs(x)) || !is_real(y, std::abs(y))) return std::nullopt;
  return std::make_pair(x.real(), y.real());
}

}  // namespace

std::string plot_svg(const PencilSetup& s, const PlotOptions& o) {
  const double W = 800, Hh = 600;
  auto specials = special_lines(s, o.tol);
  auto spoints = special_points(s, specials, o.tol);
  std::vector<Rational> samples = sample_lines(s, o.lines, o.seed);

  double R = 3;
  for (const auto& l : specials)
    if (!l.line.infinite) R = std::max(R, 1.5 * std::abs(l.approx.real()));
  for (const auto& y : samples) R = std::max(R, 1.1 * std::abs(y.get_d()));

  // Real locus by sweeping the pencil.
  std::vector<std::pair<double, double>> curve;
  for (int i = 0; i <= o.sweep; ++i) {
    double y = -R + 2 * R * i / o.sweep;
    Rational yq(y);
    UnivariatePoly q = restrict_to(s, PencilLine::at(yq));
    if (q.degree() < 1) continue;
    RootSet r;
    try {
      r = complex_roots(q, o.tol);
    } catch (const IllConditionedError& e) {
      r = e.partial();
    }
    for (const auto& z : r.roots)
      if (is_real(z.value(), std::abs(z.value()))) curve.emplace_back(z.re, y);
  }

  std::optional<LocusReport> locus;
  try {
    locus = t_locus(s, std::max(o.lines, 3), o.seed, o.tol);
  } catch (const Error&) {
  }
  std::optional<TangentReport> fiber;
  for (const auto& y : samples) {
    try {
      fiber = tangent_point(s, PencilLine::at(y), o.tol);
      break;
    } catch (const Error&) {
    }
  }

  std::vector<double> xs, ys;
  for (const auto& [x, y] : curve) xs.push_back(x);
  std::vector<std::string> notes;
  std::vector<std::pair<double, double>> real_special;
  for (const auto& p : spoints) {
    if (auto a = affine(p)) {
      real_special.push_back(*a);
      xs.push_back(a->first);
    } else {
      notes.push_back("special point [" + cnum(p[0]) + " : " + cnum(p[1]) + " : " + cnum(p[2]) + "]");
    }
  }
  std::optional<std::pair<double, double>> tpt;
  if (locus && locus->kind == LocusKind::Point && locus->point) {
    tpt = affine(*locus->point);
    if (tpt) xs.push_back(tpt->first);
    else notes.push_back("T = [" + cnum((*locus->point)[0]) + " : " + cnum((*locus->point)[1]) + " : " +
                         cnum((*locus->point)[2]) + "]");
  }
  if (locus) notes.push_back(std::string("T-locus: ") + to_string(locus->kind));

  Box b;
  if (xs.empty()) {
    b = {-R, R, -R, R};
  } else {
    b.x0 = std::min(quantile(xs, 0.02), 0.0);
    b.x1 = std::max(quantile(xs, 0.98), 0.0);
    b.y0 = -R;
    b.y1 = R;
  }
  if (b.x1 - b.x0 < 1e-9) {
    b.x0 -= 1;
    b.x1 += 1;
  }
  const double mx = 0.1 * (b.x1 - b.x0), my = 0.1 * (b.y1 - b.y0);
  b = {b.x0 - mx, b.x1 + mx, b.y0 - my, b.y1 + my};
  auto px = [&](double x) { return (x - b.x0) / (b.x1 - b.x0) * W; };
  auto py = [&](double y) { return Hh - (y - b.y0) / (b.y1 - b.y0) * Hh; };
  auto inside = [&](double x, double y) { return x >= b.x0 && x <= b.x1 && y >= b.y0 && y <= b.y1; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W << "\" height=\"" << Hh
     << "\" viewBox=\"0 0 " << W << " " << Hh << "\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  os << "<g id=\"pencil\" stroke=\"#9ecae1\" stroke-width=\"1\">\n";
  for (const auto& y : samples)
    os << "<line x1=\"0\" y1=\"" << num(py(y.get_d())) << "\" x2=\"" << W << "\" y2=\"" << num(py(y.get_d()))
       << "\"/>\n";
  os << "</g>\n";

  if (locus && locus->kind == LocusKind::LineX0)
    os << "<line id=\"t-locus\" x1=\"" << num(px(0)) << "\" y1=\"0\" x2=\"" << num(px(0)) << "\" y2=\"" << Hh
       << "\" stroke=\"#d62728\" stroke-dasharray=\"6,4\"/>\n";

  os << "<g id=\"curve\" fill=\"black\">\n";
  for (const auto& [x, y] : curve)
    if (inside(x, y)) os << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y)) << "\" r=\"0.8\"/>\n";
  os << "</g>\n";

  if (fiber) {
    os << "<g id=\"tangents\" stroke=\"#2ca02c\" stroke-width=\"1\">\n";
    for (std::size_t i = 0; i < fiber->points.roots.size(); ++i) {
      cd xr = fiber->points.roots[i].value();
      if (!is_real(xr, std::abs(xr))) continue;
      const CPoint3& l = fiber->tangent_lines[i];
      // Real representative of a x + b y + c = 0.
      std::size_t big = 0;
      for (std::size_t k = 1; k < 3; ++k)
        if (std::abs(l[k]) > std::abs(l[big])) big = k;
      double a = (l[0] / l[big]).real(), bb = (l[1] / l[big]).real(), c = (l[2] / l[big]).real();
      double xa, ya, xb, yb;
      if (std::abs(a) > std::abs(bb)) {
        ya = b.y0, yb = b.y1;
        xa = -(bb * ya + c) / a, xb = -(bb * yb + c) / a;
      } else {
        xa = b.x0, xb = b.x1;
        ya = -(a * xa + c) / bb, yb = -(a * xb + c) / bb;
      }
      os << "<line x1=\"" << num(px(xa)) << "\" y1=\"" << num(py(ya)) << "\" x2=\"" << num(px(xb)) << "\" y2=\""
         << num(py(yb)) << "\"/>\n";
    }
    os << "</g>\n";
  }

  os << "<g id=\"special\" fill=\"#ff7f0e\">\n";
  for (const auto& [x, y] : real_special)
    os << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y)) << "\" r=\"4\"/>\n";
  os << "</g>\n";
  if (tpt)
    os << "<circle id=\"t-point\" cx=\"" << num(px(tpt->first)) << "\" cy=\"" << num(py(tpt->second))
       << "\" r=\"5\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"/>\n";

  os << "<g id=\"annotations\" font-family=\"monospace\" font-size=\"11\" fill=\"#333\">\n";
  double ty = 16;
  for (const auto& n : notes) {
    os << "<text x=\"8\" y=\"" << num(ty) << "\">" << n << "</text>\n";
    ty += 14;
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace cmod::tool
