#include "cmod/fibration.hpp"

#include <cmath>
#include <sstream>

#include "cmod/error.hpp"

namespace cmod {

namespace {

// The sample parameters for numeric j: t = -9/4, -7/4, ... skipping singular fibers.
std::vector<Rational> j_parameters(const UnivariatePoly& delta, int count) {
  std::vector<Rational> out;
  for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
    Rational t(2 * i - 9, 4);
    t.canonicalize();
    if (sgn(delta(t)) != 0) out.push_back(t);
  }
  return out;
}

}  // namespace

bool WeierstrassFamily::canonical() const {
  return coeffs.size() == static_cast<std::size_t>(d) + 1 && coeffs[static_cast<std::size_t>(d)] == UnivariatePoly{1} &&
         coeffs[static_cast<std::size_t>(d - 1)].is_zero();
}

std::string WeierstrassFamily::to_string() const {
  std::ostringstream os;
  os << "z^2 =";
  bool first = true;
  for (int k = d; k >= 0; --k) {
    const UnivariatePoly& c = coeffs[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    os << (first ? " " : " + ");
    first = false;
    std::string xs = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    if (c == UnivariatePoly{1} && k > 0) os << xs;
    else if (k == 0) os << "(" << c.to_string('y') << ")";
    else os << "(" << c.to_string('y') << ")*" << xs;
  }
  if (first) os << " 0";
  return os.str();
}

WeierstrassFamily family_from_equation(const FamilyEquation& eq) {
  WeierstrassFamily f;
  f.d = static_cast<int>(eq.coeffs.size()) - 1;
  if (f.d < 3) throw Error(ErrorKind::UnsupportedDegree, "family needs degree at least 3 in x");
  f.coeffs = eq.coeffs;
  if (f.coeffs.back().is_zero()) throw Error(ErrorKind::InvalidInput, "vanishing x^d coefficient");
  return f;
}

WeierstrassFamily family_from_pair(const WeierstrassData& w) {
  WeierstrassFamily f;
  f.d = w.d;
  f.coeffs.resize(static_cast<std::size_t>(w.d) + 1);
  for (int k = 0; k <= w.d; ++k) f.coeffs[static_cast<std::size_t>(k)] = w.F[static_cast<std::size_t>(w.d - k)].dehomogenize();
  return f;
}

WeierstrassData pair_from_family(const WeierstrassFamily& fam) {
  int total = fam.d;
  for (int k = 0; k <= fam.d; ++k) {
    const auto& c = fam.coeffs[static_cast<std::size_t>(k)];
    if (!c.is_zero()) total = std::max(total, c.degree() + k);
  }
  TernaryForm g(total);
  for (int k = 0; k <= fam.d; ++k) {
    const auto& c = fam.coeffs[static_cast<std::size_t>(k)];
    for (int j = 0; j <= c.degree(); ++j)
      if (sgn(c.coeff(j)) != 0) g.add_term({k, j, total - k - j}, c.coeff(j));
  }
  return reduce(setup(g, {1, 0, 0}));
}

JReport j_constancy(const UnivariatePoly& f2, const UnivariatePoly& f3) {
  const UnivariatePoly a = f2.pow(3) * Rational(4), b = f3.pow(2) * Rational(27);
  const UnivariatePoly delta = a + b;
  if (delta.is_zero()) throw Error(ErrorKind::DegenerateFamily, "4 f2^3 + 27 f3^2 vanishes: every fiber is singular");
  JReport r;
  if (f2.is_zero()) {
    r.constant = true;
    r.value = 0;
  } else if (f3.is_zero()) {
    r.constant = true;
    r.value = 1728;
  } else {
    // f2^3 = c f3^2 with c the ratio of leading coefficients.
    const UnivariatePoly p = f2.pow(3), q = f3.pow(2);
    if (p.degree() == q.degree()) {
      Rational c = p.leading() / q.leading();
      if (p == q * c) {
        r.constant = true;
        r.value = Rational(1728) * 4 * c / (4 * c + 27);
        r.value->canonicalize();
      }
    }
  }
  // Classical formula j = 1728 * 4 f2^3 / (4 f2^3 + 27 f3^2), sampled.
  r.parameters = j_parameters(delta, 10);
  for (const auto& t : r.parameters) {
    Rational j = Rational(1728) * a(t) / delta(t);
    r.samples.push_back(j.get_d());
  }
  const double j0 = r.samples.front();
  for (double j : r.samples) r.spread = std::max(r.spread, std::abs(j - j0) / std::max(1.0, std::abs(j0)));
  r.numeric_constant = r.spread <= 1e-6;
  if (f2.degree() > 2 || f3.degree() > 3)
    r.notes.push_back("degrees exceed deg f2 <= 2, deg f3 <= 3 of a rational elliptic surface");
  const int d2 = f2.is_zero() ? 0 : f2.degree(), d3 = f3.is_zero() ? 0 : f3.degree();
  r.notes.push_back(std::string("3deg(f2)+2deg(f3)=6 ") + (3 * d2 + 2 * d3 == 6 ? "holds" : "does not hold") +
                    " (not enforced)");
  return r;
}

TrivialityVerdict is_locally_trivial(const WeierstrassFamily& fam) {
  TrivialityVerdict v;
  v.pair = pair_from_family(fam);
  v.via_pair = decide(v.pair);
  v.isotrivial = v.via_pair.constant;
  if (fam.d == 3 && v.pair.d == 3) {
    WeierstrassFamily canon = family_from_pair(v.pair);
    v.j = j_constancy(canon.coeffs[1], canon.coeffs[0]);
    if (v.j->constant != v.isotrivial)
      throw Error(ErrorKind::Internal, "j-invariant criterion disagrees with the pencil criterion");
  }
  return v;
}

}  // namespace cmod
