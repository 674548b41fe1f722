#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cmod/parser.hpp"
#include "cmod/weierstrass.hpp"

namespace cmod {

/// z^2 = sum_k coeffs[k](y) x^k with d = coeffs.size() - 1. Canonical families
/// (the output of family_from_pair) have coeffs[d] = 1 and coeffs[d-1] = 0.
struct WeierstrassFamily {
  int d = 0;
  std::vector<UnivariatePoly> coeffs;

  int genus() const { return (d - 1) / 2; }
  bool canonical() const;
  std::string to_string() const;
};

/// Throws UnsupportedDegree for d < 3 and InvalidInput for a vanishing x^d coefficient.
WeierstrassFamily family_from_equation(const FamilyEquation& eq);

WeierstrassFamily family_from_pair(const WeierstrassData& w);

/// Homogenizes to degree max(deg c_k + k), moves nothing (p = [1:0:0]) and reduces.
WeierstrassData pair_from_family(const WeierstrassFamily& fam);

struct JReport {
  bool constant = false;
  std::optional<Rational> value;      // exact j when constant
  std::vector<Rational> parameters;   // sample points t
  std::vector<double> samples;        // j(t) from the classical formula
  double spread = 0;                  // max |j(t) - j(t_0)| / max(1, |j(t_0)|)
  bool numeric_constant = false;      // spread <= 1e-6
  std::vector<std::string> notes;
};

/// y^2 = x^3 + f2(t) x + f3(t): constant j iff f2^3 = c f3^2 or f2 f3 = 0.
/// Throws DegenerateFamily when 4 f2^3 + 27 f3^2 vanishes identically.
JReport j_constancy(const UnivariatePoly& f2, const UnivariatePoly& f3);

struct TrivialityVerdict {
  bool isotrivial = false;
  ModuliVerdict via_pair;
  WeierstrassData pair;
  std::optional<JReport> j;  // d = 3 only
};

/// decide() on the associated pair; for d = 3 the j-invariant criterion must agree.
TrivialityVerdict is_locally_trivial(const WeierstrassFamily& fam);

}  // namespace cmod
