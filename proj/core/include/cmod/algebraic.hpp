#pragma once

#include <complex>
#include <vector>

#include "cmod/ternary_form.hpp"
#include "cmod/univariate.hpp"

namespace cmod {

/// Polynomial in x whose coefficients are polynomials in y: sum_k c_k(y) x^k.
/// Used for the affine chart Z = 1 of the pencil through [1:0:0].
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<UnivariatePoly> coeffs);
  /// G(x, y, 1).
  static XPoly from_form(const TernaryForm& g);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<UnivariatePoly>& coeffs() const { return c_; }
  const UnivariatePoly& coeff(int k) const;
  const UnivariatePoly& leading() const { return c_.back(); }

  /// Specialization y = y0 as a polynomial in x.
  UnivariatePoly at(const Rational& y0) const;
  std::vector<std::complex<double>> at(std::complex<double> y0) const;

  XPoly derivative_x() const;
  XPoly derivative_y() const;

 private:
  void trim();
  std::vector<UnivariatePoly> c_;
};

/// A factor of a squarefree modulus s(y) together with a polynomial in x whose
/// coefficients are reduced modulo that factor. Over every root of `modulus` the
/// leading coefficient of `poly` is nonzero (or `poly` is zero).
struct SplitPoly {
  UnivariatePoly modulus;
  XPoly poly;
};

/// Splits s so that on each factor p has an invertible leading coefficient
/// (computations in Q[y]/(s) with dynamic splitting on zero divisors).
std::vector<SplitPoly> normalize_over_roots(const UnivariatePoly& s, const XPoly& p);

/// For each factor s_i of s, the monic gcd in x of the specializations of `polys`
/// at the roots of s_i. The factors multiply to s.
std::vector<SplitPoly> gcd_over_roots(const UnivariatePoly& s, const std::vector<XPoly>& polys);

/// Distinct roots in x of p(x, y0) for y0 ranging over the roots of s, as a
/// splitting of s into factors with a constant count.
struct SplitCount {
  UnivariatePoly modulus;
  int degree;    // degree of p(x, y0)
  int distinct;  // number of distinct roots of p(x, y0)
};
std::vector<SplitCount> distinct_roots_over(const UnivariatePoly& s, const XPoly& p);

}  // namespace cmod
