#pragma once

#include <array>
#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cmod/binary_form.hpp"
#include "cmod/rational.hpp"

namespace cmod {

using Exponent = std::array<int, 3>;
using Matrix3 = std::array<std::array<Rational, 3>, 3>;
using Point3 = std::array<Rational, 3>;
using CPoint3 = std::array<std::complex<double>, 3>;

/// Sparse polynomial in X, Y, Z with arbitrary (not necessarily equal) monomial
/// degrees. The parser produces these; TernaryForm::from checks homogeneity.
class SparsePoly {
 public:
  using Terms = std::map<Exponent, Rational, std::greater<Exponent>>;

  SparsePoly() = default;
  static SparsePoly constant(const Rational& c);
  static SparsePoly variable(int index);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  /// Adds c * monomial, dropping the entry if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly operator-() const;
  SparsePoly pow(unsigned e) const;

 private:
  Terms terms_;
};

/// Homogeneous polynomial in X, Y, Z. Terms iterate in decreasing lexicographic
/// order of (a, b, c) for X^a Y^b Z^c; no stored coefficient is zero.
class TernaryForm {
 public:
  using Terms = SparsePoly::Terms;

  explicit TernaryForm(int degree = 0);
  /// Throws ErrorKind::NonHomogeneous naming two offending monomial degrees.
  static TernaryForm from(const SparsePoly& p, int degree_if_zero = 0);
  static TernaryForm monomial(const Rational& c, int a, int b, int cz);
  /// sum_k coeffs[k](Y, Z) X^k; coeffs[k] must have degree `degree - k`.
  static TernaryForm from_x_coefficients(int degree, const std::vector<BinaryForm>& coeffs);
  static TernaryForm from_binary(const BinaryForm& f);

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  /// Largest power of X present; -1 for the zero form.
  int x_degree() const;
  /// Coefficient of X^k as a binary form of degree degree()-k.
  BinaryForm x_coefficient(int k) const;

  TernaryForm partial(int var) const;
  Rational operator()(const Point3& p) const;
  std::complex<double> eval(const CPoint3& p) const;
  /// G(M v): the form in the coordinates v with old = M * v.
  TernaryForm substitute(const Matrix3& m) const;
  TernaryForm pow(unsigned e) const;
  TernaryForm primitive() const;

  TernaryForm& operator+=(const TernaryForm& o);
  TernaryForm& operator-=(const TernaryForm& o);
  TernaryForm& operator*=(const Rational& c);
  friend TernaryForm operator+(TernaryForm a, const TernaryForm& b) { return a += b; }
  friend TernaryForm operator-(TernaryForm a, const TernaryForm& b) { return a -= b; }
  friend TernaryForm operator*(TernaryForm a, const Rational& c) { return a *= c; }
  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
  TernaryForm operator-() const;
  friend bool operator==(const TernaryForm& a, const TernaryForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  /// Text in the shared polynomial grammar, e.g. "X^3 + Y^2*Z".
  std::string to_string() const;

 private:
  int degree_;
  Terms terms_;
};

/// Throws ErrorKind::Divisibility when b does not divide a.
TernaryForm exact_divide(const TernaryForm& a, const TernaryForm& b);

/// c with a = c * b when the two nonzero forms are proportional.
std::optional<Rational> proportionality(const TernaryForm& a, const TernaryForm& b);

// 3x3 rational matrices acting on column vectors of projective coordinates.
Matrix3 identity3();
Matrix3 operator*(const Matrix3& a, const Matrix3& b);
Point3 operator*(const Matrix3& a, const Point3& v);
CPoint3 apply(const Matrix3& a, const CPoint3& v);
Rational det(const Matrix3& a);
/// Throws ErrorKind::InvalidInput for singular matrices.
Matrix3 inverse(const Matrix3& a);

/// Scales a projective point so that its largest-magnitude coordinate is one.
CPoint3 normalize(const CPoint3& p);
CPoint3 to_complex(const Point3& p);

}  // namespace cmod
