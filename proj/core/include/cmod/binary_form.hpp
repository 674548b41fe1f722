#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cmod/rational.hpp"
#include "cmod/univariate.hpp"

namespace cmod {

/// Homogeneous polynomial in (Y, Z) stored densely: coefficient i multiplies
/// Y^(degree-i) Z^i. The zero form keeps its declared degree.
class BinaryForm {
 public:
  BinaryForm() : BinaryForm(0) {}
  explicit BinaryForm(int degree);
  BinaryForm(int degree, std::vector<Rational> coeffs);

  static BinaryForm constant(const Rational& c);
  /// c * Y^a * Z^b.
  static BinaryForm monomial(const Rational& c, int a, int b);
  static BinaryForm Y() { return monomial(1, 1, 0); }
  static BinaryForm Z() { return monomial(1, 0, 1); }
  /// Homogenizes p(y) to the given degree; throws if degree < deg p.
  static BinaryForm homogenize(const UnivariatePoly& p, int degree);

  int degree() const { return degree_; }
  bool is_zero() const;
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  /// First nonzero coefficient in Y-then-Z lexicographic order (highest Y power).
  const Rational& leading() const;

  /// f(y, 1).
  UnivariatePoly dehomogenize() const;
  /// f(1, z) as a polynomial in z.
  UnivariatePoly dehomogenize_y() const;
  /// Largest e with Z^e | f; degree+1 conventions are avoided by requiring f != 0.
  int z_valuation() const;

  Rational operator()(const Rational& y, const Rational& z) const;
  std::complex<double> eval(std::complex<double> y, std::complex<double> z) const;

  BinaryForm derivative_y() const;
  BinaryForm derivative_z() const;
  BinaryForm monic() const;
  BinaryForm primitive() const;
  BinaryForm pow(unsigned e) const;

  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator-=(const BinaryForm& o);
  BinaryForm& operator*=(const Rational& c);
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(BinaryForm a, const Rational& c) { return a *= c; }
  friend BinaryForm operator*(const Rational& c, BinaryForm a) { return a *= c; }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  BinaryForm operator-() const;

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree_ == b.degree_ && a.c_ == b.c_;
  }

  std::string to_string() const;

 private:
  int degree_;
  std::vector<Rational> c_;
};

/// Throws ErrorKind::Divisibility when b does not divide a.
BinaryForm exact_divide(const BinaryForm& a, const BinaryForm& b);

/// Monic-normalized gcd; throws ErrorKind::UndefinedGcd when both are zero.
BinaryForm gcd(const BinaryForm& a, const BinaryForm& b);

struct SquarefreeFactorization {
  Rational scalar;
  std::vector<std::pair<BinaryForm, int>> factors;  // monic, squarefree, pairwise coprime

  /// Number of distinct projective roots.
  int distinct_roots() const;
  /// Multiplicity of each distinct root, sorted descending.
  std::vector<int> root_pattern() const;
  BinaryForm expand() const;
};

/// f = scalar * prod g_i^{m_i}; throws ErrorKind::ZeroPolynomial for f = 0.
SquarefreeFactorization squarefree_factor(const BinaryForm& f);

struct PerfectPower {
  Rational scalar;
  BinaryForm base;  // primitive
};

/// (scalar, H) with f = scalar * H^e and H primitive over the rationals, if any.
std::optional<PerfectPower> perfect_power(const BinaryForm& f, int e);

/// c with a = c * b when the two nonzero forms are proportional.
std::optional<Rational> proportionality(const BinaryForm& a, const BinaryForm& b);

}  // namespace cmod
