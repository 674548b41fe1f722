#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "cmod/rational.hpp"

namespace cmod {

/// Dense univariate polynomial over the rationals; coefficient index = exponent.
/// The coefficient vector never carries trailing zeros, so the zero polynomial is
/// the empty vector and has degree -1.
class UnivariatePoly {
 public:
  UnivariatePoly() = default;
  explicit UnivariatePoly(std::vector<Rational> coeffs);
  UnivariatePoly(std::initializer_list<long> coeffs);

  static UnivariatePoly constant(const Rational& c);
  static UnivariatePoly monomial(const Rational& c, int exponent);
  /// The polynomial x - root.
  static UnivariatePoly linear_root(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Zero for exponents outside [0, degree].
  const Rational& coeff(int exponent) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;
  std::complex<double> eval(std::complex<double> x) const;

  UnivariatePoly derivative() const;
  UnivariatePoly monic() const;
  /// Integer coefficients with gcd one and positive leading coefficient.
  UnivariatePoly primitive() const;
  /// p(q(x)).
  UnivariatePoly compose(const UnivariatePoly& q) const;
  UnivariatePoly pow(unsigned e) const;

  UnivariatePoly& operator+=(const UnivariatePoly& o);
  UnivariatePoly& operator-=(const UnivariatePoly& o);
  UnivariatePoly& operator*=(const UnivariatePoly& o);
  UnivariatePoly& operator*=(const Rational& c);

  friend UnivariatePoly operator+(UnivariatePoly a, const UnivariatePoly& b) { return a += b; }
  friend UnivariatePoly operator-(UnivariatePoly a, const UnivariatePoly& b) { return a -= b; }
  friend UnivariatePoly operator*(UnivariatePoly a, const UnivariatePoly& b) { return a *= b; }
  friend UnivariatePoly operator*(UnivariatePoly a, const Rational& c) { return a *= c; }
  friend UnivariatePoly operator*(const Rational& c, UnivariatePoly a) { return a *= c; }
  UnivariatePoly operator-() const;

  friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws ErrorKind::ZeroPolynomial on a zero divisor.
std::pair<UnivariatePoly, UnivariatePoly> divmod(const UnivariatePoly& a, const UnivariatePoly& b);
UnivariatePoly operator%(const UnivariatePoly& a, const UnivariatePoly& b);
/// Throws ErrorKind::Divisibility when b does not divide a.
UnivariatePoly exact_divide(const UnivariatePoly& a, const UnivariatePoly& b);

/// Monic gcd; gcd(0, 0) throws ErrorKind::UndefinedGcd.
UnivariatePoly gcd(const UnivariatePoly& a, const UnivariatePoly& b);

struct ExtendedGcd {
  UnivariatePoly g, s, t;  // s*a + t*b = g, g monic
};
ExtendedGcd xgcd(const UnivariatePoly& a, const UnivariatePoly& b);

/// Yun's algorithm: f = lc(f) * prod g_i^i with every g_i monic and squarefree.
/// Only factors with nonconstant g_i are returned, ordered by multiplicity.
std::vector<std::pair<UnivariatePoly, int>> squarefree_decomposition(const UnivariatePoly& f);
UnivariatePoly squarefree_part(const UnivariatePoly& f);

/// Rational roots among the real numeric roots of f, confirmed exactly.
std::vector<Rational> rational_roots(const UnivariatePoly& f);

}  // namespace cmod
