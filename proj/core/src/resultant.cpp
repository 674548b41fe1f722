#include "cmod/resultant.hpp"

#include "cmod/algebraic.hpp"
#include "cmod/error.hpp"

namespace cmod {

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<Rational> flat;
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorKind::InvalidInput, "determinant of a non-square matrix");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  Integer scale = lcm_of_denominators(flat);
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = m[i][j] * scale;
      a[i][j] = v.get_num();
    }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  Rational d(a[n - 1][n - 1] * sign);
  Integer denom;
  mpz_pow_ui(denom.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(n));
  d /= Rational(denom);
  d.canonicalize();
  return d;
}

Rational sylvester_resultant(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  if (f.empty() || g.empty()) throw Error(ErrorKind::InvalidInput, "resultant of empty coefficient vectors");
  const std::size_t size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
  // Row i of f: coefficients from the leading one down, shifted right by i.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = f[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = g[n - j];
  return determinant(std::move(s));
}

Rational resultant(const UnivariatePoly& f, const UnivariatePoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  return sylvester_resultant(f.coeffs(), g.coeffs());
}

Rational discriminant(const UnivariatePoly& f) {
  const int n = f.degree();
  if (n < 1) throw Error(ErrorKind::InvalidInput, "discriminant of a constant polynomial");
  Rational r = resultant(f, f.derivative()) / f.leading();
  if ((n * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

UnivariatePoly interpolate(const std::vector<Rational>& nodes, const std::vector<Rational>& values) {
  const std::size_t n = nodes.size();
  std::vector<Rational> dd = values;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
      if (i == level) break;
    }
  UnivariatePoly p;
  for (std::size_t i = n; i-- > 0;) {
    p *= UnivariatePoly::linear_root(nodes[i]);
    p += UnivariatePoly::constant(dd[i]);
  }
  return p;
}

BinaryForm discriminant_in_X(const TernaryForm& g) {
  const int d = g.x_degree();
  const int big = g.degree();
  if (d < 1) throw Error(ErrorKind::InvalidInput, "discriminant in X of a form without X");
  const int n = (d - 1) * big + d * (big - 1) - d * (d - 1);
  XPoly affine = XPoly::from_form(g);
  std::vector<Rational> nodes, values;
  for (int i = 0; i <= n; ++i) {
    Rational y(i);
    std::vector<Rational> f(static_cast<std::size_t>(d) + 1), fp(static_cast<std::size_t>(d));
    for (int k = 0; k <= d; ++k) f[static_cast<std::size_t>(k)] = affine.coeff(k)(y);
    for (int k = 1; k <= d; ++k) fp[static_cast<std::size_t>(k - 1)] = f[static_cast<std::size_t>(k)] * k;
    nodes.push_back(y);
    values.push_back(sylvester_resultant(f, fp));
  }
  return BinaryForm::homogenize(interpolate(nodes, values), n);
}

}  // namespace cmod
