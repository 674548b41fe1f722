#include <algorithm>
#include <cmath>

#include "cmod/error.hpp"
#include "cmod/ternary_form.hpp"

namespace cmod {

Matrix3 identity3() {
  Matrix3 m;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m[i][j] = (i == j) ? 1 : 0;
  return m;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b) {
  Matrix3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      r[i][j] = s;
    }
  return r;
}

Point3 operator*(const Matrix3& a, const Point3& v) {
  Point3 r;
  for (std::size_t i = 0; i < 3; ++i) r[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
  return r;
}

CPoint3 apply(const Matrix3& a, const CPoint3& v) {
  CPoint3 r;
  for (std::size_t i = 0; i < 3; ++i)
    r[i] = a[i][0].get_d() * v[0] + a[i][1].get_d() * v[1] + a[i][2].get_d() * v[2];
  return r;
}

Rational det(const Matrix3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Matrix3 inverse(const Matrix3& a) {
  Rational d = det(a);
  if (sgn(d) == 0) throw Error(ErrorKind::InvalidInput, "singular coordinate change");
  Matrix3 r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      r[i][j] = (a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]) / d;
    }
  return r;
}

CPoint3 normalize(const CPoint3& p) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(p[i]) > std::abs(p[best])) best = i;
  if (std::abs(p[best]) == 0) return p;
  std::complex<double> s = p[best];
  return {p[0] / s, p[1] / s, p[2] / s};
}

CPoint3 to_complex(const Point3& p) { return {p[0].get_d(), p[1].get_d(), p[2].get_d()}; }

}  // namespace cmod
