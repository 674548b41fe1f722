#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cmod/binary_form.hpp"
#include "cmod/ternary_form.hpp"
#include "cmod/univariate.hpp"
#include "cmod/weierstrass.hpp"

namespace cmod::testkit {

/// Seeded generator with helpers for small random rationals and forms.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  long integer(long lo, long hi);
  Rational rational(long num_bound, long den_bound);
  Rational nonzero_rational(long num_bound, long den_bound);
  BinaryForm binary_form(int degree, long bound);
  UnivariatePoly poly(int degree, long bound);
  bool coin() { return integer(0, 1) == 1; }

 private:
  std::mt19937_64 rng_;
};

struct CorpusCurve {
  TernaryForm curve;  // already in form (*), base point [1:0:0]
  bool positive = false;
  ConstantVerdict truth;  // generator parameters for positives
  int d = 0;
  std::string label;
};

/// A random constant-moduli normal form with m = 0: companion squarefree, last
/// lambda nonzero, gcd of the used t equal to one, lambda_1 = 0 when k = 1.
ConstantVerdict random_constant(Gen& g, int d, bool x_factor, int k);

std::vector<CorpusCurve> positives(std::uint64_t seed, int count);

/// Positives with one random monomial X^a Y^b Z^c (a <= d - 2) added, kept only when
/// some pair (h, j) fails F_h^j ~ F_j^h.
std::vector<CorpusCurve> negatives(std::uint64_t seed, int count);

/// Independent pairwise test on a curve in form (*) with m = 0, via exact
/// evaluation of F_h^j / F_j^h at several rational points.
bool breaks_proportionality(const TernaryForm& g);

std::vector<int> divisors(int n);

}  // namespace cmod::testkit
