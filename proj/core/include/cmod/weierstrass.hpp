#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cmod/binary_form.hpp"
#include "cmod/pencil.hpp"
#include "cmod/roots.hpp"
#include "cmod/ternary_form.hpp"
#include "cmod/univariate.hpp"

namespace cmod {

/// How the reduced coordinates arise from the input, step by step:
/// v = linear * old; x -> x / lead (when lead is not constant, after multiplying by
/// lead^(d-1)); x -> x - shift(y); X -> X / x_scale.
struct CoordChange {
  Matrix3 linear;
  UnivariatePoly lead;  // f_d(y) before scaling
  bool lead_scaled = false;
  UnivariatePoly shift;
  Integer x_scale = 1;
};

/// G = Z^m X^d + sum_{h=2}^{d} F[h] X^(d-h), with F[h] of degree m + h.
struct WeierstrassData {
  int d = 0;
  int m = 0;
  std::vector<BinaryForm> F;  // indices 0..d; F[0] = Z^m and F[1] = 0
  std::vector<std::pair<BinaryForm, int>> stripped;
  CoordChange change;
  bool reduced = true;

  TernaryForm form() const;
};

/// Brings the moved curve to the form above; canonical and idempotent.
WeierstrassData reduce(const PencilSetup& s);

struct ConstantVerdict {
  int k = 0;
  BinaryForm H;                 // primitive, positive leading coefficient
  std::vector<Rational> lambdas;  // t = 0..D with D = d_eff / k, lambdas[0] = 1
  std::vector<int> z_exponents;   // e_t with F[kt] = lambda_t Z^e_t H^t
  bool has_x_factor = false;
  bool paper_exponents = true;  // deg H = k (d_eff + m) / d_eff, so G is a product of X^k Z^(n-k) - a H
  UnivariatePoly companion;     // sum_t lambda_t W^(D - t)
};

struct NonConstantVerdict {
  int h = 0;
  int j = 0;
};

struct ModuliVerdict {
  bool constant = false;
  ConstantVerdict c;
  NonConstantVerdict witness;
  int d = 0;
  int m = 0;
};

/// Gcd/proportionality criterion. Throws NonReduced when X^2 divides G.
ModuliVerdict decide(const WeierstrassData& w);

/// Z^m X^d + sum_t lambda_t Z^e_t H^t X^(d_eff - k t), times X with an X factor.
TernaryForm expand_normal_form(const ConstantVerdict& v, int d, int m);

/// True when G(M v) is a scalar multiple of G.
bool verify_automorphism(const TernaryForm& g, const Matrix3& m);

/// [X:Y:Z] -> [zeta_k X:Y:Z] preserves G; checked via X-exponents mod k.
bool verify_cyclic_automorphism(const TernaryForm& g, int k);

/// The alpha_t as complex numbers.
RootSet companion_roots(const ConstantVerdict& v, double tol = kDefaultTol);

}  // namespace cmod
