#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cmod/pencil.hpp"
#include "cmod/rational.hpp"

namespace cmod {

/// Invariants of a point multiset on a line under t -> a t + b. With e_j the
/// elementary symmetric functions of the centered points, j0 is the first j >= 2
/// with e_j nonzero and the invariants are I_j = e_j^j0 / e_j0^j for j0 < j <= d.
struct AffineInvariants {
  int size = 0;
  int j0 = 0;
  bool degenerate = false;  // all points equal
  std::vector<std::complex<double>> values;
  std::vector<std::complex<double>> e;  // centered e_0..e_d
  std::complex<double> centroid;
  double scale = 0;  // max distance from the centroid
};

AffineInvariants invariants(std::span<const std::complex<double>> points, double tol);

struct ExactInvariants {
  int size = 0;
  int j0 = 0;
  bool degenerate = false;
  std::vector<Rational> values;
  std::vector<Rational> e;
};

/// Same construction in exact arithmetic for rational points.
ExactInvariants exact_invariants(std::span<const Rational> points);

/// max_j |I_j - I'_j| / (1 + |I_j|); infinite when sizes, j0 or degeneracy differ.
double invariant_distance(const AffineInvariants& a, const AffineInvariants& b);

struct AffineMatch {
  std::complex<double> a, b;  // B = a A + b as multisets
  std::vector<int> bijection;
};

/// An affine map sending A onto B within tol, if one exists. Invariants are only a
/// filter; every match is confirmed by solving for (a, b) and matching points.
/// Throws SizeMismatch for multisets of different sizes.
std::optional<AffineMatch> same_moduli(std::span<const std::complex<double>> A,
                                       std::span<const std::complex<double>> B, double tol);

struct OracleVerdict {
  bool constant = true;
  int samples_used = 0;
  double worst_deviation = 0;
  std::optional<std::pair<Rational, Rational>> witness;
  std::vector<Rational> lines;
};

/// Samples non-special lines of the pencil and compares every fiber with the first.
OracleVerdict constant_moduli_oracle(const PencilSetup& s, int samples, std::uint64_t seed, double tol);

}  // namespace cmod
