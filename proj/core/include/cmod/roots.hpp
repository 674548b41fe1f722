#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "cmod/error.hpp"

namespace cmod {

class UnivariatePoly;

inline constexpr double kDefaultTol = 1e-10;

/// A complex number together with a forward error estimate.
struct ComplexApprox {
  double re = 0.0;
  double im = 0.0;
  double err = 0.0;

  std::complex<double> value() const { return {re, im}; }
};

/// Roots of a polynomial with multiplicity hints. Roots closer than
/// sqrt(tol) * scale are reported once, with the cluster size as the hint.
struct RootSet {
  std::vector<ComplexApprox> roots;
  std::vector<int> multiplicity;
  bool well_conditioned = true;

  int total() const;
  int distinct() const { return static_cast<int>(roots.size()); }
  /// Every root repeated according to its multiplicity hint.
  std::vector<std::complex<double>> expanded() const;
};

class IllConditionedError : public Error {
 public:
  IllConditionedError(const std::string& message, RootSet partial);
  const RootSet& partial() const noexcept { return partial_; }

 private:
  RootSet partial_;
};

/// All complex roots of f via Aberth-Ehrlich iteration from a fixed initial circle,
/// followed by Newton polishing. Deterministic: no randomness anywhere.
/// Throws ErrorKind::ZeroPolynomial for f = 0 and IllConditionedError when the
/// iteration cap is reached. Degree is limited to kMaxRootDegree.
RootSet complex_roots(const UnivariatePoly& f, double tol = kDefaultTol);
RootSet complex_roots(std::span<const std::complex<double>> coeffs, double tol = kDefaultTol);

inline constexpr int kMaxRootDegree = 64;

/// A bijection perm with |a[i] - b[perm[i]]| <= tol for every i, if one exists.
std::optional<std::vector<int>> match_multisets(std::span<const std::complex<double>> a,
                                                std::span<const std::complex<double>> b, double tol);
std::optional<std::vector<int>> match_multisets(std::span<const ComplexApprox> a,
                                                std::span<const ComplexApprox> b, double tol);

}  // namespace cmod
