#include "cmod/moduli.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "cmod/error.hpp"

namespace cmod {

using cd = std::complex<double>;

namespace {

template <class T>
std::vector<T> elementary_symmetric(const std::vector<T>& t) {
  std::vector<T> e(t.size() + 1, T(0));
  e[0] = T(1);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j >= 1; --j) e[j] += t[i] * e[j - 1];
  return e;
}

cd ipow(cd z, int n) {
  cd r = 1;
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

Rational qpow(const Rational& q, int n) {
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= q;
  return r;
}

}  // namespace

AffineInvariants invariants(std::span<const cd> points, double tol) {
  AffineInvariants inv;
  inv.size = static_cast<int>(points.size());
  if (points.empty()) {
    inv.degenerate = true;
    return inv;
  }
  cd c = 0;
  for (const auto& p : points) c += p;
  c /= static_cast<double>(points.size());
  inv.centroid = c;
  std::vector<cd> t;
  for (const auto& p : points) {
    t.push_back(p - c);
    inv.scale = std::max(inv.scale, std::abs(p - c));
  }
  if (inv.scale <= tol * std::max(1.0, std::abs(c))) {
    inv.degenerate = true;
    inv.scale = 0;
    return inv;
  }
  // Work with t / scale so that every e_j is O(1); the invariants are unchanged.
  for (auto& v : t) v /= inv.scale;
  std::vector<cd> e = elementary_symmetric(t);
  for (int j = 2; j <= inv.size; ++j)
    if (std::abs(e[static_cast<std::size_t>(j)]) > tol) {
      inv.j0 = j;
      break;
    }
  inv.e.resize(e.size());
  for (std::size_t j = 0; j < e.size(); ++j) inv.e[j] = e[j] * std::pow(inv.scale, static_cast<double>(j));
  if (inv.j0 == 0) {
    inv.degenerate = true;
    return inv;
  }
  const cd base = e[static_cast<std::size_t>(inv.j0)];
  for (int j = inv.j0 + 1; j <= inv.size; ++j)
    inv.values.push_back(ipow(e[static_cast<std::size_t>(j)], inv.j0) / ipow(base, j));
  return inv;
}

ExactInvariants exact_invariants(std::span<const Rational> points) {
  ExactInvariants inv;
  inv.size = static_cast<int>(points.size());
  if (points.empty()) {
    inv.degenerate = true;
    return inv;
  }
  Rational c = 0;
  for (const auto& p : points) c += p;
  c /= static_cast<long>(points.size());
  std::vector<Rational> t;
  for (const auto& p : points) t.push_back(p - c);
  inv.e = elementary_symmetric(t);
  for (int j = 2; j <= inv.size; ++j)
    if (sgn(inv.e[static_cast<std::size_t>(j)]) != 0) {
      inv.j0 = j;
      break;
    }
  if (inv.j0 == 0) {
    inv.degenerate = true;
    return inv;
  }
  const Rational& base = inv.e[static_cast<std::size_t>(inv.j0)];
  for (int j = inv.j0 + 1; j <= inv.size; ++j)
    inv.values.push_back(qpow(inv.e[static_cast<std::size_t>(j)], inv.j0) / qpow(base, j));
  return inv;
}

double invariant_distance(const AffineInvariants& a, const AffineInvariants& b) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (a.size != b.size || a.degenerate != b.degenerate) return inf;
  if (a.degenerate) return 0;
  if (a.j0 != b.j0) return inf;
  double worst = 0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    worst = std::max(worst, std::abs(a.values[i] - b.values[i]) / (1 + std::abs(a.values[i])));
  return worst;
}

std::optional<AffineMatch> same_moduli(std::span<const cd> A, std::span<const cd> B, double tol) {
  if (A.size() != B.size())
    throw Error(ErrorKind::SizeMismatch, "multisets of sizes " + std::to_string(A.size()) + " and " +
                                             std::to_string(B.size()));
  AffineInvariants ia = invariants(A, tol), ib = invariants(B, tol);
  const double loose = std::sqrt(tol);
  if (invariant_distance(ia, ib) > loose) return std::nullopt;

  auto attempt = [&](cd a) -> std::optional<AffineMatch> {
    cd b = ib.centroid - a * ia.centroid;
    std::vector<cd> mapped;
    for (const auto& p : A) mapped.push_back(a * p + b);
    double radius = loose * std::max({ib.scale, std::abs(ib.centroid), 1e-300});
    auto perm = match_multisets(std::span<const cd>(mapped), B, radius);
    if (!perm) return std::nullopt;
    return AffineMatch{a, b, *perm};
  };
  if (ia.degenerate) return attempt(1.0);

  const auto j0 = static_cast<std::size_t>(ia.j0);
  cd ratio = ib.e[j0] / ia.e[j0];
  double mod = std::pow(std::abs(ratio), 1.0 / ia.j0);
  for (int r = 0; r < ia.j0; ++r) {
    double arg = (std::arg(ratio) + 2 * std::numbers::pi * r) / ia.j0;
    if (auto m = attempt(std::polar(mod, arg))) return m;
  }
  return std::nullopt;
}

OracleVerdict constant_moduli_oracle(const PencilSetup& s, int samples, std::uint64_t seed, double tol) {
  OracleVerdict v;
  std::vector<cd> first;
  AffineInvariants first_inv;
  for (const auto& y : sample_lines(s, samples, seed)) {
    std::vector<cd> pts;
    try {
      pts = intersect(s, PencilLine::at(y), tol).expanded();
    } catch (const IllConditionedError&) {
      continue;
    }
    if (static_cast<int>(pts.size()) != s.d) continue;
    v.lines.push_back(y);
    v.samples_used++;
    if (v.samples_used == 1) {
      first = pts;
      first_inv = invariants(first, tol);
      continue;
    }
    v.worst_deviation = std::max(v.worst_deviation, invariant_distance(first_inv, invariants(pts, tol)));
    if (v.constant && !same_moduli(first, pts, tol)) {
      v.constant = false;
      v.witness = std::make_pair(v.lines.front(), y);
    }
  }
  if (v.samples_used < 2)
    throw Error(ErrorKind::InsufficientSamples, "the oracle needs at least two usable sample lines");
  return v;
}

}  // namespace cmod
