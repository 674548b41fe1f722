#include "cmod/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "cmod/univariate.hpp"

namespace cmod {

using cd = std::complex<double>;

int RootSet::total() const { return std::accumulate(multiplicity.begin(), multiplicity.end(), 0); }

std::vector<cd> RootSet::expanded() const {
  std::vector<cd> out;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (int k = 0; k < multiplicity[i]; ++k) out.push_back(roots[i].value());
  return out;
}

IllConditionedError::IllConditionedError(const std::string& message, RootSet partial)
    : Error(ErrorKind::IllConditioned, message), partial_(std::move(partial)) {}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIterations = 2000;

struct Horner {
  cd p, dp;
  double bound;  // sum |a_i| |z|^i, the scale for backward-error tests
};

Horner horner(const std::vector<cd>& a, cd z) {
  cd p = 0, dp = 0;
  double bound = 0, az = std::abs(z);
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
    bound = bound * az + std::abs(*it);
  }
  return {p, dp, bound};
}

std::vector<cd> aberth(const std::vector<cd>& a, double tol, bool& converged) {
  const int n = static_cast<int>(a.size()) - 1;
  std::vector<cd> z(static_cast<std::size_t>(n));
  cd center = -a[static_cast<std::size_t>(n - 1)] / static_cast<double>(n);
  double radius = 0;
  for (int i = 0; i < n; ++i) {
    double c = std::abs(a[static_cast<std::size_t>(i)]);
    if (c > 0) radius = std::max(radius, std::pow(c, 1.0 / (n - i)));
  }
  if (radius == 0) radius = 1;
  for (int j = 0; j < n; ++j)
    z[static_cast<std::size_t>(j)] =
        center + std::polar(radius, 2 * std::numbers::pi * j / n + 0.4);

  std::vector<char> done(static_cast<std::size_t>(n), 0);
  converged = false;
  for (int iter = 0; iter < kMaxIterations && !converged; ++iter) {
    converged = true;
    for (int j = 0; j < n; ++j) {
      auto uj = static_cast<std::size_t>(j);
      if (done[uj]) continue;
      Horner h = horner(a, z[uj]);
      if (std::abs(h.p) <= 4 * kEps * h.bound) {
        done[uj] = 1;
        continue;
      }
      converged = false;
      cd ratio = h.dp == cd(0) ? cd(1e-3 * (1 + std::abs(z[uj]))) : h.p / h.dp;
      cd s = 0;
      for (int i = 0; i < n; ++i)
        if (i != j) s += 1.0 / (z[uj] - z[static_cast<std::size_t>(i)]);
      cd w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
      z[uj] -= w;
      if (std::abs(w) <= 2 * kEps * std::abs(z[uj])) done[uj] = 1;
    }
  }
  if (!converged) {
    // Accept stagnated iterates whose backward error is already within tol.
    converged = true;
    for (const auto& r : z) {
      Horner h = horner(a, r);
      if (std::abs(h.p) > tol * h.bound) converged = false;
    }
  }
  return z;
}

cd polish(const std::vector<cd>& a, cd z) {
  Horner h = horner(a, z);
  for (int k = 0; k < 5 && h.dp != cd(0); ++k) {
    cd next = z - h.p / h.dp;
    Horner hn = horner(a, next);
    if (!(std::abs(hn.p) < std::abs(h.p))) break;
    z = next;
    h = hn;
  }
  return z;
}

}  // namespace

RootSet complex_roots(std::span<const cd> coeffs, double tol) {
  std::vector<cd> a(coeffs.begin(), coeffs.end());
  while (!a.empty() && a.back() == cd(0)) a.pop_back();
  if (a.empty()) throw Error(ErrorKind::ZeroPolynomial, "root finding on the zero polynomial");
  std::size_t zeros = 0;
  while (zeros + 1 < a.size() && a[zeros] == cd(0)) ++zeros;
  a.erase(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(zeros));
  const int n = static_cast<int>(a.size()) - 1;
  if (n + static_cast<int>(zeros) > kMaxRootDegree)
    throw Error(ErrorKind::InvalidInput, "root finding limited to degree " + std::to_string(kMaxRootDegree));
  cd lead = a.back();
  for (auto& c : a) c /= lead;

  std::vector<cd> z;
  bool converged = true;
  if (n == 1) z.push_back(-a[0]);
  else if (n > 1) z = aberth(a, tol, converged);
  for (auto& r : z) r = polish(a, r);

  std::vector<cd> all = z;
  std::vector<double> errs;
  for (const auto& r : z) {
    Horner h = horner(a, r);
    double e = h.dp == cd(0) ? std::sqrt(kEps) * (1 + std::abs(r)) : std::abs(h.p / h.dp);
    errs.push_back(e + kEps * std::abs(r));
  }
  for (std::size_t i = 0; i < zeros; ++i) {
    all.push_back(0);
    errs.push_back(0);
  }

  // Single-linkage clustering at sqrt(tol) * scale.
  double scale = 0;
  for (const auto& r : all) scale = std::max(scale, std::abs(r));
  if (scale == 0) scale = 1;
  const double merge = std::sqrt(tol) * scale;
  std::vector<std::size_t> parent(all.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (std::abs(all[i] - all[j]) < merge) parent[find(i)] = find(j);

  struct Cluster {
    cd sum = 0;
    int count = 0;
    double err = 0;
    std::vector<std::size_t> members;
  };
  std::vector<Cluster> clusters(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto& c = clusters[find(i)];
    c.sum += all[i];
    c.count++;
    c.err = std::max(c.err, errs[i]);
    c.members.push_back(i);
  }

  struct Entry {
    ComplexApprox root;
    int mult;
  };
  std::vector<Entry> entries;
  bool well = converged;
  for (auto& c : clusters) {
    if (c.count == 0) continue;
    cd mean = c.sum / static_cast<double>(c.count);
    double err = c.err;
    if (c.count > 1) {
      for (auto m : c.members) err = std::max(err, std::abs(all[m] - mean));
    } else if (err > tol * std::max(1.0, std::abs(mean))) {
      well = false;
    }
    entries.push_back({{mean.real(), mean.imag(), err}, c.count});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.root.re != y.root.re) return x.root.re < y.root.re;
    return x.root.im < y.root.im;
  });
  RootSet out;
  for (const auto& e : entries) {
    out.roots.push_back(e.root);
    out.multiplicity.push_back(e.mult);
  }
  out.well_conditioned = well;
  if (!converged) throw IllConditionedError("root iteration did not converge", out);
  return out;
}

RootSet complex_roots(const UnivariatePoly& f, double tol) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "root finding on the zero polynomial");
  // Exact shift to the root centroid first, so that a tight cluster far from the
  // origin does not look like a multiple root after rounding.
  const int n = f.degree();
  Rational c0 = 0;
  UnivariatePoly g = f;
  if (n >= 2 && f.coeff(n - 1) != 0) {
    c0 = -f.coeff(n - 1) / (n * f.leading());
    g = f.compose(UnivariatePoly({c0, Rational(1)}));
  }
  auto d = to_doubles_scaled(g.coeffs());
  std::vector<cd> c(d.begin(), d.end());
  if (c0 == 0) return complex_roots(std::span<const cd>(c), tol);
  const double shift = c0.get_d();
  auto lift = [shift](RootSet r) {
    for (auto& z : r.roots) {
      z.re += shift;
      z.err += std::numeric_limits<double>::epsilon() * std::abs(shift);
    }
    return r;
  };
  try {
    return lift(complex_roots(std::span<const cd>(c), tol));
  } catch (const IllConditionedError& e) {
    throw IllConditionedError(e.what(), lift(e.partial()));
  }
}

std::optional<std::vector<int>> match_multisets(std::span<const cd> a, std::span<const cd> b, double tol) {
  if (a.size() != b.size()) throw Error(ErrorKind::SizeMismatch, "multisets of different sizes");
  const std::size_t n = a.size();
  // Candidate partners in order of distance; greedy first pick, augmenting paths after.
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(a[i] - b[j]) <= tol) adj[i].push_back(static_cast<int>(j));
    std::sort(adj[i].begin(), adj[i].end(), [&](int x, int y) {
      return std::abs(a[i] - b[static_cast<std::size_t>(x)]) < std::abs(a[i] - b[static_cast<std::size_t>(y)]);
    });
    if (adj[i].empty()) return std::nullopt;
  }
  std::vector<int> match_b(n, -1), match_a(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    int j = adj[i].front();
    if (match_b[static_cast<std::size_t>(j)] < 0) {
      match_b[static_cast<std::size_t>(j)] = static_cast<int>(i);
      match_a[i] = j;
    }
  }
  std::vector<char> seen;
  auto augment = [&](auto&& self, int i) -> bool {
    for (int j : adj[static_cast<std::size_t>(i)]) {
      auto uj = static_cast<std::size_t>(j);
      if (seen[uj]) continue;
      seen[uj] = 1;
      if (match_b[uj] < 0 || self(self, match_b[uj])) {
        match_b[uj] = i;
        match_a[static_cast<std::size_t>(i)] = j;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (match_a[i] >= 0) continue;
    seen.assign(n, 0);
    if (!augment(augment, static_cast<int>(i))) return std::nullopt;
  }
  return match_a;
}

std::optional<std::vector<int>> match_multisets(std::span<const ComplexApprox> a,
                                                std::span<const ComplexApprox> b, double tol) {
  std::vector<cd> x, y;
  for (const auto& v : a) x.push_back(v.value());
  for (const auto& v : b) y.push_back(v.value());
  return match_multisets(std::span<const cd>(x), std::span<const cd>(y), tol);
}

}  // namespace cmod
