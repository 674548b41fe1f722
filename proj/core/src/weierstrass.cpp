#include "cmod/weierstrass.hpp"

#include <map>
#include <numeric>

#include "cmod/error.hpp"

namespace cmod {

namespace {

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// Prime-power decomposition by trial division; a cofactor without small prime
// factors is kept as a single base, which still yields a valid (if not always
// minimal) scaling.
std::map<Integer, int> factor(Integer n) {
  std::map<Integer, int> out;
  for (unsigned long p = 2; p < 100000 && n > 1; ++p) {
    if (p * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      out[Integer(p)]++;
    }
  }
  if (n > 1) out[n]++;
  return out;
}

BinaryForm z_power(int e) { return BinaryForm::monomial(1, 0, e); }

}  // namespace

TernaryForm WeierstrassData::form() const {
  std::vector<BinaryForm> coeffs(static_cast<std::size_t>(d) + 1);
  for (int h = 0; h <= d; ++h) coeffs[static_cast<std::size_t>(d - h)] = F[static_cast<std::size_t>(h)];
  return TernaryForm::from_x_coefficients(d + m, coeffs);
}

WeierstrassData reduce(const PencilSetup& s) {
  const int d = s.d;
  WeierstrassData w;
  w.d = d;
  w.stripped = s.stripped;
  w.reduced = s.reduced;
  w.change.linear = s.to_standard;
  const UnivariatePoly& lead = s.affine.coeff(d);
  w.change.lead = lead;

  std::vector<UnivariatePoly> g(static_cast<std::size_t>(d) + 1);
  if (lead.degree() > 0) {
    w.change.lead_scaled = true;
    UnivariatePoly pw = UnivariatePoly::constant(1);
    for (int k = d - 1; k >= 0; --k) {
      g[static_cast<std::size_t>(k)] = s.affine.coeff(k) * pw;
      pw *= lead;
    }
    g[static_cast<std::size_t>(d)] = UnivariatePoly::constant(1);
  } else {
    Rational inv = 1 / lead.coeff(0);
    for (int k = 0; k <= d; ++k) g[static_cast<std::size_t>(k)] = s.affine.coeff(k) * inv;
  }

  // x -> x - shift removes the x^(d-1) term.
  UnivariatePoly shift = g[static_cast<std::size_t>(d - 1)] * Rational(1, d);
  w.change.shift = shift;
  std::vector<UnivariatePoly> minus_pow{UnivariatePoly::constant(1)};
  for (int i = 1; i <= d; ++i) minus_pow.push_back(minus_pow.back() * -shift);
  std::vector<UnivariatePoly> c(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j)
    for (int k = j; k <= d; ++k) {
      const auto& gk = g[static_cast<std::size_t>(k)];
      if (gk.is_zero()) continue;
      c[static_cast<std::size_t>(j)] +=
          gk * minus_pow[static_cast<std::size_t>(k - j)] * Rational(binomial(static_cast<unsigned long>(k),
                                                                               static_cast<unsigned long>(j)));
    }
  c[static_cast<std::size_t>(d - 1)] = UnivariatePoly();

  // Rehomogenize at the least total degree; this drops any Z = 0 component.
  int total = d;
  for (int k = 0; k <= d; ++k)
    if (!c[static_cast<std::size_t>(k)].is_zero()) total = std::max(total, c[static_cast<std::size_t>(k)].degree() + k);
  w.m = total - d;
  w.F.resize(static_cast<std::size_t>(d) + 1);
  for (int h = 0; h <= d; ++h) w.F[static_cast<std::size_t>(h)] = BinaryForm::homogenize(c[static_cast<std::size_t>(d - h)], w.m + h);

  // Least integer c with c^h F[h] integral for every h.
  std::map<Integer, int> need;
  for (int h = 2; h <= d; ++h) {
    Integer den = lcm_of_denominators(w.F[static_cast<std::size_t>(h)].coeffs());
    if (den == 1) continue;
    for (const auto& [p, e] : factor(den)) need[p] = std::max(need[p], (e + h - 1) / h);
  }
  Integer scale = 1;
  for (const auto& [p, e] : need) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    scale *= pe;
  }
  w.change.x_scale = scale;
  if (scale != 1) {
    Integer ph = scale;
    for (int h = 1; h <= d; ++h) {
      w.F[static_cast<std::size_t>(h)] *= Rational(ph);
      ph *= scale;
    }
  }
  return w;
}

ModuliVerdict decide(const WeierstrassData& w) {
  const int d = w.d, m = w.m;
  ModuliVerdict out;
  out.d = d;
  out.m = m;
  const auto& F = w.F;
  const bool x_factor = F[static_cast<std::size_t>(d)].is_zero();
  const int de = x_factor ? d - 1 : d;
  if (x_factor && F[static_cast<std::size_t>(d - 1)].is_zero())
    throw Error(ErrorKind::NonReduced, "X^2 divides the curve; it is not reduced");
  std::vector<int> S;
  for (int h = 2; h <= de; ++h)
    if (!F[static_cast<std::size_t>(h)].is_zero()) S.push_back(h);
  if (S.empty()) throw Error(ErrorKind::NonReduced, "every F vanishes; the curve is a multiple line");

  int k = 0;
  for (int h : S) k = std::gcd(k, h);
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t b = a + 1; b < S.size(); ++b) {
      int h = S[a], j = S[b];
      BinaryForm lhs = F[static_cast<std::size_t>(h)].pow(static_cast<unsigned>(j));
      BinaryForm rhs = z_power(m * (j - h)) * F[static_cast<std::size_t>(j)].pow(static_cast<unsigned>(h));
      if (!proportionality(lhs, rhs)) {
        out.constant = false;
        out.witness = {h, j};
        return out;
      }
    }

  ConstantVerdict& v = out.c;
  out.constant = true;
  v.k = k;
  v.has_x_factor = x_factor;
  const int h0 = S.front();
  const BinaryForm& p0 = F[static_cast<std::size_t>(h0)];
  BinaryForm core = exact_divide(p0, z_power(p0.z_valuation()));
  auto pp = perfect_power(core, h0 / k);
  if (!pp) throw Error(ErrorKind::Internal, "pairwise test passed but no common base form exists");
  BinaryForm H = pp->base;
  v.paper_exponents = false;
  if ((k * (de + m)) % de == 0) {
    int extra = k * (de + m) / de - H.degree();
    if (extra >= 0) {
      H = H * z_power(extra);
      v.paper_exponents = true;
    }
  }
  v.H = H.primitive();
  const int D = de / k;
  v.lambdas.assign(static_cast<std::size_t>(D) + 1, Rational(0));
  v.z_exponents.assign(static_cast<std::size_t>(D) + 1, 0);
  BinaryForm Ht = BinaryForm::constant(1);
  for (int t = 0; t <= D; ++t) {
    const int e = m + t * (k - v.H.degree());
    if (e < 0) throw Error(ErrorKind::Internal, "negative Z exponent in the normal form");
    v.z_exponents[static_cast<std::size_t>(t)] = e;
    if (t == 0) {
      v.lambdas[0] = 1;
    } else if (!F[static_cast<std::size_t>(k * t)].is_zero()) {
      auto c = proportionality(F[static_cast<std::size_t>(k * t)], z_power(e) * Ht);
      if (!c) throw Error(ErrorKind::Internal, "F is not a multiple of a power of H");
      v.lambdas[static_cast<std::size_t>(t)] = *c;
    }
    Ht = Ht * v.H;
  }
  std::vector<Rational> comp(static_cast<std::size_t>(D) + 1);
  for (int t = 0; t <= D; ++t) comp[static_cast<std::size_t>(D - t)] = v.lambdas[static_cast<std::size_t>(t)];
  v.companion = UnivariatePoly(std::move(comp));
  if (!(expand_normal_form(v, d, m) == w.form()))
    throw Error(ErrorKind::Internal, "the normal form does not reproduce the curve");
  return out;
}

TernaryForm expand_normal_form(const ConstantVerdict& v, int d, int m) {
  const int de = v.has_x_factor ? d - 1 : d;
  const int D = static_cast<int>(v.lambdas.size()) - 1;
  if (v.k <= 0 || D * v.k != de)
    throw Error(ErrorKind::InvalidInput, "k = " + std::to_string(v.k) + " does not match d = " + std::to_string(d));
  std::vector<BinaryForm> coeffs(static_cast<std::size_t>(de) + 1);
  BinaryForm Ht = BinaryForm::constant(1);
  for (int t = 0; t <= D; ++t) {
    int e = v.z_exponents.empty() ? m * (de - t * v.k) / de : v.z_exponents[static_cast<std::size_t>(t)];
    if (v.z_exponents.empty() && (m * (de - t * v.k)) % de != 0)
      throw Error(ErrorKind::NonRepresentable, "fractional Z exponent in the product form");
    BinaryForm term = z_power(e) * Ht * v.lambdas[static_cast<std::size_t>(t)];
    if (term.degree() != m + v.k * t)
      throw Error(ErrorKind::NonRepresentable, "H has the wrong degree for the requested (d, m)");
    coeffs[static_cast<std::size_t>(de - v.k * t)] = term;
    Ht = Ht * v.H;
  }
  TernaryForm g = TernaryForm::from_x_coefficients(de + m, coeffs);
  if (v.has_x_factor) g = g * TernaryForm::monomial(1, 1, 0, 0);
  return g;
}

bool verify_automorphism(const TernaryForm& g, const Matrix3& m) {
  if (sgn(det(m)) == 0) throw Error(ErrorKind::InvalidInput, "the matrix is singular");
  return proportionality(g.substitute(m), g).has_value();
}

bool verify_cyclic_automorphism(const TernaryForm& g, int k) {
  if (k <= 0) throw Error(ErrorKind::InvalidInput, "cyclic order must be positive");
  const int d = g.x_degree();
  for (const auto& [e, c] : g.terms())
    if ((d - e[0]) % k != 0) return false;
  return true;
}

RootSet companion_roots(const ConstantVerdict& v, double tol) {
  if (v.companion.degree() <= 0) return {};
  return complex_roots(v.companion, tol);
}

}  // namespace cmod
