#include <gtest/gtest.h>

#include <cmath>

#include "cmod/moduli.hpp"
#include "cmod/parser.hpp"
#include "cmod/weierstrass.hpp"
#include "corpus.hpp"

using namespace cmod;
using cd = std::complex<double>;

namespace {
const Point3 kP{1, 0, 0};

std::vector<cd> cube_roots(double c) {
  // Roots of x^3 + c.
  std::vector<cd> out;
  double r = std::cbrt(c);
  for (int j = 0; j < 3; ++j) out.push_back(std::polar(r, M_PI * (2 * j + 1) / 3));
  return out;
}
}  // namespace

TEST(Invariants, SymmetricTriple) {
  std::vector<cd> a{0, 1, 2};
  AffineInvariants inv = invariants(a, 1e-10);
  EXPECT_EQ(inv.j0, 2);
  ASSERT_EQ(inv.values.size(), 1u);
  EXPECT_NEAR(std::abs(inv.values[0]), 0, 1e-14);
  std::vector<Rational> q{0, 1, 2};
  ExactInvariants ex = exact_invariants(q);
  EXPECT_EQ(ex.e[2], -1);
  EXPECT_EQ(ex.e[3], 0);
}

TEST(Invariants, ExactAgainstDirectSymmetricSums) {
  // Centered {0,1,3} is {-4/3, -1/3, 5/3}; sums of products taken directly.
  std::vector<Rational> c{Rational(-4, 3), Rational(-1, 3), Rational(5, 3)};
  Rational e2 = c[0] * c[1] + c[0] * c[2] + c[1] * c[2];
  Rational e3 = c[0] * c[1] * c[2];
  EXPECT_EQ(e2, Rational(-7, 3));
  EXPECT_EQ(e3, Rational(20, 27));
  std::vector<Rational> q{0, 1, 3};
  ExactInvariants ex = exact_invariants(q);
  EXPECT_EQ(ex.e[2], e2);
  EXPECT_EQ(ex.e[3], e3);
  ASSERT_EQ(ex.values.size(), 1u);
  EXPECT_EQ(ex.values[0], e3 * e3 / (e2 * e2 * e2));
  EXPECT_EQ(ex.values[0], Rational(-400, 9261));
  std::vector<cd> a{0, 1, 3};
  EXPECT_NEAR(std::abs(invariants(a, 1e-10).values[0] - (-400.0 / 9261)), 0, 1e-14);
}

TEST(Invariants, CubeRootsAreEquianharmonic) {
  AffineInvariants inv = invariants(cube_roots(5), 1e-10);
  EXPECT_EQ(inv.j0, 3);
  EXPECT_TRUE(inv.values.empty());
  EXPECT_FALSE(inv.degenerate);
}

TEST(Invariants, Degenerate) {
  std::vector<cd> a{2, 2, 2};
  EXPECT_TRUE(invariants(a, 1e-10).degenerate);
}

TEST(SameModuli, Examples) {
  std::vector<cd> a{0, 1, 2}, b{5, 7, 9};
  auto m = same_moduli(a, b, 1e-10);
  ASSERT_TRUE(m);
  EXPECT_NEAR(std::abs(m->a - 2.0), 0, 1e-9);
  EXPECT_NEAR(std::abs(m->b - 5.0), 0, 1e-9);
  std::vector<cd> c{0, 1, 3}, e{0, 1, 4};
  EXPECT_FALSE(same_moduli(c, e, 1e-10));
  auto f = same_moduli(cube_roots(1), cube_roots(8), 1e-10);
  ASSERT_TRUE(f);
  EXPECT_NEAR(std::abs(f->a), 2, 1e-9);
  std::vector<cd> four{0, 1, 2, 3};
  EXPECT_THROW(same_moduli(a, four, 1e-10), Error);
}

TEST(SameModuli, DegenerateOnlyMatchesDegenerate) {
  std::vector<cd> a{1, 1, 1}, b{4, 4, 4}, c{0, 1, 2};
  EXPECT_TRUE(same_moduli(a, b, 1e-10));
  EXPECT_FALSE(same_moduli(a, c, 1e-10));
}

TEST(Oracle, Examples) {
  EXPECT_TRUE(constant_moduli_oracle(setup(parse_form("X^3+Y^3+Z^3"), kP), 12, 1, 1e-8).constant);
  EXPECT_TRUE(constant_moduli_oracle(setup(parse_form("X^3+Y^2*X+Y^3"), kP), 12, 1, 1e-8).constant);
  OracleVerdict v = constant_moduli_oracle(setup(parse_form("X^3+X*Z^2+Y^3"), kP), 12, 1, 1e-8);
  EXPECT_FALSE(v.constant);
  EXPECT_TRUE(v.witness);
  EXPECT_EQ(v.samples_used, 12);
}

TEST(Properties, AffineInvariance) {
  testkit::Gen g(51);
  for (int i = 0; i < 100; ++i) {
    int n = static_cast<int>(g.integer(3, 7));
    std::vector<Rational> pts;
    for (int j = 0; j < n; ++j) pts.push_back(g.rational(20, 5));
    Rational a = g.nonzero_rational(9, 4), b = g.rational(9, 4);
    std::vector<Rational> moved;
    for (const auto& p : pts) moved.push_back(a * p + b);
    ExactInvariants x = exact_invariants(pts), y = exact_invariants(moved);
    EXPECT_EQ(x.j0, y.j0);
    EXPECT_EQ(x.values, y.values);
    std::vector<cd> cp, cm;
    for (const auto& p : pts) cp.emplace_back(p.get_d());
    for (const auto& p : moved) cm.emplace_back(p.get_d());
    AffineInvariants u = invariants(cp, 1e-12), v = invariants(cm, 1e-12);
    if (u.degenerate) continue;
    EXPECT_LE(invariant_distance(u, v), 1e-9);
  }
}

TEST(Properties, EquivalenceRelation) {
  testkit::Gen g(52);
  for (int i = 0; i < 50; ++i) {
    std::vector<cd> a;
    for (int j = 0; j < 4; ++j) a.emplace_back(g.rational(20, 3).get_d(), g.rational(20, 3).get_d());
    cd s(g.rational(5, 2).get_d(), 1.0), t(g.rational(5, 2).get_d(), -0.5);
    std::vector<cd> b, c;
    for (const auto& z : a) b.push_back(s * z + 1.0);
    for (const auto& z : b) c.push_back(t * z - 2.0);
    std::reverse(c.begin(), c.end());
    EXPECT_TRUE(same_moduli(a, a, 1e-10));
    EXPECT_TRUE(same_moduli(a, b, 1e-10));
    EXPECT_TRUE(same_moduli(b, a, 1e-10));
    EXPECT_TRUE(same_moduli(b, c, 1e-10));
    EXPECT_TRUE(same_moduli(a, c, 3e-10));
  }
}

TEST(Properties, CubicCrossCheckWithI3) {
  testkit::Gen g(53);
  int agree = 0;
  for (int i = 0; i < 100; ++i) {
    std::vector<cd> a, b;
    for (int j = 0; j < 3; ++j) {
      a.emplace_back(static_cast<double>(g.integer(-4, 4)), static_cast<double>(g.integer(-4, 4)));
      b.emplace_back(static_cast<double>(g.integer(-4, 4)), static_cast<double>(g.integer(-4, 4)));
    }
    if (i % 2 == 0) b = {a[1] * 2.0 + 1.0, a[2] * 2.0 + 1.0, a[0] * 2.0 + 1.0};
    AffineInvariants u = invariants(a, 1e-10), v = invariants(b, 1e-10);
    if (u.degenerate || v.degenerate || u.j0 != 2 || v.j0 != 2) continue;
    bool by_i3 = std::abs(u.values[0] - v.values[0]) <= 1e-9 * (1 + std::abs(u.values[0]));
    EXPECT_EQ(by_i3, same_moduli(a, b, 1e-10).has_value());
    ++agree;
  }
  EXPECT_GT(agree, 40);
}

TEST(Properties, OracleAgreesWithDecideOnSmallCorpus) {
  for (const auto& c : testkit::positives(54, 15)) {
    PencilSetup s = setup(c.curve, kP);
    EXPECT_TRUE(constant_moduli_oracle(s, 12, 7, 1e-8).constant) << c.label;
  }
  for (const auto& c : testkit::negatives(55, 15)) {
    PencilSetup s = setup(c.curve, kP);
    EXPECT_FALSE(decide(reduce(s)).constant) << c.label;
    EXPECT_FALSE(constant_moduli_oracle(s, 12, 7, 1e-8).constant) << c.label;
  }
}
