#include <gtest/gtest.h>

#include <algorithm>

#include "cmod/parser.hpp"
#include "cmod/singular.hpp"
#include "corpus.hpp"

using namespace cmod;

namespace {

std::vector<SingularType> types(const std::vector<SingularPoint>& pts) {
  std::vector<SingularType> t;
  for (const auto& p : pts) t.push_back(p.type);
  std::sort(t.begin(), t.end());
  return t;
}

double gradient_residual(const TernaryForm& g, const SingularPoint& p) {
  double r = 0;
  for (int i = 0; i < 3; ++i) r = std::max(r, std::abs(g.partial(i).eval(p.approx)));
  return r;
}

}  // namespace

TEST(SingularPoints, Cusp) {
  auto pts = singular_points(parse_form("X^3+Y^2*Z"));
  ASSERT_EQ(pts.size(), 1u);
  ASSERT_TRUE(pts[0].exact);
  EXPECT_EQ(*pts[0].exact, (Point3{0, 0, 1}));
  EXPECT_EQ(pts[0].multiplicity, 2);
  ASSERT_TRUE(pts[0].cone);
  EXPECT_TRUE(proportionality(*pts[0].cone, parse_form("Y^2")));
  EXPECT_EQ(pts[0].type, SingularType::CuspA2);
}

TEST(SingularPoints, TwoTangentConics) {
  auto pts = singular_points(parse_form("X^4-Y^2*Z^2"));
  ASSERT_EQ(pts.size(), 2u);
  std::vector<Point3> where;
  for (const auto& p : pts) {
    ASSERT_TRUE(p.exact);
    where.push_back(*p.exact);
    EXPECT_EQ(p.type, SingularType::TacnodeA3);
  }
  EXPECT_NE(std::find(where.begin(), where.end(), Point3{0, 1, 0}), where.end());
  EXPECT_NE(std::find(where.begin(), where.end(), Point3{0, 0, 1}), where.end());
}

TEST(SingularPoints, SmoothFermat) {
  EXPECT_TRUE(singular_points(parse_form("X^3+Y^3+Z^3")).empty());
  EXPECT_TRUE(singular_points(parse_form("X^4+Y^4+Z^4")).empty());
}

TEST(SingularPoints, TypeExamples) {
  EXPECT_EQ(types(singular_points(parse_form("Y^2*Z-X^2*(X+Z)"))), std::vector<SingularType>{SingularType::Node});
  EXPECT_EQ(types(singular_points(parse_form("X^3+Y^3"))), std::vector<SingularType>{SingularType::OrdinaryTriple});
  EXPECT_EQ(types(singular_points(parse_form("X^4-Y^3*Z"))), std::vector<SingularType>{SingularType::Y3X4});
  EXPECT_EQ(types(singular_points(parse_form("X^4-Y^2*Z*(Y-Z)"))),
            std::vector<SingularType>{SingularType::TacnodeA3});
  // Four concurrent lines: an ordinary quadruple point.
  auto four = singular_points(parse_form("X^4-Y^4"));
  ASSERT_EQ(four.size(), 1u);
  EXPECT_EQ(four[0].multiplicity, 4);
  EXPECT_EQ(four[0].type, SingularType::Other);
  // Conic and a secant line: two nodes.
  EXPECT_EQ(types(singular_points(parse_form("X*(X^2+Y*Z)"))),
            (std::vector<SingularType>{SingularType::Node, SingularType::Node}));
}

TEST(SingularPoints, IrrationalPointsAreNumeric) {
  TernaryForm g = parse_form("X^4-(Y^2-2*Z^2)^2");
  auto pts = singular_points(g);
  ASSERT_EQ(pts.size(), 2u);
  for (const auto& p : pts) {
    EXPECT_FALSE(p.exact);
    EXPECT_EQ(p.type, SingularType::TacnodeA3);
    EXPECT_LE(gradient_residual(g, p), 1e-8);
    EXPECT_NEAR(std::abs(p.approx[2]), 1 / std::sqrt(2.0), 1e-9);
  }
}

TEST(SingularPoints, RejectsNonReduced) {
  try {
    singular_points(parse_form("(X+Y)^2*Z"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonReduced);
  }
}

TEST(TangentContact, Flexes) {
  // The tangent Y = 0 at [0:0:1] meets X^3 - Y Z^2 there with contact 3.
  EXPECT_EQ(tangent_contact(parse_form("X^3-Y*Z^2"), CPoint3{0.0, 0.0, 1.0}), 3);
  EXPECT_EQ(tangent_contact(parse_form("X^4-Y*Z^3"), CPoint3{0.0, 0.0, 1.0}), 4);
  EXPECT_EQ(tangent_contact(parse_form("X^2-Y*Z"), CPoint3{0.0, 0.0, 1.0}), 2);
}

TEST(Properties, ProjectiveInvariance) {
  testkit::Gen g(61);
  const std::vector<std::string> curves = {"X^3+Y^2*Z", "X^4-Y^2*Z^2", "Y^2*Z-X^2*(X+Z)", "X^4-Y^3*Z",
                                           "X^4-Y^2*Z*(Y-Z)", "X*(X^2+Y*Z)", "X^3+Y^3"};
  for (const auto& text : curves) {
    TernaryForm c = parse_form(text);
    auto base = types(singular_points(c));
    for (int i = 0; i < 3; ++i) {
      Matrix3 m{};
      do {
        for (auto& row : m)
          for (auto& x : row) x = Rational(g.integer(-3, 3));
      } while (sgn(det(m)) == 0);
      TernaryForm moved = c.substitute(m);
      auto pts = singular_points(moved);
      EXPECT_EQ(types(pts), base) << text;
      for (const auto& p : pts) EXPECT_LE(gradient_residual(moved, p), 1e-6) << text;
    }
  }
}

TEST(Properties, ExactPointsAreSingular) {
  testkit::Gen g(62);
  for (int i = 0; i < 20; ++i) {
    // Product of a random line and a random conic: nodes where they meet.
    TernaryForm l = TernaryForm::from(
        SparsePoly::constant(g.integer(1, 3)) * SparsePoly::variable(0) +
        SparsePoly::constant(g.integer(-3, 3)) * SparsePoly::variable(1) +
        SparsePoly::constant(g.integer(-3, 3)) * SparsePoly::variable(2));
    TernaryForm q = parse_form("X^2+Y^2-Z^2") + parse_form("X*Y") * Rational(g.integer(-1, 1));
    TernaryForm c = l * q;
    auto pts = singular_points(c);
    for (const auto& p : pts) {
      if (p.exact)
        for (int k = 0; k < 3; ++k) EXPECT_EQ(sgn(c.partial(k)(*p.exact)), 0);
      else
        EXPECT_LE(gradient_residual(c, p), 1e-8);
    }
    // A line meets a smooth conic in one tangent point or two nodes.
    EXPECT_TRUE(pts.size() == 2u || (pts.size() == 1u && pts[0].type == SingularType::TacnodeA3));
  }
}
