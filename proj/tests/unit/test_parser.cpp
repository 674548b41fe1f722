#include <gtest/gtest.h>

#include "cmod/error.hpp"
#include "cmod/parser.hpp"

using namespace cmod;

TEST(Parser, BasicForms) {
  TernaryForm g = parse_form("X^3 + Y^2*Z");
  EXPECT_EQ(g.degree(), 3);
  EXPECT_EQ(g.coeff({3, 0, 0}), 1);
  EXPECT_EQ(g.coeff({0, 2, 1}), 1);
  EXPECT_EQ(parse_form("x^3+y^3+z^3"), parse_form("X^3+Y^3+Z^3"));
  EXPECT_EQ(parse_form("  1/2 * X^2 - 3/4*Y*Z "), parse_form("1/4*(2*X^2 - 3*Y*Z)"));
  EXPECT_EQ(parse_form("(X+Y)^2"), parse_form("X^2+2*X*Y+Y^2"));
  EXPECT_EQ(parse_form("-X^2*-Y"), parse_form("X^2*Y"));
}

TEST(Parser, RoundTripThroughToString) {
  for (const char* s : {"X^3+Y^3+Z^3", "X^4 - 3/7*Y^2*Z^2 + X*Y^3", "-2*X*Y*Z + Z^3"}) {
    TernaryForm g = parse_form(s);
    EXPECT_EQ(parse_form(g.to_string()), g) << s;
  }
}

TEST(Parser, ImplicitMultiplicationRejected) {
  try {
    parse_form("2X^2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 2u);
  }
  EXPECT_THROW(parse_form("X Y"), ParseError);
  EXPECT_THROW(parse_form("XY"), ParseError);
  EXPECT_THROW(parse_form("(X)(Y)"), ParseError);
}

TEST(Parser, Errors) {
  EXPECT_THROW(parse_form(""), ParseError);
  EXPECT_THROW(parse_form("X^"), ParseError);
  EXPECT_THROW(parse_form("X + W"), ParseError);
  EXPECT_THROW(parse_form("(X+Y"), ParseError);
  EXPECT_THROW(parse_form("X/2"), ParseError);
  EXPECT_THROW(parse_form("1/0*X"), ParseError);
}

TEST(Parser, NonHomogeneousNamesDegrees) {
  try {
    parse_form("X^3 + Y^2");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonHomogeneous);
    std::string msg = e.what();
    EXPECT_NE(msg.find('3'), std::string::npos);
    EXPECT_NE(msg.find('2'), std::string::npos);
  }
}

TEST(Parser, Points) {
  Point3 p = parse_point("1,0,0");
  EXPECT_EQ(p[0], 1);
  Point3 q = parse_point("1/2, -3, 2");
  EXPECT_EQ(q[0], Rational(1, 2));
  EXPECT_EQ(q[1], -3);
  EXPECT_THROW(parse_point("1,0"), ParseError);
  EXPECT_THROW(parse_point("0,0,0"), Error);
  EXPECT_THROW(parse_point("X,0,1"), ParseError);
}

TEST(Parser, FamilyEquation) {
  FamilyEquation f = parse_family_equation("z^2 = x^3 + y^2*x + y^3");
  ASSERT_EQ(f.coeffs.size(), 4u);
  EXPECT_EQ(f.coeffs[3], UnivariatePoly({1}));
  EXPECT_EQ(f.coeffs[1], UnivariatePoly({0, 0, 1}));
  EXPECT_EQ(f.coeffs[0], UnivariatePoly({0, 0, 0, 1}));
  EXPECT_THROW(parse_family_equation("z^3 = x^3"), ParseError);
  EXPECT_THROW(parse_family_equation("z^2 = x^3 + z"), ParseError);
  EXPECT_THROW(parse_family_equation("x^3 + y"), ParseError);
}
