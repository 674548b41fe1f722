#include <gtest/gtest.h>

#include <set>

#include "cmod/classify.hpp"
#include "cmod/parser.hpp"
#include "corpus.hpp"

using namespace cmod;

namespace {

const Point3 kP{1, 0, 0};

ClassificationResult run(const TernaryForm& g) {
  WeierstrassData w = reduce(setup(g, kP));
  return classify(decide(w), w);
}

ClassificationResult run(const std::string& text) { return run(parse_form(text)); }

// Random constant-moduli curve of degree d with the given shape; the root
// pattern of H is forced by building H from chosen linear factors.
TernaryForm shaped(testkit::Gen& g, int d, bool x, int k, const std::vector<int>& pattern) {
  ConstantVerdict v = testkit::random_constant(g, d, x, k);
  BinaryForm h = BinaryForm::constant(1);
  std::set<Rational> used;
  for (int mult : pattern) {
    Rational r;
    do r = g.rational(6, 3);
    while (used.count(r));
    used.insert(r);
    h = h * BinaryForm(1, {1, -r}).pow(static_cast<unsigned>(mult));
  }
  v.H = h.primitive();
  return expand_normal_form(v, d, 0);
}

}  // namespace

TEST(ClassifyD3, Examples) {
  EXPECT_EQ(run("X^3+Y^3+Z^3").id, CaseId::D3SmoothJ0);
  EXPECT_EQ(run("X^3+Y^2*Z").id, CaseId::D3Cuspidal);
  EXPECT_EQ(run("X*(X^2+Y*Z)").id, CaseId::D3ConicLine);
  EXPECT_EQ(run("X^3+Y^3").id, CaseId::D3ConcurrentLines);
  EXPECT_EQ(run("X^3+Y^3+Z^3").description, "C is a smooth elliptic curve with j-invariant 0");
}

TEST(ClassifyD3, FlexesOfTheSmoothAndCuspidalCases) {
  // The simple roots of H on X = 0 are flexes (contact 3).
  for (int c : run("X^3+Y^3+Z^3").evidence.flex_contacts) EXPECT_EQ(c, 3);
  EXPECT_EQ(run("X^3+Y^3+Z^3").evidence.flex_contacts.size(), 3u);
  auto cusp = run("X^3+Y^2*Z").evidence.flex_contacts;
  ASSERT_EQ(cusp.size(), 1u);
  EXPECT_EQ(cusp[0], 3);
}

TEST(ClassifyD3, Errors) {
  WeierstrassData w = reduce(setup(parse_form("X^3+X*Z^2+Y^3"), kP));
  EXPECT_THROW(classify(decide(w), w), Error);
  WeierstrassData w5 = reduce(setup(parse_form("X^5+Y^5+Z^5"), kP));
  try {
    classify(decide(w5), w5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnsupportedDegree);
  }
}

TEST(ClassifyD4, Representatives) {
  EXPECT_EQ(run("X^4-Y^4").id, CaseId::D4ConcurrentLines);
  EXPECT_EQ(run("X^4-Y^2*Z^2").id, CaseId::D4TwoConics);
  EXPECT_EQ(run("X*(X^3+Y^3+Z^3)").id, CaseId::D4CubicLine);
  EXPECT_EQ(run("X^4-Y*Z*(Y+Z)*(Y-Z)").id, CaseId::D4CyclicCover);
  EXPECT_EQ(run("X^4-Y^2*Z*(Y-Z)").id, CaseId::D4Tacnode);
  EXPECT_EQ(run("X^4-Y^3*Z").id, CaseId::D4TriplePoint);
}

TEST(ClassifyD4, Evidence) {
  auto conics = run("X^4-Y^2*Z^2");
  EXPECT_EQ(conics.evidence.singular.size(), 2u);
  auto cubic = run("X*(X^3+Y^3+Z^3)");
  ASSERT_TRUE(cubic.evidence.residual);
  EXPECT_TRUE(cubic.evidence.residual_singular.empty());
  EXPECT_EQ(cubic.evidence.flex_contacts, (std::vector<int>{3, 3, 3}));  // three collinear flexes
  auto cusp_line = run("X*(X^3+Y^2*Z)");
  EXPECT_EQ(cusp_line.id, CaseId::D4CubicLine);
  ASSERT_EQ(cusp_line.evidence.residual_singular.size(), 1u);
  auto tac = run("X^4-Y^2*Z*(Y-Z)");
  EXPECT_EQ(tac.evidence.flex_contacts, (std::vector<int>{4, 4}));  // two 4-flexes
  auto triple = run("X^4-Y^3*Z");
  EXPECT_EQ(triple.evidence.flex_contacts, (std::vector<int>{4}));  // one 4-flex
  EXPECT_TRUE(run("X^4-Y*Z*(Y+Z)*(Y-Z)").evidence.singular.empty());
}

TEST(ClassifyD4, CyclicCoverHasOrderFourAutomorphism) {
  TernaryForm g = parse_form("X^4-Y*Z*(Y+Z)*(Y-Z)");
  ASSERT_EQ(run(g).id, CaseId::D4CyclicCover);
  EXPECT_TRUE(verify_cyclic_automorphism(g, 4));
}

TEST(RationalLines, Examples) {
  EXPECT_EQ(rational_line_factors(parse_form("X*(X^3+Y^3+Z^3)")).size(), 1u);
  EXPECT_EQ(rational_line_factors(parse_form("(X-Y)*(X+2*Y-Z)*Z")).size(), 3u);
  EXPECT_EQ(rational_line_factors(parse_form("X^2+Y^2+Z^2")).size(), 0u);
  EXPECT_EQ(rational_line_factors(parse_form("(Y-3*Z)*(X^2+Y*Z)")).size(), 1u);
}

TEST(Properties, D3Exhaustive) {
  testkit::Gen g(71);
  for (int i = 0; i < 40; ++i) {
    bool x = g.coin();
    TernaryForm c = expand_normal_form(testkit::random_constant(g, 3, x, x ? 2 : 3), 3, 0);
    ClassificationResult r;
    ASSERT_NO_THROW(r = run(c)) << c.to_string();
    EXPECT_NE(r.id, CaseId::Unclassified);
    // Line components over the rationals never exceed what the case allows.
    std::size_t lines = rational_line_factors(c).size();
    if (r.id == CaseId::D3ConicLine) EXPECT_GE(lines, 1u);
    if (r.id == CaseId::D3Cuspidal || r.id == CaseId::D3SmoothJ0) EXPECT_EQ(lines, 0u);
  }
}

TEST(Properties, D4TableMatchesPredicates) {
  testkit::Gen g(72);
  struct Shape {
    bool x;
    int k;
    std::vector<int> pattern;
  };
  const std::vector<Shape> shapes = {{false, 4, {4}},       {false, 4, {1, 1, 1, 1}}, {false, 4, {2, 2}},
                                     {false, 4, {2, 1, 1}}, {false, 4, {3, 1}},       {false, 2, {1, 1}},
                                     {false, 2, {2}},       {true, 3, {1, 1, 1}},     {true, 3, {2, 1}},
                                     {true, 3, {3}},        {false, 1, {1}},          {true, 1, {1}}};
  for (const auto& s : shapes) {
    for (int i = 0; i < 4; ++i) {
      TernaryForm c = shaped(g, 4, s.x, s.k, s.pattern);
      ClassificationResult r = run(c);
      EXPECT_NE(r.id, CaseId::Unclassified) << c.to_string();
      EXPECT_EQ(r.id, r.evidence.table_case) << c.to_string();
      EXPECT_EQ(r.evidence.predicates.size(), 1u) << c.to_string();
    }
  }
}

TEST(Properties, D4ClassificationIsProjectivelyInvariant) {
  testkit::Gen g(73);
  const std::vector<std::string> reps = {"X^4-Y^4", "X^4-Y^2*Z^2", "X*(X^3+Y^3+Z^3)", "X^4-Y*Z*(Y+Z)*(Y-Z)",
                                         "X^4-Y^2*Z*(Y-Z)", "X^4-Y^3*Z"};
  for (const auto& text : reps) {
    TernaryForm c = parse_form(text);
    CaseId want = run(c).id;
    // Moves fixing [1:0:0] keep the base point.
    Matrix3 m = identity3();
    m[0][1] = Rational(g.integer(-3, 3));
    m[0][2] = Rational(g.integer(-3, 3));
    m[1][1] = Rational(g.integer(1, 3));
    m[1][2] = Rational(g.integer(-3, 3));
    m[2][1] = Rational(g.integer(-3, 3));
    m[2][2] = Rational(g.integer(1, 3));
    if (sgn(det(m)) == 0) continue;
    EXPECT_EQ(run(c.substitute(m)).id, want) << text;
  }
}
