#include <gtest/gtest.h>

#include "polysnf/automorphism/tame.hpp"
#include "polysnf/harness/generators.hpp"
#include "test_util.hpp"

using namespace polysnf;
using polysnf::testing::P;

namespace {

const RingPtr Q2 = polysnf::testing::q_ring(2);
const RingPtr Q3 = polysnf::testing::q_ring(3);

using Row = std::vector<Rational>;

Polynomial closed_form_x3(const Rational& a, const Rational& b, const Rational& c) {
  Polynomial x1 = P(Q3, "x1"), x2 = P(Q3, "x2"), x3 = P(Q3, "x3");
  return P(Q3, "-4*x1^2 + x2^2") + x1.scaled(a) + x2.scaled(b) + (Polynomial::constant(Q3, c) + P(Q3, "2*x1 + x2")) * x3;
}

void expect_same_action(const TameAut& a, const TameAut& b) {
  ASSERT_EQ(a.images(), b.images());
}

}  // namespace

TEST(Tame, ApplyExamples) {
  TameAut aff(Q2, {AffineStep{{Row{2, 1}, Row{0, 1}}, Row{0, 0}}});
  EXPECT_EQ(aff.apply(P(Q2, "x1")), P(Q2, "2*x1 + x2"));
  TameAut tri(Q2, {TriangularStep{Row{1, 1}, 0, {Polynomial(Q2), P(Q2, "x1^2")}}});
  EXPECT_EQ(tri.apply(P(Q2, "x2^2")), P(Q2, "x2^2 + 2*x1^2*x2 + x1^4"));
  TameAut psi = build_frost_storey_psi(Q3, 4, 0, 0);
  EXPECT_EQ(psi.apply(P(Q3, "x3")), P(Q3, "-4*x1^2 + x2^2 + 4*x1 + (2*x1 + x2)*x3"));
  EXPECT_THROW(aff.apply(P(Q3, "x1")), AmbientMismatch);
}

TEST(Tame, RejectsInvalidSteps) {
  EXPECT_THROW(TameAut(Q2, {AffineStep{{Row{1, 2}, Row{2, 4}}, Row{0, 0}}}), InvalidAutomorphism);
  EXPECT_THROW(TameAut(Q2, {TriangularStep{Row{0, 1}, 0, {Polynomial(Q2), Polynomial(Q2)}}}), InvalidAutomorphism);
  EXPECT_THROW(TameAut(Q2, {TriangularStep{Row{1, 1}, 0, {Polynomial(Q2), P(Q2, "x2")}}}), InvalidAutomorphism);
  EXPECT_THROW(TameAut(polysnf::testing::fp_ring(5, 2)), InvalidAutomorphism);
}

TEST(Tame, ComposeExamples) {
  TameAut psi = build_frost_storey_psi(Q3, 1, 2, 3);
  expect_same_action(compose(TameAut::identity(Q3), psi), psi);
  // alpha: x -> A x + c, beta: x -> B x + d; alpha(beta(x)) = B A x + B c + d
  TameAut alpha(Q2, {AffineStep{{Row{1, 2}, Row{0, 1}}, Row{1, 0}}});
  TameAut beta(Q2, {AffineStep{{Row{0, 1}, Row{1, 1}}, Row{0, 3}}});
  TameAut expected(Q2, {AffineStep{{Row{0, 1}, Row{1, 3}}, Row{0, 4}}});
  expect_same_action(compose(alpha, beta), expected);
}

TEST(Tame, StepsMatchFrostStoreyDecomposition) {
  TameAut psi = build_frost_storey_psi(Q3, 4, 0, 0);
  ASSERT_EQ(psi.steps().size(), 3U);
  TameAut p1(Q3, {psi.steps()[0]}), p2(Q3, {psi.steps()[1]}), p3(Q3, {psi.steps()[2]});
  expect_same_action(compose(compose(p1, p2), p3), psi);
  expect_same_action(compose(p1, compose(p2, p3)), psi);
  EXPECT_EQ(psi.apply(P(Q3, "x1")), P(Q3, "2*x1 + x2"));
  EXPECT_EQ(psi.apply(P(Q3, "x2")), P(Q3, "2*x2 + x3"));
}

TEST(Tame, InvertExamples) {
  TameAut psi = build_frost_storey_psi(Q3, 4, 0, 0);
  TameAut p1inv = invert(TameAut(Q3, {psi.steps()[0]}));
  EXPECT_EQ(p1inv.images(), (std::vector<Polynomial>{P(Q3, "(2*x1 - x2 + x3)/4"), P(Q3, "(x2 - x3)/2"), P(Q3, "x3")}));
  TameAut tri(Q2, {TriangularStep{Row{1, 1}, 0, {Polynomial(Q2), P(Q2, "x1^2")}}});
  EXPECT_EQ(invert(tri).apply(P(Q2, "x2")), P(Q2, "x2 - x1^2"));
  for (std::size_t i = 0; i < 3; ++i) {
    Polynomial xi = Polynomial::variable(Q3, i);
    EXPECT_EQ(invert(psi).apply(psi.apply(xi)), xi);
    EXPECT_EQ(psi.apply(invert(psi).apply(xi)), xi);
  }
}

TEST(Tame, FrostStoreyDeltaGate) {
  EXPECT_THROW(build_frost_storey_psi(Q3, 0, 0, 0), DeltaZero);
  EXPECT_THROW(build_frost_storey_psi(Q3, 2, 1, 0), DeltaZero);
  EXPECT_THROW(build_frost_storey_psi(Q2, 1, 0, 0), InvalidArgument);
  harness::Pcg32 rng(51);
  int built = 0;
  while (built < 20) {
    Rational a(Integer(rng.range(-5, 5)), Integer(rng.range(1, 3)));
    Rational b(Integer(rng.range(-5, 5)), Integer(rng.range(1, 3)));
    Rational c(Integer(rng.range(-5, 5)), Integer(rng.range(1, 3)));
    a.canonicalize();
    b.canonicalize();
    c.canonicalize();
    if (a - 2 * b + 4 * c == 0) continue;
    TameAut psi = build_frost_storey_psi(Q3, a, b, c);
    ASSERT_EQ(psi.apply(P(Q3, "x3")), closed_form_x3(a, b, c));
    for (std::size_t i = 0; i < 3; ++i) {
      Polynomial xi = Polynomial::variable(Q3, i);
      ASSERT_EQ(psi.apply(invert(psi).apply(xi)), xi);
    }
    ++built;
  }
}

TEST(TameProperties, HomomorphismLaw) {
  harness::Pcg32 rng(52);
  for (int i = 0; i < 200; ++i) {
    TameAut psi = harness::random_tame(Q3, rng, 3);
    auto f = harness::random_poly(Q3, rng, {3, 2, 3});
    auto g = harness::random_poly(Q3, rng, {3, 2, 3});
    ASSERT_EQ(psi.apply(f * g), psi.apply(f) * psi.apply(g));
    ASSERT_EQ(psi.apply(f + g), psi.apply(f) + psi.apply(g));
  }
}

TEST(TameProperties, GroupLaws) {
  harness::Pcg32 rng(53);
  for (int i = 0; i < 60; ++i) {
    TameAut a = harness::random_tame(Q3, rng, 2), b = harness::random_tame(Q3, rng, 2), c = harness::random_tame(Q3, rng, 2);
    expect_same_action(compose(compose(a, b), c), compose(a, compose(b, c)));
    for (std::size_t v = 0; v < 3; ++v) {
      Polynomial x = Polynomial::variable(Q3, v);
      ASSERT_EQ(invert(a).apply(a.apply(x)), x);
      ASSERT_EQ(a.apply(invert(a).apply(x)), x);
      ASSERT_EQ(compose(a, b).apply(x), a.apply(b.apply(x)));
    }
  }
}
