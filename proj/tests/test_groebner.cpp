#include <gtest/gtest.h>

#include <algorithm>

#include "polysnf/groebner/groebner.hpp"
#include "polysnf/harness/oracles.hpp"
#include "polysnf/harness/pcg.hpp"
#include "test_util.hpp"

using namespace polysnf;
using polysnf::testing::P;

namespace {
const RingPtr Q2 = polysnf::testing::q_ring(2);
const RingPtr Q3 = polysnf::testing::q_ring(3);

std::vector<Polynomial> Ps(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(P(r, t));
  return out;
}
}  // namespace

TEST(NormalForm, Examples) {
  EXPECT_TRUE(normal_form(P(Q2, "x1^2"), Ps(Q2, {"x1"})).is_zero());
  EXPECT_EQ(normal_form(P(Q2, "x1 + x2"), Ps(Q2, {"x1"})), P(Q2, "x2"));
  EXPECT_EQ(normal_form(P(Q2, "1"), Ps(Q2, {"x1", "x2"})), P(Q2, "1"));
  EXPECT_THROW(normal_form(P(Q2, "x1"), Ps(Q3, {"x1"})), AmbientMismatch);
}

TEST(GroebnerBasis, Examples) {
  EXPECT_EQ(groebner_basis(Ps(Q2, {"x1", "1 - x1"})), Ps(Q2, {"1"}));
  EXPECT_EQ(groebner_basis(Ps(Q2, {"x1", "x2"})), Ps(Q2, {"x1", "x2"}));
  EXPECT_EQ(groebner_basis(Ps(Q2, {"x1*x2 - 1", "x1^2"})), Ps(Q2, {"1"}));
  EXPECT_THROW(groebner_basis(Ps(Q2, {"0"})), InvalidArgument);
}

TEST(GroebnerBasis, KnownNontrivialBasis) {
  // <x2^2 - x1, x1*x2 - 1>: x1^2 = x1 * x2^2 = x2 mod the second generator
  auto gb = groebner_basis(Ps(Q2, {"x2^2 - x1", "x1*x2 - 1"}));
  std::vector<Polynomial> expected = Ps(Q2, {"x1^2 - x2", "x1*x2 - 1", "x2^2 - x1"});
  std::sort(expected.begin(), expected.end(),
            [](const Polynomial& a, const Polynomial& b) { return grevlex(a.leading_monomial(), b.leading_monomial()) < 0; });
  EXPECT_EQ(gb, expected);
}

TEST(GroebnerBasis, PairCap) {
  GroebnerOptions tiny;
  tiny.pair_cap = 0;
  EXPECT_THROW(groebner_basis(Ps(Q2, {"x1*x2 - 1", "x1^2 + x2"}), tiny), PairLimitExceeded);
}

TEST(Ideal, UnitAndMembershipExamples) {
  EXPECT_TRUE(is_unit_ideal(Ideal(Ps(Q2, {"x1", "1 - x1"}))));
  EXPECT_FALSE(is_unit_ideal(Ideal(Ps(Q2, {"x1", "x2"}))));
  EXPECT_TRUE(is_unit_ideal(Ideal(Ps(Q2, {"x1*x2 - 1", "x1^2"}))));
  EXPECT_TRUE(ideal_membership(P(Q2, "x1^3"), Ideal(Ps(Q2, {"x1"}))));
  EXPECT_FALSE(ideal_membership(P(Q2, "x2"), Ideal(Ps(Q2, {"x1"}))));
  EXPECT_TRUE(ideal_membership(P(Q2, "x1"), Ideal(Ps(Q2, {"x1*x2 - 1", "x1^2"}))));
}

TEST(GroebnerProperties, GeneratorsReduceToZero) {
  harness::Pcg32 rng(11);
  for (int i = 0; i < 150; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 3));
    RingPtr ring = (i % 3 == 0) ? polysnf::testing::fp_ring(5, n) : polysnf::testing::q_ring(n);
    std::vector<Polynomial> gens;
    auto count = rng.range(1, 3);
    for (long k = 0; k < count; ++k) gens.push_back(harness::random_poly(ring, rng, {3, 3, 3}));
    if (std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_zero(); })) continue;
    auto gb = groebner_basis(gens);
    for (const auto& g : gens) ASSERT_TRUE(normal_form(g, gb).is_zero()) << g;
    for (const auto& b : gb) ASSERT_EQ(b.leading_coeff(), 1);
  }
}

TEST(GroebnerProperties, OrderCanonical) {
  harness::Pcg32 rng(12);
  for (int i = 0; i < 60; ++i) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(harness::random_poly(Q3, rng, {3, 2, 3}));
    if (std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_zero(); })) continue;
    auto ref = groebner_basis(gens);
    std::vector<std::size_t> perm{0, 1, 2};
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::vector<Polynomial> g2;
      for (auto k : perm) g2.push_back(gens[k]);
      ASSERT_EQ(groebner_basis(g2), ref);
    }
  }
}

TEST(GroebnerProperties, UnivariateAgreesWithEuclid) {
  harness::Pcg32 rng(13);
  int checked = 0;
  for (int i = 0; checked < 200; ++i) {
    long p = (i % 2) ? 0 : 3;
    RingPtr ring = p ? polysnf::testing::fp_ring(p, 2) : Q2;
    auto f = harness::random_poly(ring, rng, {3, 3, 2, 1});
    auto g = harness::random_poly(ring, rng, {3, 3, 2, 1});
    if (f.is_zero() && g.is_zero()) continue;
    bool expected = harness::oracle::euclid_coprime(harness::oracle::to_uni(f, 0, p), harness::oracle::to_uni(g, 0, p));
    ASSERT_EQ(is_unit_ideal(Ideal({f, g})), expected) << f << " , " << g;
    ++checked;
  }
}

TEST(GroebnerProperties, AgreesWithMacaulayOracle) {
  harness::Pcg32 rng(14);
  int units = 0;
  for (int i = 0; i < 120; ++i) {
    long p = (i % 2) ? 2 : 3;
    RingPtr ring = polysnf::testing::fp_ring(p, 2);
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(harness::random_poly(ring, rng, {3, 2, 2}));
    if (std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) { return g.is_zero(); })) continue;
    bool expected = harness::oracle::macaulay_unit(gens, p, 12);
    units += expected;
    ASSERT_EQ(is_unit_ideal(Ideal(gens)), expected) << gens[0] << " , " << gens[1] << " , " << gens[2];
  }
  EXPECT_GT(units, 5);
  EXPECT_LT(units, 115);
}
