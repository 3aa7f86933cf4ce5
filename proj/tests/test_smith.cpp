#include <gtest/gtest.h>

#include "polysnf/algebra/factor.hpp"
#include "polysnf/harness/generators.hpp"
#include "polysnf/smith/automorphic.hpp"
#include "polysnf/smith/decide.hpp"
#include "polysnf/smith/prime_profile.hpp"
#include "polysnf/smith/recognize.hpp"
#include "polysnf/smith/smith.hpp"
#include "test_util.hpp"

using namespace polysnf;
using polysnf::testing::M;
using polysnf::testing::P;

namespace {

const RingPtr Q2 = polysnf::testing::q_ring(2);
const RingPtr Q3 = polysnf::testing::q_ring(3);

std::vector<Polynomial> Ps(const RingPtr& r, std::initializer_list<const char*> texts) {
  std::vector<Polynomial> out;
  for (const char* t : texts) out.push_back(P(r, t));
  return out;
}

void expect_chain(const SmithData& d) {
  ASSERT_EQ(d.divisors.size(), d.gamma + 1);
  EXPECT_TRUE(d.divisors.front().is_one());
  for (std::size_t i = 1; i <= d.gamma; ++i) EXPECT_TRUE(divides(d.divisors[i - 1], d.divisors[i]));
  for (std::size_t i = 1; i < d.gamma; ++i) EXPECT_TRUE(divides(d.invariant_factors[i - 1], d.invariant_factors[i]));
}

harness::GenSpec spec_for(std::uint64_t seed, std::size_t n, std::size_t l) {
  harness::GenSpec s;
  s.seed = seed;
  s.n = n;
  s.l = s.m = l;
  s.elem_steps = 2;
  return s;
}

}  // namespace

TEST(Divisors, Examples) {
  auto a = determinantal_divisors(M(Q2, {{"x1", "x2"}, {"0", "x1"}}));
  EXPECT_EQ(a.divisors, Ps(Q2, {"1", "1", "x1^2"}));
  EXPECT_EQ(a.invariant_factors, Ps(Q2, {"1", "x1^2"}));
  auto b = determinantal_divisors(M(Q2, {{"x1", "0"}, {"0", "x1*x2"}}));
  EXPECT_EQ(b.divisors, Ps(Q2, {"1", "x1", "x1^2*x2"}));
  EXPECT_EQ(b.invariant_factors, Ps(Q2, {"x1", "x1*x2"}));
  auto c = determinantal_divisors(PolyMatrix::identity(Q2, 3));
  EXPECT_EQ(c.divisors, Ps(Q2, {"1", "1", "1", "1"}));
}

TEST(Smith, Examples) {
  EXPECT_EQ(smith_normal_form(M(Q2, {{"x1*x2", "0"}, {"0", "x1"}})).snf, M(Q2, {{"x1", "0"}, {"0", "x1*x2"}}));
  EXPECT_EQ(smith_normal_form(M(Q2, {{"x1", "x2"}, {"0", "x1"}})).snf, M(Q2, {{"1", "0"}, {"0", "x1^2"}}));
  auto z = smith_normal_form(M(Q2, {{"x1", "0", "0"}, {"0", "0", "0"}}));
  EXPECT_EQ(z.gamma, 1U);
  EXPECT_EQ(z.snf, M(Q2, {{"x1", "0", "0"}, {"0", "0", "0"}}));
  auto zero = smith_normal_form(PolyMatrix(Q2, 2, 2));
  EXPECT_EQ(zero.gamma, 0U);
  EXPECT_TRUE(zero.snf.is_zero());
}

TEST(Smith, DeterminantUnit) {
  auto d = smith_normal_form(M(Q2, {{"2*x1", "0"}, {"0", "-3"}}));
  ASSERT_TRUE(d.determinant_unit.has_value());
  EXPECT_EQ(*d.determinant_unit, Rational(-6));
  EXPECT_EQ(d.divisors.back(), P(Q2, "x1"));
}

TEST(ReducedMinors, Examples) {
  PolyMatrix a = M(Q2, {{"x1", "x2"}, {"0", "x1"}});
  auto r1 = reduced_minor_ideal(a, 1);
  EXPECT_EQ(r1.generators, Ps(Q2, {"x1", "x2", "0", "x1"}));
  EXPECT_FALSE(r1.is_unit);
  auto r2 = reduced_minor_ideal(a, 2);
  EXPECT_EQ(r2.generators, Ps(Q2, {"1"}));
  EXPECT_TRUE(r2.is_unit);
  PolyMatrix s = PolyMatrix::diagonal(Q2, 3, 3, Ps(Q2, {"x1", "x1*(x2 - x1)", "x1^2*(x2 - x1)"}));
  for (std::size_t k = 1; k <= 3; ++k) EXPECT_TRUE(reduced_minor_ideal(s, k).is_unit);
  EXPECT_THROW(reduced_minor_ideal(M(Q2, {{"x1", "x2"}, {"x1", "x2"}}), 2), InvalidArgument);
}

TEST(Recognize, Examples) {
  auto form = recognize_determinant_form(P(Q2, "(x1^2 + 1)*(x2 - x1)^2"));
  ASSERT_TRUE(form);
  EXPECT_EQ(form->f1, P(Q2, "x1^2 + 1"));
  ASSERT_EQ(form->factors.size(), 1U);
  EXPECT_EQ(form->factors[0].var, 1U);
  EXPECT_EQ(form->factors[0].f, P(Q2, "x1"));
  EXPECT_EQ(form->factors[0].t, 2U);
  EXPECT_EQ(form->expand(), P(Q2, "(x1^2 + 1)*(x2 - x1)^2"));

  auto cube = recognize_determinant_form(P(Q2, "x1^3"));
  ASSERT_TRUE(cube);
  EXPECT_EQ(cube->f1, P(Q2, "x1^3"));
  EXPECT_TRUE(cube->factors.empty());

  EXPECT_FALSE(recognize_determinant_form(P(Q2, "x2^2 - x1")));
  EXPECT_FALSE(recognize_determinant_form(P(Q2, "x1*x2 + 1")));
  EXPECT_THROW(recognize_determinant_form(Polynomial(Q2)), InvalidArgument);
}

TEST(Recognize, UnitAndThreeVariables) {
  Polynomial d = P(Q3, "-3*(x1 - 1)*(x2 + x1^2)^2*(x3 - x1*x2 + 2)^3");
  auto form = recognize_determinant_form(d);
  ASSERT_TRUE(form);
  EXPECT_EQ(form->unit, Rational(-3));
  EXPECT_EQ(form->f1, P(Q3, "x1 - 1"));
  ASSERT_EQ(form->factors.size(), 2U);
  EXPECT_EQ(form->factors[0].f, P(Q3, "-x1^2"));
  EXPECT_EQ(form->factors[1].f, P(Q3, "x1*x2 - 2"));
  EXPECT_EQ(form->expand(), d);
}

TEST(Recognize, CharacteristicDividesExponent) {
  RingPtr f2 = polysnf::testing::fp_ring(2, 2);
  EXPECT_FALSE(recognize_determinant_form(P(f2, "(x2 + x1)^2")));
  EXPECT_TRUE(recognize_determinant_form(P(f2, "(x2 + x1)^3")));
}

TEST(PrimeProfile, Examples) {
  EXPECT_EQ(snf_wrt_prime(M(Q2, {{"x1", "x2"}, {"0", "x1"}}), P(Q2, "x1")).exponents, (std::vector<unsigned>{0, 2}));
  EXPECT_EQ(snf_wrt_prime(M(Q2, {{"1", "0"}, {"0", "x1*(x2 - x1)"}}), P(Q2, "x1")).exponents,
            (std::vector<unsigned>{0, 1}));
  EXPECT_EQ(snf_wrt_prime(M(Q2, {{"x1", "0"}, {"0", "x1"}}), P(Q2, "x1 + 1")).exponents,
            (std::vector<unsigned>{0, 0}));
  EXPECT_EQ(snf_wrt_prime(M(Q2, {{"x2 - x1", "0"}, {"0", "(x2 - x1)^2"}}), P(Q2, "x2 - x1")).exponents,
            (std::vector<unsigned>{1, 2}));
  EXPECT_THROW(snf_wrt_prime(M(Q2, {{"x1"}}), P(Q2, "x1^2 - 1")), Reducible);
  EXPECT_THROW(snf_wrt_prime(M(Q2, {{"x1"}}), P(Q2, "x2^2 - x1")), InvalidArgument);
}

TEST(Decide, Examples) {
  Verdict neg = decide_equivalence(M(Q2, {{"x1", "x2"}, {"0", "x1"}}));
  EXPECT_EQ(neg.kind, VerdictKind::NotEquivalent);
  EXPECT_EQ(neg.k, 1U);

  harness::SnfRecipe recipe{Ps(Q2, {"1", "x1*(x2 - x1)"})};
  auto inst = harness::gen_equivalent_instance(spec_for(7, 2, 2), recipe);
  Verdict pos = decide_equivalence(inst.f);
  ASSERT_EQ(pos.kind, VerdictKind::Equivalent);
  EXPECT_EQ(pos.smith->snf, M(Q2, {{"1", "0"}, {"0", "x1*x2 - x1^2"}}));

  Verdict out = decide_equivalence(M(Q2, {{"1", "0"}, {"0", "x2^2 - x1"}}));
  EXPECT_EQ(out.kind, VerdictKind::Inconclusive);
  EXPECT_FALSE(out.reason.empty());

  Verdict zero = decide_equivalence(PolyMatrix(Q2, 2, 3));
  EXPECT_EQ(zero.kind, VerdictKind::Equivalent);
  EXPECT_EQ(zero.justification, Justification::ZeroMatrix);
}

TEST(Decide, Justifications) {
  EXPECT_EQ(decide_equivalence(M(Q2, {{"x1^2 + 1", "0"}, {"0", "1"}})).justification, Justification::UnivariateDivisor);
  EXPECT_EQ(decide_equivalence(M(Q2, {{"x2 - x1^2", "0"}, {"0", "x2 - x1^2"}})).justification,
            Justification::SingleLinearPower);
  EXPECT_EQ(decide_equivalence(M(Q2, {{"x1", "0"}, {"0", "x1*(x2 + 1)"}})).justification,
            Justification::TriangularForm);
}

TEST(Decide, WithAutomorphism) {
  PolyMatrix neg = M(Q3, {{"x1", "x2"}, {"0", "x1"}});
  TameAut id = TameAut::identity(Q3);
  EXPECT_EQ(decide_with_automorphism(neg, id).kind, VerdictKind::NotEquivalent);

  TameAut psi = build_frost_storey_psi(Q3, 4, 0, 0);
  Verdict v = decide_with_automorphism(psi.apply(neg), psi);
  EXPECT_EQ(v.kind, VerdictKind::NotEquivalent);
  EXPECT_EQ(v.k, 1U);

  // x3 * x1 is not of triangular form after psi; pulling back restores it.
  harness::SnfRecipe recipe{Ps(Q3, {"1", "x1*(x3 - x1)"})};
  auto inst = harness::gen_equivalent_instance(spec_for(3, 3, 2), recipe);
  PolyMatrix moved = psi.apply(inst.f);
  Verdict w = decide_with_automorphism(moved, psi);
  ASSERT_EQ(w.kind, VerdictKind::Equivalent);
  EXPECT_EQ(w.smith->invariant_factors[1], psi.apply(P(Q3, "x1*(x3 - x1)")).monic());
  EXPECT_EQ(w.smith->snf, smith_normal_form(moved).snf);
}

TEST(SmithProperties, ChainsAndReducedMinorIdentity) {
  harness::Pcg32 rng(41);
  for (int i = 0; i < 120; ++i) {
    auto l = static_cast<std::size_t>(rng.range(1, 3));
    auto m = static_cast<std::size_t>(rng.range(1, 3));
    PolyMatrix a(Q2, l, m);
    for (std::size_t r = 0; r < l; ++r)
      for (std::size_t c = 0; c < m; ++c) a(r, c) = harness::random_poly(Q2, rng, {2, 2, 2}) * P(Q2, i % 2 ? "x1" : "1");
    auto d = smith_normal_form(a);
    expect_chain(d);
    for (std::size_t k = 1; k <= d.gamma; ++k) {
      auto rep = reduced_minor_ideal(a, k);
      EXPECT_EQ(rep.divisor, d.divisors[k]);
      auto minors = all_k_minors(a, k);
      ASSERT_EQ(rep.generators.size(), minors.size());
      for (std::size_t j = 0; j < minors.size(); ++j) ASSERT_EQ(rep.generators[j] * rep.divisor, minors[j]);
      ASSERT_TRUE(reduced_minor_ideal(d.snf, k).is_unit);
    }
  }
}

TEST(SmithProperties, CoprimeMultiplicativity) {
  harness::Pcg32 rng(42);
  const auto left = Ps(Q2, {"x1", "x1 + 1", "x1^2 + 1"});
  const auto right = Ps(Q2, {"x2 - x1", "x2 + x1^2", "x2 + 1"});
  auto chain = [&](const std::vector<Polynomial>& pool, std::size_t size) {
    std::vector<Polynomial> h;
    Polynomial acc = Polynomial::one(Q2);
    for (std::size_t k = 0; k < size; ++k) {
      if (rng.chance(1, 2)) acc = acc * rng.pick(pool);
      h.push_back(acc);
    }
    return h;
  };
  for (int i = 0; i < 100; ++i) {
    auto size = static_cast<std::size_t>(rng.range(2, 3));
    auto ub = harness::random_unimodular(Q2, rng, size, 2, 1).matrix;
    auto vb = harness::random_unimodular(Q2, rng, size, 2, 1).matrix;
    auto uc = harness::random_unimodular(Q2, rng, size, 2, 1).matrix;
    auto vc = harness::random_unimodular(Q2, rng, size, 2, 1).matrix;
    PolyMatrix b = ub * PolyMatrix::diagonal(Q2, size, size, chain(left, size)) * vb;
    PolyMatrix c = uc * PolyMatrix::diagonal(Q2, size, size, chain(right, size)) * vc;
    ASSERT_TRUE(gcd(determinant(b), determinant(c)).is_one());
    auto db = determinantal_divisors(b), dc = determinantal_divisors(c), dbc = determinantal_divisors(b * c);
    for (std::size_t k = 0; k <= size; ++k) ASSERT_EQ(dbc.divisors[k], (db.divisors[k] * dc.divisors[k]).monic());
  }
}

TEST(SmithProperties, PerPrimeConsistency) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto spec = spec_for(seed, 2 + seed % 2, 2 + seed % 2);
    auto inst = harness::gen_equivalent_instance(spec);
    auto data = smith_normal_form(inst.f);
    if (data.gamma != spec.l) continue;
    auto form = recognize_determinant_form(data.divisors.back());
    ASSERT_TRUE(form);
    std::vector<Polynomial> primes;
    if (!form->f1.is_constant())
      for (const auto& [g, m] : factor_univariate(form->f1).factors) primes.push_back(g);
    for (const auto& fac : form->factors) primes.push_back(fac.phi());
    std::vector<Polynomial> products(data.gamma, Polynomial::one(inst.f.ring()));
    for (const auto& p : primes) {
      auto prof = snf_wrt_prime(inst.f, p);
      ASSERT_TRUE(std::is_sorted(prof.exponents.begin(), prof.exponents.end()));
      for (std::size_t i = 0; i < data.gamma; ++i) products[i] = products[i] * p.pow(prof.exponents[i]);
    }
    for (std::size_t i = 0; i < data.gamma; ++i) ASSERT_EQ(products[i].monic(), data.invariant_factors[i]);
  }
}

TEST(SmithProperties, VerdictInvariantUnderEquivalence) {
  harness::Pcg32 rng(44);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    auto spec = spec_for(seed, 2, 2);
    harness::GroundTruthInstance inst =
        seed % 2 ? harness::gen_equivalent_instance(spec) : harness::gen_negative_instance(spec, {});
    Verdict a = decide_equivalence(inst.f);
    auto u = harness::random_unimodular(inst.f.ring(), rng, 2, 2, 1).matrix;
    auto v = harness::random_unimodular(inst.f.ring(), rng, 2, 2, 1).matrix;
    Verdict b = decide_equivalence(u * inst.f * v);
    ASSERT_EQ(a.kind, b.kind);
    ASSERT_EQ(a.k, b.k);
    if (a.kind == VerdictKind::Equivalent) ASSERT_EQ(a.smith->snf, b.smith->snf);
  }
}
