#include <gtest/gtest.h>

#include "polysnf/harness/oracles.hpp"
#include "polysnf/harness/pcg.hpp"
#include "polysnf/polymatrix/minors.hpp"
#include "polysnf/polymatrix/quotient.hpp"
#include "test_util.hpp"

using namespace polysnf;
using polysnf::testing::M;
using polysnf::testing::P;

namespace {

const RingPtr Q2 = polysnf::testing::q_ring(2);
const RingPtr Q3 = polysnf::testing::q_ring(3);

PolyMatrix random_matrix(const RingPtr& ring, harness::Pcg32& rng, std::size_t r, std::size_t c,
                         const harness::PolySpec& spec) {
  PolyMatrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng.chance(3, 4)) m(i, j) = harness::random_poly(ring, rng, spec);
  return m;
}

Polynomial oracle_minor(const PolyMatrix& a, const IndexSet& rows, const IndexSet& cols) {
  std::vector<std::vector<Polynomial>> sub;
  for (auto i : rows) {
    sub.emplace_back();
    for (auto j : cols) sub.back().push_back(a(i, j));
  }
  return harness::oracle::leibniz_det(sub, a.ring());
}

}  // namespace

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(M(Q2, {{"x1", "x2"}, {"0", "x1"}})), P(Q2, "x1^2"));
  EXPECT_TRUE(determinant(PolyMatrix::identity(Q2, 3)).is_one());
  EXPECT_TRUE(determinant(M(Q2, {{"1", "x2"}, {"x1", "1 + x1*x2"}})).is_one());
  EXPECT_THROW(determinant(PolyMatrix(Q2, 2, 3)), InvalidArgument);
}

TEST(Determinant, BareissMatchesLeibnizOnLargerMatrices) {
  harness::Pcg32 rng(21);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.range(4, 5));
    PolyMatrix a = random_matrix(Q3, rng, n, n, {2, 2, 2});
    IndexSet all(n);
    for (std::size_t k = 0; k < n; ++k) all[k] = k;
    ASSERT_EQ(determinant(a), oracle_minor(a, all, all));
  }
}

TEST(Minors, Examples) {
  PolyMatrix a = M(Q2, {{"x1", "x2"}, {"0", "x1"}});
  std::vector<Polynomial> k1{P(Q2, "x1"), P(Q2, "x2"), P(Q2, "0"), P(Q2, "x1")};
  EXPECT_EQ(all_k_minors(a, 1), k1);
  EXPECT_EQ(all_k_minors(a, 2), std::vector<Polynomial>{P(Q2, "x1^2")});
  harness::Pcg32 rng(1);
  EXPECT_EQ(all_k_minors(random_matrix(Q2, rng, 3, 3, {}), 2).size(), 9U);
  EXPECT_THROW(all_k_minors(a, 0), InvalidArgument);
  EXPECT_THROW(all_k_minors(a, 3), InvalidArgument);
  MinorOptions cap;
  cap.dimension_cap = 1;
  EXPECT_THROW(all_k_minors(a, 1, cap), SizeCapExceeded);
}

TEST(Minors, OrderingIsLexicographic) {
  PolyMatrix a = M(Q2, {{"1", "2", "3"}, {"4", "5", "6"}});
  // (rows {0,1}) x (cols {0,1}, {0,2}, {1,2})
  std::vector<Polynomial> expected{P(Q2, "-3"), P(Q2, "-6"), P(Q2, "-3")};
  EXPECT_EQ(all_k_minors(a, 2), expected);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(M(Q2, {{"x1", "x2"}, {"0", "x1"}})), 2U);
  EXPECT_EQ(rank(M(Q2, {{"x1", "x2"}, {"x1", "x2"}})), 1U);
  EXPECT_EQ(rank(PolyMatrix(Q2, 2, 3)), 0U);
  EXPECT_EQ(rank(M(Q2, {{"x1", "x2", "1"}, {"x1^2", "x1*x2", "x1"}, {"0", "1", "x2"}})), 2U);
}

TEST(Unimodular, Examples) {
  EXPECT_TRUE(is_unimodular(M(Q2, {{"1", "x2"}, {"x1", "1 + x1*x2"}})));
  EXPECT_FALSE(is_unimodular(M(Q2, {{"x1", "0"}, {"0", "1"}})));
  EXPECT_TRUE(is_unimodular(M(Q3, {{"1", "0", "x1*x3 - x2^2"}, {"0", "1", "0"}, {"0", "0", "1"}})));
  EXPECT_THROW(is_unimodular(PolyMatrix(Q2, 1, 2)), InvalidArgument);
}

TEST(Quotient, MapExamples) {
  auto r1 = map_mod_irreducible(M(Q2, {{"x1*x2 + x2 + 1"}}), P(Q2, "x1"));
  EXPECT_EQ(r1.entries(0, 0), P(Q2, "x2 + 1"));
  auto r2 = map_mod_irreducible(M(Q2, {{"x1^2*x2"}}), P(Q2, "x1^2 + 1"));
  EXPECT_EQ(r2.entries(0, 0), P(Q2, "-x2"));
  EXPECT_THROW(map_mod_irreducible(M(Q2, {{"x1"}}), P(Q2, "x1^2 - 1")), Reducible);
  EXPECT_THROW(map_mod_irreducible(M(Q2, {{"x1"}}), P(Q2, "x2 - x1")), InvalidArgument);
}

TEST(Quotient, RankExamples) {
  EXPECT_EQ(rank_mod_irreducible(M(Q2, {{"x1", "0"}, {"0", "1"}}), P(Q2, "x1")), 1U);
  EXPECT_EQ(rank_mod_irreducible(M(Q2, {{"x1", "x2"}, {"0", "x1"}}), P(Q2, "x1")), 1U);
  EXPECT_EQ(rank_mod_irreducible(PolyMatrix::identity(Q2, 3), P(Q2, "x1^2 + 1")), 3U);
  // x1^2 + 1 divides det = (x1^2 + 1) * x2 over Q
  EXPECT_EQ(rank_mod_irreducible(M(Q2, {{"x1^2 + 1", "x2"}, {"0", "x2"}}), P(Q2, "x1^2 + 1")), 1U);
  RingPtr f5 = polysnf::testing::fp_ring(5, 2);
  EXPECT_EQ(rank_mod_irreducible(M(f5, {{"x1 + 2", "x2"}, {"x1*x2", "x1 + x2^2"}}), P(f5, "x1 + 2")), 2U);
}

TEST(Substitution, RankExamples) {
  Polynomial f2 = P(Q2, "x1^2 + 3");
  PolyMatrix d1 = PolyMatrix::diagonal(Q2, 2, 2, {P(Q2, "1"), P(Q2, "x2") - f2});
  EXPECT_EQ(rank_after_substitution(d1, 1, f2), 1U);
  PolyMatrix d2 = PolyMatrix::diagonal(Q2, 2, 2, {P(Q2, "x2") - f2, P(Q2, "x2") - f2});
  EXPECT_EQ(rank_after_substitution(d2, 1, f2), 0U);
  EXPECT_EQ(rank_after_substitution(PolyMatrix::identity(Q2, 2), 1, f2), 2U);
  EXPECT_THROW(rank_after_substitution(d1, 1, P(Q2, "x2")), InvalidArgument);
  EXPECT_THROW(rank_after_substitution(d1, 0, P(Q2, "1")), InvalidArgument);
}

TEST(Primeness, Examples) {
  EXPECT_TRUE(is_zlp(M(Q2, {{"x1", "1 - x1"}})));
  EXPECT_FALSE(is_zlp(M(Q2, {{"x1", "x2"}})));
  EXPECT_TRUE(is_zlp(M(Q2, {{"1", "0", "x1*x2"}, {"0", "1", "x2^3 - 2"}})));
  EXPECT_TRUE(is_zrp(M(Q2, {{"x1"}, {"1 - x1"}})));
  EXPECT_THROW(is_zlp(M(Q2, {{"x1", "x2"}, {"1", "0"}})), InvalidArgument);
  EXPECT_THROW(is_zlp(M(Q2, {{"x1", "x2", "1"}, {"x1", "x2", "1"}})), InvalidArgument);
}

TEST(PolyMatrixProperties, CauchyBinet) {
  harness::Pcg32 rng(31);
  for (int i = 0; i < 500; ++i) {
    const RingPtr& ring = (i % 2) ? Q2 : Q3;
    auto l = static_cast<std::size_t>(rng.range(1, 4));
    auto k = static_cast<std::size_t>(rng.range(1, 4));
    auto m = static_cast<std::size_t>(rng.range(1, 4));
    PolyMatrix b = random_matrix(ring, rng, l, k, {2, 2, 2});
    PolyMatrix c = random_matrix(ring, rng, k, m, {2, 2, 2});
    PolyMatrix a = b * c;
    for (std::size_t r = 1; r <= std::min(l, m); ++r) {
      auto minors = all_k_minors(a, r);
      std::size_t idx = 0;
      for (const auto& rows : combinations(l, r))
        for (const auto& cols : combinations(m, r)) {
          Polynomial sum(ring);
          for (const auto& mid : combinations(k, r)) sum += oracle_minor(b, rows, mid) * oracle_minor(c, mid, cols);
          ASSERT_EQ(minors[idx++], sum) << "case " << i << " r=" << r;
        }
    }
  }
}

TEST(PolyMatrixProperties, DeterminantIsMultiplicative) {
  harness::Pcg32 rng(32);
  for (int i = 0; i < 200; ++i) {
    auto n = static_cast<std::size_t>(rng.range(1, 4));
    PolyMatrix a = random_matrix(Q3, rng, n, n, {2, 2, 2});
    PolyMatrix b = random_matrix(Q3, rng, n, n, {2, 2, 2});
    ASSERT_EQ(determinant(a * b), determinant(a) * determinant(b));
  }
}

TEST(PolyMatrixProperties, RankModBounds) {
  harness::Pcg32 rng(33);
  const std::vector<Polynomial> primes{P(Q2, "x1"), P(Q2, "x1 + 1"), P(Q2, "x1^2 + 1"), P(Q2, "x1^2 - 2")};
  for (int i = 0; i < 150; ++i) {
    auto n = static_cast<std::size_t>(rng.range(1, 3));
    PolyMatrix a = random_matrix(Q2, rng, n, n, {2, 2, 2});
    const Polynomial& p = rng.pick(primes);
    if (rng.chance(1, 2)) {
      for (std::size_t j = 0; j < n; ++j) a(0, j) = a(0, j) * p;
    }
    std::size_t r = rank(a);
    std::size_t rp = rank_mod_irreducible(a, p);
    ASSERT_LE(rp, r);
    if (r == n && divides(p, determinant(a))) ASSERT_LT(rp, n);
  }
}
