#include <gtest/gtest.h>

#include "support.hpp"

using namespace seqrel;
using namespace seqrel::testing;

TEST(KernelBasis, VectorsAnnihilateMatrix) {
  PrimeField k(kP);
  auto drl = MonomialOrder::drl(2);
  auto gen = family_table(Family::simplex, 2, 3, 5, k, drl);
  auto t = enumerate_below(parse_monomial("x^3", 2), drl);
  auto h = build_multi_hankel(gen.table, t, t);
  auto ker = kernel_basis(k, h);
  EXPECT_EQ(ker.size(), t.size() - gen.gb.staircase.size());
  for (const auto& v : ker)
    for (const auto& row : h.entries) {
      std::uint64_t acc = 0;
      for (std::size_t c = 0; c < v.size(); ++c) acc = (acc + std::uint64_t(row[c].v) * v[c].v) % kP;
      EXPECT_EQ(acc, 0u);
    }
}

TEST(KernelBasis, FullRankHasEmptyKernel) {
  RationalField q;
  MultiHankel<RationalField> h{{Monomial(1)}, {Monomial(1)}, {{q.from_int(3)}}};
  EXPECT_TRUE(kernel_basis(q, h).empty());
}

TEST(ScalarFglm, RecoversFamilies) {
  PrimeField k(kP);
  for (auto fam : {Family::rectangle, Family::lshape, Family::simplex}) {
    auto drl = MonomialOrder::drl(2);
    auto gen = family_table(fam, 2, 5, 3, k, drl);
    Ring<PrimeField> ring(k, drl);
    auto out = interreduce(ring, scalar_fglm(gen.table, k, drl, window_bound(gen.gb)).relations);
    EXPECT_EQ(out.relations, gen.gb.relations) << family_name(fam);
  }
}

TEST(AdaptiveOracle, PrimesQueryCount) {
  PrimeField k(kP);
  auto drl = MonomialOrder::drl(3);
  for (unsigned d = 3; d <= 6; ++d) {
    auto t = builtin_table("primes:3:" + std::to_string(d), k);
    auto r = adaptive_sfglm(t, k, drl);
    EXPECT_EQ(r.queries, 2 * (3 + d) - 1) << d;
    EXPECT_EQ(r.gb.staircase.size(), d) << d;
  }
}

TEST(AdaptiveOracle, PrimesRankDropAtSeven) {
  // 2, 3, 5, 7, 11, 13, 17 satisfy w_{i+3} = 2 w_{i+2} + 3 w_{i+1} - 6 w_i
  PrimeField k(kP);
  auto drl = MonomialOrder::drl(3);
  Ring<PrimeField> ring(k, drl);
  for (unsigned d : {7u, 8u}) {
    auto r = adaptive_sfglm(builtin_table("primes:3:" + std::to_string(d), k), k, drl);
    EXPECT_EQ(r.queries, 11u);
    EXPECT_EQ(ring.to_string(interreduce(ring, r.gb.relations).relations.back()), "x^3 - 2*x^2 - 3*x + 6");
  }
}

TEST(AdaptiveOracle, RelationsAnnihilateRandomTables) {
  for (std::uint64_t seed = 100; seed < 110; ++seed) {
    auto rc = random_case(seed);
    PrimeField k(kP);
    auto r = adaptive_sfglm(rc.gen.table, k, rc.ord);
    EXPECT_TRUE(annihilates(rc.gen.table, r.gb.relations, 4)) << seed;
    EXPECT_EQ(r.gb.staircase.size(), rc.gen.gb.staircase.size()) << seed;
  }
}
