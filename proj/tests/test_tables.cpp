#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace seqrel;
using namespace seqrel::testing;

TEST(Builtins, BinomialHankelRow) {
  RationalField q;
  auto t = builtin_table("binomial", q);
  auto drl = MonomialOrder::drl(2);
  auto h = build_multi_hankel(t, MonomialSet{Monomial(2)}, enumerate_below(parse_monomial("x^2*y", 2), drl));
  std::vector<std::string> got;
  for (const auto& v : h.entries[0]) got.push_back(q.to_string(v));
  EXPECT_EQ(got, (std::vector<std::string>{"1", "0", "1", "0", "1", "1", "0", "0", "2"}));
}

TEST(Builtins, FibonacciPrefix) {
  RationalField q;
  auto t = builtin_table("fibonacci", q);
  std::vector<std::string> got;
  for (unsigned i = 0; i < 6; ++i) got.push_back(q.to_string(t.query(Monomial::var(1, 0, i))));
  EXPECT_EQ(got, (std::vector<std::string>{"1", "1", "2", "3", "5", "8"}));
}

TEST(Builtins, PascalVariantClosedForm) {
  RationalField q;
  auto t = builtin_table("pascal-variant", q);
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = 0; j < 5; ++j) {
      long sign = (i + j) % 2 ? -1 : 1;
      long expect = (2 * i + 1) + (2 * long(j) - 1) * sign;
      EXPECT_EQ(t.query(Monomial(2, {i, j})), q.from_int(expect));
    }
}

TEST(Builtins, QueryCountIsDistinctIndices) {
  RationalField q;
  auto t = builtin_table("binomial", q);
  t.query(Monomial(2, {1, 1}));
  t.query(Monomial(2, {1, 1}));
  t.query(Monomial(2, {2, 1}));
  EXPECT_EQ(t.query_count(), 2u);
  EXPECT_EQ(t.fresh().query_count(), 0u);
}

TEST(TableFile, WindowRoundTrip) {
  PrimeField k(65521);
  auto t = builtin_table("pascal-variant", k);
  std::string path = ::testing::TempDir() + "seqrel_window.txt";
  {
    std::ofstream out(path);
    write_table_window(out, t, {4, 4});
  }
  std::ifstream in(path);
  std::size_t lines = 0;
  for (std::string l; std::getline(in, l);) ++lines;
  EXPECT_EQ(lines, 18u);
  auto tf = read_table_file(path);
  auto back = file_table(tf, k);
  for (const auto& m : box(2, 4)) EXPECT_EQ(back.query(m), t.query(m));
  EXPECT_THROW(back.query(Monomial(2, {4, 0})), UnavailableTerm);
  EXPECT_THROW(file_table(tf, RationalField{}), FieldError);
  EXPECT_THROW(file_table(tf, PrimeField(101)), FieldError);
  std::remove(path.c_str());
}

TEST(TableFromGb, MatchesRecurrence) {
  PrimeField k(65521);
  auto gen = random_recurrent_1d(4, 7, k);
  const auto& g = gen.gb.relations[0];
  for (unsigned s = 0; s < 20; ++s) EXPECT_EQ(bracket_mod_p(gen.table, g, Monomial::var(1, 0, s)), 0u);
}

TEST(Families, LeadingMonomialsMatchGeneratingBasis) {
  PrimeField k(65521);
  for (auto fam : {Family::rectangle, Family::lshape, Family::simplex})
    for (std::size_t n : {2u, 3u}) {
      auto ord = MonomialOrder::drl(n);
      auto gen = family_table(fam, n, 4, 42, k, ord);
      EXPECT_EQ(gen.gb.leading_monomials(), family_leading_monomials(fam, n, 4, ord)) << family_name(fam) << n;
      EXPECT_TRUE(annihilates(gen.table, gen.gb.relations, 3));
      EXPECT_EQ(hankel_rank_box(gen.table, n == 2 ? 6 : 4), gen.gb.staircase.size());
    }
}

TEST(Families, SeedReproducible) {
  PrimeField k(65521);
  auto ord = MonomialOrder::drl(2);
  auto a = family_table(Family::simplex, 2, 5, 9, k, ord);
  auto b = family_table(Family::simplex, 2, 5, 9, k, ord);
  EXPECT_EQ(a.gb.relations, b.gb.relations);
}

TEST(TableFromGb, GeometricClosedForm) {
  RationalField q;
  auto drl = MonomialOrder::drl(2);
  Ring<RationalField> ring(q, drl);
  GroebnerBasis<RationalField> gb{{ring.parse("y - 3"), ring.parse("x - 2")}, {Monomial(2)}, drl, true};
  auto t = table_from_gb(q, gb, {{{0, 0}, q.one()}});
  for (unsigned i = 0; i < 6; ++i)
    for (unsigned j = 0; j < 6; ++j) {
      mpz_class want = mpz_class(1) << i;
      for (unsigned r = 0; r < j; ++r) want *= 3;
      EXPECT_EQ(t.query(Monomial(2, {i, j})), mpq_class(want));
      for (const auto& g : gb.relations) EXPECT_EQ(bracket_eval(t, g, Monomial(2, {i, j})), q.zero());
    }
}

TEST(TableFromGb, FibonacciFromRelation) {
  RationalField q;
  auto ord = MonomialOrder::drl(1);
  Ring<RationalField> ring(q, ord);
  GroebnerBasis<RationalField> gb{{ring.parse("x^2 - x - 1")}, {}, ord, true};
  auto t = table_from_gb(q, gb, {{{0}, q.one()}, {{1}, q.one()}});
  EXPECT_EQ(t.query(Monomial::var(1, 0, 10)), q.from_int(89));
}

TEST(MirrorSeries, BinomialWindow) {
  RationalField q;
  auto drl = MonomialOrder::drl(2);
  Ring<RationalField> ring(q, drl);
  auto t = builtin_table("binomial", q);
  auto m = mirror_series(ring, t, enumerate_below(parse_monomial("x^3", 2), drl));
  EXPECT_EQ(ring.to_string(m.p), "x^3*y^3 + x^2*y^3 + x^2*y^2 + x*y^3 + 2*x*y^2 + y^3");
  EXPECT_EQ(m.big, parse_monomial("x^3*y^3", 2));
  EXPECT_EQ(t.query_count(), 10u);
}

TEST(Bracket, PascalRuleVanishes) {
  RationalField q;
  Ring<RationalField> ring(q, MonomialOrder::drl(2));
  auto t = builtin_table("binomial", q);
  for (const auto& s : box(2, 5)) EXPECT_EQ(bracket_eval(t, ring.parse("x*y - y - 1"), s), q.zero());
  EXPECT_NE(bracket_eval(t, ring.parse("x + 5*y - 1"), Monomial(2, {1, 1})), q.zero());
}
