#include <gtest/gtest.h>

#include "seqrel/monomials.hpp"

using namespace seqrel;

namespace {
Monomial mono(const char* s) { return parse_monomial(s, 2); }
}  // namespace

TEST(Monomial, ParsePrintAndDivide) {
  Monomial m = mono("x^2*y");
  EXPECT_EQ(m[0], 2u);
  EXPECT_EQ(m[1], 1u);
  EXPECT_EQ(to_string(m), "x^2*y");
  EXPECT_TRUE(divides(mono("x*y"), m));
  EXPECT_FALSE(divides(mono("y^2"), m));
  EXPECT_EQ(quotient(m, mono("x")), mono("x*y"));
  EXPECT_EQ(lcm(mono("x^2"), mono("x*y^3")), mono("x^2*y^3"));
}

TEST(MonomialOrder, DrlAndLex) {
  auto drl = MonomialOrder::drl(2);
  auto lex = MonomialOrder::lex(2);
  EXPECT_TRUE(drl.less(mono("y"), mono("x")));
  EXPECT_TRUE(drl.less(mono("x"), mono("y^2")));
  EXPECT_TRUE(drl.less(mono("y^2"), mono("x*y")));
  EXPECT_TRUE(lex.less(mono("y^5"), mono("x")));
  EXPECT_TRUE(drl.less(mono("x^4*y^3"), mono("x^2*y^6")));
}

TEST(MonomialOrder, ParseRoundTrip) {
  for (const char* s : {"drl(y<x)", "lex(x<y)", "wdeg(1,2; y<x)"}) {
    auto o = MonomialOrder::parse(s, 2);
    EXPECT_EQ(MonomialOrder::parse(o.to_string(), 2).to_string(), o.to_string());
  }
  EXPECT_THROW(MonomialOrder::parse("wdeg", 2), MonomialError);
  EXPECT_THROW(MonomialOrder::parse("drl(z<x)", 2), MonomialError);
}

TEST(MonomialOrder, WeightedTieBreak) {
  auto o = MonomialOrder::parse("wdeg(1,2; y<x)", 2);
  EXPECT_EQ(o.weighted_degree(mono("x^2")), o.weighted_degree(mono("y")));
  EXPECT_TRUE(o.less(mono("y"), mono("x^2")));
  EXPECT_TRUE(o.less(mono("x"), mono("x^2")));
}

TEST(Monomials, EnumerateBelowIsSortedPrefix) {
  auto drl = MonomialOrder::drl(2);
  auto t = enumerate_below(mono("x^2"), drl);
  std::vector<std::string> got;
  for (const auto& m : t) got.push_back(to_string(m));
  EXPECT_EQ(got, (std::vector<std::string>{"1", "y", "x", "y^2", "x*y", "x^2"}));
}

TEST(Monomials, BorderAndStaircase) {
  auto drl = MonomialOrder::drl(2);
  MonomialSet s{mono("1"), mono("y"), mono("x")};
  auto gens = minimal_generators(border(s, drl), drl);
  std::vector<std::string> got;
  for (const auto& m : gens) got.push_back(to_string(m));
  EXPECT_EQ(got, (std::vector<std::string>{"y^2", "x*y", "x^2"}));
  auto st = staircase_of(gens, drl);
  ASSERT_TRUE(st);
  EXPECT_EQ(st->size(), 3u);
  EXPECT_FALSE(staircase_of(MonomialSet{mono("y")}, drl));
}

TEST(Monomials, MinkowskiSum) {
  auto drl = MonomialOrder::drl(2);
  MonomialSet a{mono("1"), mono("x")};
  MonomialSet b{mono("1"), mono("y")};
  EXPECT_EQ(minkowski_sum(a, b, drl).size(), 4u);
}
