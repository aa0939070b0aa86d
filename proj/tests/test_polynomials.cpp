#include <gtest/gtest.h>

#include "seqrel/polynomials.hpp"

using namespace seqrel;

namespace {
Ring<RationalField> q_ring() { return Ring<RationalField>(RationalField{}, MonomialOrder::drl(2)); }
}  // namespace

TEST(Poly, ParsePrintCanonical) {
  auto r = q_ring();
  auto p = r.parse("y + x^2 - 2*x + 1 + 0*x*y");
  EXPECT_EQ(r.to_string(p), "x^2 - 2*x + y + 1");
  EXPECT_EQ(r.to_string(r.parse("-25651/1381*x^2*y^3")), "-25651/1381*x^2*y^3");
  EXPECT_TRUE(r.is_canonical(p));
}

TEST(Poly, MultiplyAndReduceModB) {
  auto r = q_ring();
  auto p = r.mul(r.parse("x + 1"), r.parse("x - 1"));
  EXPECT_EQ(r.to_string(p), "x^2 - 1");
  auto b = PowerIdeal::above(parse_monomial("x", 2));
  EXPECT_EQ(r.to_string(r.reduce_mod(p, b)), "-1");
}

TEST(Poly, NormalFormWithQuotients) {
  auto r = q_ring();
  auto f = r.parse("x^2*y + x*y^2 + y^2");
  std::vector<Poly<RationalField>> g{r.parse("x*y - 1"), r.parse("y^2 - 1")};
  auto d = r.normal_form(f, g);
  Poly<RationalField> back = d.remainder;
  for (std::size_t i = 0; i < g.size(); ++i) back = r.add(back, r.mul(d.quotients[i], g[i]));
  EXPECT_EQ(back, f);
  EXPECT_EQ(r.to_string(d.remainder), "x + y + 1");
}

TEST(Poly, MakeMonicCountsInverseAndTerms) {
  OpCounter c;
  auto r = q_ring().with_counter(c);
  auto p = r.make_monic(r.parse("2*x + 4*y + 6"));
  EXPECT_EQ(r.to_string(p), "x + 2*y + 3");
  EXPECT_EQ(c.mul_count, 4u);
}
