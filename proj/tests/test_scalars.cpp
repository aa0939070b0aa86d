#include <gtest/gtest.h>

#include "seqrel/scalars.hpp"

using namespace seqrel;

TEST(PrimeField, ArithmeticAndInverse) {
  PrimeField k(65521);
  auto a = k.from_int(-3);
  EXPECT_EQ(a.v, 65518u);
  EXPECT_TRUE(k.is_one(k.mul(a, k.inv(a))));
  EXPECT_EQ(k.to_string(a), "-3");
  EXPECT_EQ(k.parse("1/2").v, k.inv(k.from_int(2)).v);
  EXPECT_THROW(k.inv(k.zero()), FieldError);
}

TEST(PrimeField, RejectsComposite) { EXPECT_THROW(PrimeField(65520), FieldError); }

TEST(PrimeField, CounterCountsMulDivInv) {
  OpCounter c;
  PrimeField k = PrimeField(101).with_counter(c);
  auto x = k.from_int(7);
  k.add(x, x);
  k.sub(x, x);
  k.mul(x, x);
  k.inv(x);
  k.div(x, x);
  EXPECT_EQ(c.mul_count, 3u);
}

TEST(RationalField, ExactArithmetic) {
  RationalField q;
  auto a = q.parse("-25651/1381");
  EXPECT_EQ(q.to_string(q.mul(a, q.from_int(1381))), "-25651");
  EXPECT_THROW(q.parse("1/0"), FieldError);
}

TEST(FieldSpec, ParseAndMismatch) {
  EXPECT_TRUE(FieldSpec::parse("rational").rational);
  EXPECT_EQ(FieldSpec::parse("fp:7").prime, 7u);
  EXPECT_EQ(FieldSpec::parse("fp:65521").to_string(), "fp:65521");
  EXPECT_THROW(require_same_field(PrimeField(7), PrimeField(11)), FieldError);
}
