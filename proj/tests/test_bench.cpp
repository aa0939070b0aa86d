#include <gtest/gtest.h>

#include "seqrel/bench.hpp"

using namespace seqrel;

TEST(Bench, CsvRoundTrip) {
  BenchRecord r{"simplex", 2, 5, "div", 15, 6, 9268, 66, 5.168, 42, "a2_1:9268/66 a_a:9268/66", true};
  EXPECT_EQ(csv_header(false), "family,n,d,algorithm,staircase,gb,muls,queries,ms,seed");
  for (bool verbose : {false, true}) {
    auto back = parse_csv_row(to_csv(r, verbose));
    EXPECT_EQ(to_csv(back, verbose), to_csv(r, verbose));
  }
  EXPECT_THROW(parse_csv_row("a,b"), std::invalid_argument);
}

TEST(Bench, CellsAreReproducibleAndCorrect) {
  for (const auto& alg : bench_algorithms()) {
    auto a = run_bench_cell(Family::lshape, 2, 4, alg, 11);
    auto b = run_bench_cell(Family::lshape, 2, 4, alg, 11);
    EXPECT_EQ(a.muls, b.muls) << alg;
    EXPECT_EQ(a.queries, b.queries) << alg;
    EXPECT_TRUE(a.matches) << alg;
  }
}

TEST(Bench, ThreeDimensionalCells) {
  for (auto fam : {Family::rectangle, Family::lshape, Family::simplex}) {
    auto r = run_bench_cell(fam, 3, 4, "div", 42);
    EXPECT_TRUE(r.matches) << family_name(fam);
  }
}
