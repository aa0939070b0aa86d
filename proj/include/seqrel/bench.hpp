// Benchmark cells over the rectangle, L-shape and simplex families, and their
// CSV rows.
#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "linalg_oracle.hpp"

namespace seqrel {

struct BenchRecord {
  std::string family;
  std::size_t n = 0;
  unsigned d = 0;
  std::string algorithm;
  std::size_t staircase = 0;
  std::size_t gb = 0;
  std::uint64_t muls = 0;
  std::uint64_t queries = 0;
  double ms = 0;
  std::uint64_t seed = 0;
  std::string detail;  // both divalgo conventions, verbose output only
  bool matches = true;  // output equals the generating basis
};

inline const char* kBenchHeader = "family,n,d,algorithm,staircase,gb,muls,queries,ms,seed";

inline std::string csv_header(bool verbose) { return verbose ? std::string(kBenchHeader) + ",detail" : kBenchHeader; }

inline std::string to_csv(const BenchRecord& r, bool verbose) {
  std::ostringstream o;
  o.precision(3);
  o << std::fixed;
  o << r.family << ',' << r.n << ',' << r.d << ',' << r.algorithm << ',' << r.staircase << ',' << r.gb << ',' << r.muls
    << ',' << r.queries << ',' << r.ms << ',' << r.seed;
  if (verbose) o << ',' << r.detail;
  return o.str();
}

inline BenchRecord parse_csv_row(const std::string& line) {
  std::vector<std::string> f;
  std::stringstream ss(line);
  for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
  if (f.size() != 10 && f.size() != 11) throw std::invalid_argument("bad bench row: " + line);
  BenchRecord r;
  r.family = f[0];
  r.n = std::stoul(f[1]);
  r.d = static_cast<unsigned>(std::stoul(f[2]));
  r.algorithm = f[3];
  r.staircase = std::stoul(f[4]);
  r.gb = std::stoul(f[5]);
  r.muls = std::stoull(f[6]);
  r.queries = std::stoull(f[7]);
  r.ms = std::stod(f[8]);
  r.seed = std::stoull(f[9]);
  if (f.size() == 11) r.detail = f[10];
  return r;
}

/// max(S ∪ lm(G)) of a basis.
template <class F>
Monomial window_bound(const GroebnerBasis<F>& gb) {
  const MonomialOrder& ord = gb.order;
  Monomial a(ord.nvars());
  for (const auto& m : gb.leading_monomials()) a = ord.max(a, m);
  for (const auto& m : gb.staircase) a = ord.max(a, m);
  return a;
}

inline const std::vector<std::string>& bench_algorithms() {
  static const std::vector<std::string> names{"div", "adaptive", "oracle", "adaptive-oracle"};
  return names;
}

/// One benchmark cell. divalgo runs on (a², 1) and on (a, a) and keeps the
/// cheaper run.
inline BenchRecord run_bench_cell(Family family, std::size_t n, unsigned d, const std::string& algorithm,
                                  std::uint64_t seed) {
  PrimeField k(65521);
  MonomialOrder ord = MonomialOrder::drl(n);
  GeneratedTable<PrimeField> gen = family_table(family, n, d, seed, k, ord);
  const Monomial a = window_bound(gen.gb);
  Ring<PrimeField> ring(k, ord);

  BenchRecord rec;
  rec.family = family_name(family);
  rec.n = n;
  rec.d = d;
  rec.algorithm = algorithm;
  rec.seed = seed;
  GroebnerBasis<PrimeField> out;
  auto t0 = std::chrono::steady_clock::now();
  if (algorithm == "div") {
    GuessOptions opt;
    opt.interreduce = false;
    auto square = guess_div(gen.table, k, ord, pow(a, 2), Monomial(n), opt);
    auto both = guess_div(gen.table, k, ord, a, a, opt);
    const auto& best = square.muls <= both.muls ? square : both;
    rec.muls = best.muls;
    rec.queries = best.queries;
    rec.detail = "a2_1:" + std::to_string(square.muls) + "/" + std::to_string(square.queries) + " a_a:" +
                 std::to_string(both.muls) + "/" + std::to_string(both.queries);
    out = interreduce(ring, best.gb.relations);
  } else if (algorithm == "adaptive") {
    auto r = guess_adaptive(gen.table, k, ord);
    rec.muls = r.muls;
    rec.queries = r.queries;
    out = r.gb;
  } else if (algorithm == "oracle") {
    OpCounter c;
    Table<PrimeField> fresh = gen.table.fresh();
    out = interreduce(ring, scalar_fglm(fresh, k, ord, a, &c).relations);
    rec.muls = c.mul_count;
    rec.queries = fresh.query_count();
  } else if (algorithm == "adaptive-oracle") {
    auto r = adaptive_sfglm(gen.table, k, ord);
    rec.muls = r.muls;
    rec.queries = r.queries;
    out = interreduce(ring, r.gb.relations);
  } else {
    throw std::invalid_argument("unknown bench algorithm '" + algorithm + "'");
  }
  rec.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  rec.staircase = out.staircase.size();
  rec.gb = out.relations.size();
  rec.matches = out.relations == gen.gb.relations;
  return rec;
}

}  // namespace seqrel
