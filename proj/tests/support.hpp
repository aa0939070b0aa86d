// Test-side oracles that do not go through the library's relation finders.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "seqrel/seqrel.hpp"

namespace seqrel::testing {

inline constexpr std::uint64_t kP = 65521;

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  b %= kP;
  while (e) {
    if (e & 1) r = r * b % kP;
    b = b * b % kP;
    e >>= 1;
  }
  return r;
}

/// Rank of a dense matrix mod kP by plain Gaussian elimination.
inline std::size_t rank_mod_p(std::vector<std::vector<std::uint64_t>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    std::uint64_t inv = pow_mod(a[rank][c], kP - 2);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      std::uint64_t f = a[r][c] * inv % kP;
      for (std::size_t k = c; k < cols; ++k) a[r][k] = (a[r][k] + kP * kP - f * a[rank][k]) % kP;
    }
    ++rank;
  }
  return rank;
}

/// All monomials with every exponent below `side`.
inline std::vector<Monomial> box(std::size_t n, unsigned side) {
  std::vector<Monomial> out;
  std::vector<unsigned> e(n, 0);
  while (true) {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, e[i]);
    out.push_back(m);
    std::size_t i = 0;
    while (i < n && ++e[i] == side) e[i++] = 0;
    if (i == n) return out;
  }
}

/// Rank of the Hankel matrix (w_{r+c}) over a box of rows and columns.
inline std::size_t hankel_rank_box(const Table<PrimeField>& t, unsigned side) {
  auto mons = box(t.nvars(), side);
  std::vector<std::vector<std::uint64_t>> h(mons.size(), std::vector<std::uint64_t>(mons.size()));
  for (std::size_t r = 0; r < mons.size(); ++r)
    for (std::size_t c = 0; c < mons.size(); ++c) h[r][c] = t.query(mul(mons[r], mons[c])).v;
  return rank_mod_p(h);
}

/// Σ_k γ_k w_{k+σ}, computed with plain integer arithmetic.
inline std::uint64_t bracket_mod_p(const Table<PrimeField>& t, const Poly<PrimeField>& g, const Monomial& sigma) {
  std::uint64_t acc = 0;
  for (const auto& term : g.terms) acc = (acc + std::uint64_t(term.c.v) * t.query(mul(term.m, sigma)).v) % kP;
  return acc;
}

/// Every relation annihilates the table on all shifts inside the box.
inline bool annihilates(const Table<PrimeField>& t, const std::vector<Poly<PrimeField>>& rels, unsigned side) {
  for (const auto& g : rels)
    for (const auto& s : box(t.nvars(), side))
      if (bracket_mod_p(t, g, s) != 0) return false;
  return true;
}

/// Buchberger criterion: every S-polynomial reduces to zero.
template <class F>
bool is_groebner(const Ring<F>& ring, const std::vector<Poly<F>>& g) {
  const F& k = ring.field();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      Monomial l = lcm(ring.lm(g[i]), ring.lm(g[j]));
      Poly<F> a = ring.term_mul(k.inv(ring.lc(g[i])), quotient(l, ring.lm(g[i])), g[i]);
      Poly<F> b = ring.term_mul(k.inv(ring.lc(g[j])), quotient(l, ring.lm(g[j])), g[j]);
      if (!ring.normal_form_remainder(ring.sub(a, b), g).is_zero()) return false;
    }
  return true;
}

/// Random radical table over F_65521 with n in {2,3} and at most 12 points.
struct RandomCase {
  GeneratedTable<PrimeField> gen;
  MonomialOrder ord;
  std::size_t n;
};

inline RandomCase random_case(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::size_t n = 2 + rng() % 2;
  std::size_t npoints = 1 + rng() % 12;
  MonomialOrder ord = MonomialOrder::drl(n);
  PrimeField k(kP);
  return {random_points_table(n, npoints, seed, k, ord), ord, n};
}

/// Size of 2(S ∪ lm G).
inline std::size_t doubled_support(const GroebnerBasis<PrimeField>& gb) {
  MonomialSet s = gb.staircase;
  for (const auto& m : gb.leading_monomials()) s.push_back(m);
  sort_unique(s, gb.order);
  return minkowski_sum(s, s, gb.order).size();
}

}  // namespace seqrel::testing
