// Dense multi-Hankel matrices and the linear-algebra relation finders used to
// cross-check the division-based guessers.
#pragma once

#include <optional>
#include <vector>

#include "guessers.hpp"

namespace seqrel {

template <class F>
struct MultiHankel {
  MonomialSet rows, cols;
  std::vector<std::vector<typename F::value_type>> entries;  // entries[r][c] = w_{rows[r]·cols[c]}
};

template <class F>
MultiHankel<F> build_multi_hankel(const Table<F>& t, const MonomialSet& rows, const MonomialSet& cols) {
  MultiHankel<F> h{rows, cols, {}};
  h.entries.resize(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    h.entries[r].reserve(cols.size());
    for (const auto& c : cols) h.entries[r].push_back(t.query(mul(rows[r], c)));
  }
  return h;
}

namespace detail {

template <class F>
struct Echelon {
  std::vector<std::vector<typename F::value_type>> rows;  // reduced row echelon form
  std::vector<std::size_t> pivots;                        // pivot column of each row
};

/// Reduced row echelon form; pivots are taken leftmost, the pivot row being the
/// first one with a nonzero entry.
template <class F>
Echelon<F> rref(const F& k, std::vector<std::vector<typename F::value_type>> a, std::size_t ncols) {
  Echelon<F> e;
  std::size_t top = 0;
  for (std::size_t col = 0; col < ncols && top < a.size(); ++col) {
    std::size_t piv = top;
    while (piv < a.size() && k.is_zero(a[piv][col])) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[top], a[piv]);
    auto inv = k.inv(a[top][col]);
    for (auto& x : a[top]) x = k.mul(x, inv);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == top || k.is_zero(a[r][col])) continue;
      auto f = a[r][col];
      for (std::size_t c = col; c < ncols; ++c) a[r][c] = k.sub(a[r][c], k.mul(f, a[top][c]));
    }
    e.pivots.push_back(col);
    ++top;
  }
  a.resize(top);
  e.rows = std::move(a);
  return e;
}

template <class F>
std::size_t rank(const F& k, const std::vector<std::vector<typename F::value_type>>& a, std::size_t ncols) {
  return rref(k, a, ncols).pivots.size();
}

/// Solves A·x = b for a matrix with independent columns; nullopt if inconsistent.
template <class F>
std::optional<std::vector<typename F::value_type>> solve(const F& k, const std::vector<std::vector<typename F::value_type>>& a,
                                                         const std::vector<typename F::value_type>& b) {
  const std::size_t ncols = a.empty() ? 0 : a[0].size();
  std::vector<std::vector<typename F::value_type>> aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  Echelon<F> e = rref(k, aug, ncols + 1);
  std::vector<typename F::value_type> x(ncols, k.zero());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == ncols) return std::nullopt;
    x[e.pivots[i]] = e.rows[i][ncols];
  }
  return x;
}

}  // namespace detail

/// Right kernel basis: one vector per non-pivot column j, with entry 1 at j
/// and support otherwise on pivot columns.
template <class F>
std::vector<std::vector<typename F::value_type>> kernel_basis(const F& field, const MultiHankel<F>& h) {
  const F k = field.without_counter();
  const std::size_t ncols = h.cols.size();
  detail::Echelon<F> e = detail::rref(k, h.entries, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<typename F::value_type>> out;
  for (std::size_t j = 0; j < ncols; ++j) {
    if (is_pivot[j]) continue;
    std::vector<typename F::value_type> v(ncols, k.zero());
    v[j] = k.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = k.neg(e.rows[i][j]);
    out.push_back(std::move(v));
  }
  return out;
}

/// Relations read off H_{T[a],T[a]}: greedy independent columns give the
/// staircase, and each border monomial inside T[a] gets its relation by
/// solving against the staircase columns.
template <class F>
GroebnerBasis<F> scalar_fglm(const Table<F>& t, const F& field, const MonomialOrder& ord, const Monomial& a,
                             OpCounter* counter = nullptr) {
  require_same_field(t.field(), field);
  const F k = counter ? field.with_counter(*counter) : field.without_counter();
  using V = std::vector<typename F::value_type>;
  MonomialSet ta = enumerate_below(a, ord);
  const std::size_t N = ta.size();
  MultiHankel<F> h = build_multi_hankel(t, ta, ta);

  // echelon basis of the chosen columns; combo[i] expresses basis[i] in them
  std::vector<V> basis, combo;
  std::vector<std::size_t> pivot_row, chosen;
  std::vector<std::optional<V>> relation(N);
  for (std::size_t j = 0; j < N; ++j) {
    V v(N);
    for (std::size_t r = 0; r < N; ++r) v[r] = h.entries[r][j];
    V lambda(basis.size(), k.zero());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      auto c = v[pivot_row[i]];
      if (k.is_zero(c)) continue;
      lambda[i] = c;
      for (std::size_t r = 0; r < N; ++r)
        if (!k.is_zero(basis[i][r])) v[r] = k.sub(v[r], k.mul(c, basis[i][r]));
    }
    std::size_t p = 0;
    while (p < N && k.is_zero(v[p])) ++p;
    if (p < N) {
      // new independent column: basis vector (col_j - Σ λ_i basis_i) / v[p]
      auto inv = k.inv(v[p]);
      for (auto& x : v)
        if (!k.is_zero(x)) x = k.mul(x, inv);
      V cmb(chosen.size() + 1, k.zero());
      for (std::size_t i = 0; i < basis.size(); ++i) {
        if (k.is_zero(lambda[i])) continue;
        for (std::size_t c = 0; c < combo[i].size(); ++c)
          if (!k.is_zero(combo[i][c])) cmb[c] = k.sub(cmb[c], k.mul(lambda[i], combo[i][c]));
      }
      cmb.back() = k.one();
      for (auto& x : cmb)
        if (!k.is_zero(x)) x = k.mul(x, inv);
      for (auto& old : combo) old.push_back(k.zero());
      basis.push_back(std::move(v));
      combo.push_back(std::move(cmb));
      pivot_row.push_back(p);
      chosen.push_back(j);
      continue;
    }
    // col_j = Σ λ_i basis_i, so the relation is g - Σ λ_i combo_i
    V gamma(chosen.size(), k.zero());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (k.is_zero(lambda[i])) continue;
      for (std::size_t c = 0; c < combo[i].size(); ++c)
        if (!k.is_zero(combo[i][c])) gamma[c] = k.sub(gamma[c], k.mul(lambda[i], combo[i][c]));
    }
    relation[j] = std::move(gamma);
  }

  MonomialSet staircase;
  for (auto j : chosen) staircase.push_back(ta[j]);
  sort_unique(staircase, ord);
  Ring<F> ring(field.without_counter(), ord);
  std::vector<Poly<F>> rels;
  for (const auto& g : minimal_generators(border(staircase, ord), ord)) {
    auto it = std::lower_bound(ta.begin(), ta.end(), g, [&](const Monomial& x, const Monomial& y) { return ord.less(x, y); });
    if (it == ta.end() || !(*it == g)) continue;
    const auto& gamma = relation[static_cast<std::size_t>(it - ta.begin())];
    if (!gamma) continue;
    std::vector<Term<F>> terms{{g, k.one()}};
    for (std::size_t i = 0; i < gamma->size(); ++i) terms.push_back({ta[chosen[i]], (*gamma)[i]});
    rels.push_back(ring.canonical(std::move(terms)));
  }
  return make_basis(ring, std::move(rels), staircase);
}

template <class F>
struct OracleResult {
  GroebnerBasis<F> gb;
  std::uint64_t queries = 0;
  std::uint64_t muls = 0;
};

/// Rank-growth loop: S grows while H_{S∪{m},S∪{m}} gains rank; otherwise the
/// relation for m is solved from H_{S,S} and its multiples are pruned. The
/// inverse of H_{S,S} is kept up to date by bordering.
template <class F>
OracleResult<F> adaptive_sfglm(const Table<F>& table, const F& field, const MonomialOrder& ord,
                               std::size_t max_staircase = 4096) {
  require_same_field(table.field(), field);
  ord.require_weight_order();
  using V = std::vector<typename F::value_type>;
  const std::size_t n = ord.nvars();
  OpCounter counter;
  const F k = field.with_counter(counter);
  Ring<F> ring(field.without_counter(), ord);
  Table<F> tab = table.fresh();

  MonomialSet staircase, lms;
  std::vector<V> inv;  // inverse of H_{S,S}, symmetric
  std::vector<Poly<F>> rels;
  MonomialSet pending{Monomial(n)};
  while (!pending.empty()) {
    const Monomial m = pending.front();
    pending.erase(pending.begin());
    const std::size_t s = staircase.size();
    V u(s);
    for (std::size_t i = 0; i < s; ++i) u[i] = tab.query(mul(staircase[i], m));
    auto d = tab.query(mul(m, m));
    V w(s, k.zero());  // H_{S,S}^{-1}·u
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < s; ++j)
        if (!k.is_zero(inv[i][j]) && !k.is_zero(u[j])) w[i] = k.add(w[i], k.mul(inv[i][j], u[j]));
    auto schur = d;
    for (std::size_t i = 0; i < s; ++i)
      if (!k.is_zero(w[i])) schur = k.sub(schur, k.mul(u[i], w[i]));

    if (!k.is_zero(schur)) {
      auto sinv = k.inv(schur);
      V ws(s);
      for (std::size_t i = 0; i < s; ++i) ws[i] = k.mul(w[i], sinv);
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
          if (!k.is_zero(ws[i]) && !k.is_zero(w[j])) inv[i][j] = k.add(inv[i][j], k.mul(ws[i], w[j]));
      for (std::size_t i = 0; i < s; ++i) inv[i].push_back(k.neg(ws[i]));
      V last(s + 1);
      for (std::size_t j = 0; j < s; ++j) last[j] = k.neg(ws[j]);
      last[s] = sinv;
      inv.push_back(std::move(last));
      staircase.push_back(m);
      if (staircase.size() > max_staircase)
        throw StaircaseLimit("staircase exceeds " + std::to_string(max_staircase) + " monomials");
      for (std::size_t i = 0; i < n; ++i) pending.push_back(mul(m, Monomial::var(n, i, 1)));
      pending.erase(std::remove_if(pending.begin(), pending.end(),
                                   [&](const Monomial& t) {
                                     return in_ideal(t, lms) ||
                                            std::find(staircase.begin(), staircase.end(), t) != staircase.end();
                                   }),
                    pending.end());
      sort_unique(pending, ord);
      continue;
    }
    // H_{S,S}·γ = −H_{S,m}, that is γ = −w
    std::vector<Term<F>> terms{{m, k.one()}};
    for (std::size_t i = 0; i < s; ++i) terms.push_back({staircase[i], k.neg(w[i])});
    rels.push_back(ring.canonical(std::move(terms)));
    lms.push_back(m);
    pending.erase(std::remove_if(pending.begin(), pending.end(), [&](const Monomial& t) { return divides(m, t); }),
                  pending.end());
  }
  sort_unique(staircase, ord);
  OracleResult<F> out{make_basis(ring, std::move(rels), staircase), tab.query_count(), counter.mul_count};
  return out;
}

}  // namespace seqrel
