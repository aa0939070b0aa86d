// Relation guessers: Berlekamp-Massey, the division-based guesser over a
// fixed window and its adaptive variant.
#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "relation_engine.hpp"

namespace seqrel {

struct GuessOptions {
  bool interreduce = true;  // monic and interreduced output
  bool trace = false;
  std::size_t max_staircase = 4096;
};

template <class F>
struct TraceEntry {
  std::string step;  // "test", "create", "init", "right-side", "higher-part"
  Monomial tag;
  PairR<F> pair;
  Poly<F> ftilde;
  Monomial lm_f, lm_ftilde;
  std::optional<Monomial> shift;
  std::optional<bool> valid;
  std::string note;
};

template <class F>
struct GuessResult {
  GroebnerBasis<F> gb;
  std::vector<PairR<F>> accepted;  // pairs as accepted, in acceptance order
  std::uint64_t muls = 0;
  std::uint64_t queries = 0;
  std::vector<TraceEntry<F>> trace;
  std::vector<std::string> warnings;
};

/// Monic autoreduction; zero elements are dropped.
template <class F>
std::vector<Poly<F>> interreduce_polys(const Ring<F>& ring, std::vector<Poly<F>> polys) {
  std::vector<Poly<F>> g;
  for (auto& p : polys)
    if (!p.is_zero()) g.push_back(ring.make_monic(p));
  const MonomialOrder& ord = ring.order();
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(g.begin(), g.end(), [&](const Poly<F>& a, const Poly<F>& b) { return ord.less(ring.lm(a), ring.lm(b)); });
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::vector<Poly<F>> others;
      for (std::size_t j = 0; j < g.size(); ++j)
        if (j != i) others.push_back(g[j]);
      Poly<F> r = ring.normal_form_remainder(g[i], others);
      if (r == g[i]) continue;
      changed = true;
      if (r.is_zero()) {
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
      } else {
        g[i] = ring.make_monic(r);
      }
      break;
    }
  }
  std::sort(g.begin(), g.end(), [&](const Poly<F>& a, const Poly<F>& b) { return ord.less(ring.lm(a), ring.lm(b)); });
  return g;
}

template <class F>
GroebnerBasis<F> make_basis(const Ring<F>& ring, std::vector<Poly<F>> rels, const MonomialSet& fallback_staircase) {
  const MonomialOrder& ord = ring.order();
  std::sort(rels.begin(), rels.end(), [&](const Poly<F>& a, const Poly<F>& b) { return ord.less(ring.lm(a), ring.lm(b)); });
  GroebnerBasis<F> gb{std::move(rels), {}, ord, true};
  MonomialSet lms = gb.leading_monomials();
  if (auto st = staircase_of(lms, ord)) {
    gb.staircase = *st;
  } else {
    gb.finite_staircase = false;
    gb.staircase = fallback_staircase;
  }
  return gb;
}

template <class F>
GroebnerBasis<F> interreduce(const Ring<F>& ring, std::vector<Poly<F>> polys) {
  Ring<F> plain(ring.field().without_counter(), ring.order());
  return make_basis(plain, interreduce_polys(plain, std::move(polys)), {});
}

// ---------------------------------------------------------------------------
// Berlekamp-Massey through the extended Euclidean algorithm

/// Minimal recurrence of w_0..w_D as a monic polynomial in x.
template <class F>
GuessResult<F> berlekamp_massey(const Table<F>& table, const F& field, unsigned bound) {
  require_same_field(table.field(), field);
  if (table.nvars() != 1) throw GuessError("Berlekamp-Massey needs a one-dimensional table");
  Table<F> tab = table.fresh();
  OpCounter counter;
  Ring<F> ring(field.with_counter(counter), MonomialOrder::drl(1));
  std::vector<Term<F>> terms;
  for (unsigned i = 0; i <= bound; ++i) terms.push_back({Monomial::var(1, 0, bound - i), tab.query(Monomial::var(1, 0, i))});
  Poly<F> p = ring.canonical(std::move(terms));

  Poly<F> f0 = ring.monomial(Monomial::var(1, 0, bound + 1)), c0 = ring.zero();
  Poly<F> f1 = p, c1 = ring.one();
  while (!f1.is_zero() && !ring.order().less(ring.lm(f1), ring.lm(c1))) {
    Division<F> d = ring.normal_form(f0, {f1});
    Poly<F> c2 = ring.sub(c0, ring.mul(d.quotients[0], c1));
    f0 = std::move(f1);
    c0 = std::move(c1);
    f1 = std::move(d.remainder);
    c1 = std::move(c2);
  }
  GuessResult<F> out;
  Poly<F> rel = ring.make_monic(c1);
  out.muls = counter.mul_count;
  out.queries = tab.query_count();
  out.accepted.push_back(PairR<F>{f1, rel, ring.lm(rel), false});
  Ring<F> plain(field.without_counter(), ring.order());
  out.gb = make_basis(plain, {rel}, {});
  return out;
}

// ---------------------------------------------------------------------------
// Division-based guesser over T[a] + T[b]

namespace detail {

/// Staircase elements outside the shifts a relation with tag g was tested on.
inline bool window_misses(const Monomial& s, const MonomialSet& tb, const MonomialSet& staircase, const MonomialOrder& ord) {
  for (const auto& sigma : staircase) {
    bool hit = false;
    for (const auto& u : tb)
      if (divides(u, sigma) && ord.less_equal(quotient(sigma, u), s)) {
        hit = true;
        break;
      }
    if (!hit) return true;
  }
  return false;
}

}  // namespace detail

template <class F>
GuessResult<F> guess_div(const Table<F>& table, const F& field, const MonomialOrder& ord, const Monomial& a,
                         const Monomial& b, const GuessOptions& opt = {}) {
  require_same_field(table.field(), field);
  if (table.nvars() != ord.nvars()) throw GuessError("order and table dimensions differ");
  Table<F> tab = table.fresh();
  OpCounter counter;
  Ring<F> ring(field.with_counter(counter), ord);
  GuessContext<F> ctx = make_context(ring, tab, a, b);
  const std::vector<PairR<F>> borders = make_border_pairs(ctx);

  GuessResult<F> out;
  std::vector<PairR<F>> pending;  // sorted by tag
  std::deque<PairR<F>> failing;
  std::vector<Validity> verdicts;
  MonomialSet staircase;
  pending.push_back(PairR<F>{ctx.p, ring.one(), Monomial(ord.nvars()), false});

  auto has_tag = [](const auto& list, const Monomial& h) {
    return std::any_of(list.begin(), list.end(), [&](const PairR<F>& r) { return r.tag == h; });
  };

  while (!pending.empty()) {
    PairR<F> r = std::move(pending.front());
    pending.erase(pending.begin());
    Validity v = validity_test(ctx, r);
    if (opt.trace) {
      Poly<F> ft = r.f;
      if (v.shift) ft = ring.mask_higher_part(r.f, ctx.big, ctx.mask_for(*v.shift));
      out.trace.push_back({"test", r.tag, r, ft, v.lm_f, v.lm_ftilde, v.shift, v.valid, ""});
    }
    if (v.valid) {
      out.accepted.push_back(std::move(r));
      verdicts.push_back(v);
      continue;
    }
    failing.push_back(std::move(r));
    const PairR<F>& fresh_fail = failing.back();
    std::vector<const PairR<F>*> reducers;
    for (const auto& bp : borders) reducers.push_back(&bp);
    reducers.push_back(&fresh_fail);
    for (auto& p : pending) {
      const Monomial target = p.tag;
      p = pair_normal_form(ring, ctx.b_ideal, std::move(p), reducers, target);
    }

    staircase.push_back(fresh_fail.tag);
    staircase = stabilize(staircase, ord);
    if (staircase.size() > opt.max_staircase)
      throw StaircaseLimit("staircase exceeds " + std::to_string(opt.max_staircase) + " monomials");
    for (const auto& h : border(staircase, ord)) {
      if (has_tag(out.accepted, h) || has_tag(pending, h)) continue;
      NewPairNote note;
      PairR<F> np = new_pair(ctx, h, failing, borders, &note);
      if (opt.trace) out.trace.push_back({"create", h, np, {}, ring.lm(np.f), ring.lm(np.f), std::nullopt, std::nullopt, note.to_string()});
      auto pos = std::find_if(pending.begin(), pending.end(), [&](const PairR<F>& q) { return ord.less(h, q.tag); });
      pending.insert(pos, std::move(np));
    }
  }

  for (std::size_t i = 0; i < out.accepted.size(); ++i) {
    const auto& g = out.accepted[i];
    const Validity& v = verdicts[i];
    if (!v.in_window) {
      out.warnings.push_back("relation with leading monomial " + to_string(g.tag) + " lies beyond the window and was not tested");
    } else if (detail::window_misses(*v.shift, ctx.tb, staircase, ord)) {
      out.warnings.push_back("relation with leading monomial " + to_string(g.tag) +
                             " was tested on a window missing part of the staircase");
    }
  }

  out.muls = counter.mul_count;
  out.queries = tab.query_count();
  std::vector<Poly<F>> rels;
  for (const auto& g : out.accepted) rels.push_back(g.c);
  Ring<F> plain(field.without_counter(), ord);
  out.gb = opt.interreduce ? make_basis(plain, interreduce_polys(plain, rels), staircase)
                           : make_basis(plain, rels, staircase);
  return out;
}

// ---------------------------------------------------------------------------
// Adaptive division-based guesser

namespace detail {

/// p·q mod B, skipping products that land in B.
template <class F>
Poly<F> mul_mod(const Ring<F>& ring, const Poly<F>& p, const Poly<F>& q, const PowerIdeal& bi) {
  const F& k = ring.field();
  std::vector<Term<F>> terms;
  for (const auto& a : p.terms)
    for (const auto& b : q.terms) {
      Monomial m = mul(a.m, b.m);
      if (bi.contains(m)) continue;
      terms.push_back({m, k.mul(a.c, b.c)});
    }
  return ring.canonical(std::move(terms));
}

template <class F>
struct AdaptiveWindow {
  MonomialSet staircase;  // sorted
  Monomial lcm_s;
  Monomial big;
  PowerIdeal bi;
  MonomialSet support;  // 2S, sorted
  Poly<F> p;
  std::vector<PairR<F>> stairs;    // aligned with staircase
  std::vector<PairR<F>> accepted;  // in acceptance order
  std::vector<PairR<F>> borders;
};

}  // namespace detail

template <class F>
GuessResult<F> guess_adaptive(const Table<F>& table, const F& field, const MonomialOrder& ord, const GuessOptions& opt = {}) {
  require_same_field(table.field(), field);
  ord.require_weight_order();
  const std::size_t n = ord.nvars();
  if (table.nvars() != n) throw GuessError("order and table dimensions differ");
  Table<F> tab = table.fresh();
  OpCounter counter;
  Ring<F> ring(field.with_counter(counter), ord);
  GuessResult<F> out;

  using W = detail::AdaptiveWindow<F>;
  W cur;
  cur.lcm_s = Monomial(n);
  cur.big = Monomial(n);
  cur.bi = PowerIdeal::above(cur.big);
  cur.borders = make_border_pairs(ring, cur.bi);
  MonomialSet pending{Monomial(n)};

  while (!pending.empty()) {
    const Monomial m = pending.front();
    pending.erase(pending.begin());

    // window for S' = S ∪ {m}
    W nxt;
    nxt.staircase = cur.staircase;
    nxt.staircase.push_back(m);
    sort_unique(nxt.staircase, ord);
    nxt.lcm_s = lcm(cur.lcm_s, m);
    nxt.big = pow(nxt.lcm_s, 2);
    nxt.bi = PowerIdeal::above(nxt.big);
    const Monomial lift = quotient(nxt.big, cur.big);
    nxt.support = minkowski_sum(nxt.staircase, nxt.staircase, ord);
    std::vector<Term<F>> fresh_terms;
    for (const auto& tau : nxt.support)
      if (!contains(cur.support, tau, ord)) fresh_terms.push_back({quotient(nxt.big, tau), tab.query(tau)});
    Poly<F> p_new = ring.canonical(std::move(fresh_terms));
    nxt.p = ring.add(ring.mono_mul(lift, cur.p), p_new);
    auto lift_pair = [&](const PairR<F>& r) {
      PairR<F> q = r;
      q.f = ring.add(ring.mono_mul(lift, r.f), detail::mul_mod(ring, p_new, r.c, nxt.bi));
      return q;
    };
    for (const auto& r : cur.stairs) nxt.stairs.push_back(lift_pair(r));
    for (const auto& r : cur.accepted) nxt.accepted.push_back(lift_pair(r));
    nxt.borders = make_border_pairs(ring, nxt.bi);

    MonomialSet lm_g;
    for (const auto& g : nxt.accepted) lm_g.push_back(g.tag);
    auto stair_of = [&](const Monomial& t) -> const PairR<F>& {
      auto it = std::lower_bound(cur.staircase.begin(), cur.staircase.end(), t,
                                 [&](const Monomial& x, const Monomial& y) { return ord.less(x, y); });
      return nxt.stairs[static_cast<std::size_t>(it - cur.staircase.begin())];
    };
    std::vector<const PairR<F>*> border_list;
    for (const auto& bp : nxt.borders) border_list.push_back(&bp);

    // initial pair
    PairR<F> r;
    std::string how;
    if (m.is_one()) {
      r = PairR<F>{nxt.p, ring.one(), m, false};
      how = "constant";
    } else {
      bool done = false;
      for (std::size_t i = 0; i < n && !done; ++i) {
        if (m[i] < 2) continue;
        Monomial mu = quotient(m, Monomial::var(n, i, 2));
        Monomial mux = mul(mu, Monomial::var(n, i, 1));
        if (!contains(cur.staircase, mu, ord) || !contains(cur.staircase, mux, ord)) continue;
        std::vector<const PairR<F>*> list{&stair_of(mux)};
        list.insert(list.end(), border_list.begin(), border_list.end());
        PairR<F> start = stair_of(mu);
        start.tag = m;
        r = normal_form_higher_part(ring, nxt.bi, std::move(start), list, nxt.big, lm_g, m);
        how = "quotient of " + to_string(mu) + " by " + to_string(mux);
        done = true;
      }
      for (std::size_t i = 0; i < n && !done; ++i) {
        if (m[i] < 1) continue;
        Monomial xi = Monomial::var(n, i, 1);
        Monomial mu = quotient(m, xi);
        if (!contains(cur.staircase, mu, ord)) continue;
        const PairR<F>& src = stair_of(mu);
        r = PairR<F>{ring.reduce_mod(ring.mono_mul(xi, src.f), nxt.bi), ring.mono_mul(xi, src.c), m, false};
        how = "shift of " + to_string(mu);
        done = true;
      }
      if (!done) throw GuessError("no staircase predecessor for " + to_string(m));
    }
    if (!(ring.lm(r.c) == m)) throw GuessError("initial pair for " + to_string(m) + " has the wrong leading monomial");
    if (opt.trace) out.trace.push_back({"init", m, r, {}, ring.lm(r.f), ring.lm(r.f), std::nullopt, std::nullopt, how});

    std::vector<const PairR<F>*> acc_list;
    for (const auto& g : nxt.accepted) acc_list.push_back(&g);
    r = normal_form_right_side(ring, nxt.bi, std::move(r), acc_list);
    r.f = ring.reduce_mod(r.f, nxt.bi);
    if (opt.trace) out.trace.push_back({"right-side", m, r, {}, ring.lm(r.f), ring.lm(r.f), std::nullopt, std::nullopt, ""});
    std::vector<const PairR<F>*> stair_list;
    for (const auto& s : nxt.stairs) stair_list.push_back(&s);
    r = normal_form_higher_part(ring, nxt.bi, std::move(r), stair_list, nxt.big, lm_g, m);
    r = make_monic(ring, std::move(r));

    Poly<F> ft = ring.mask_higher_part(r.f, nxt.big, lm_g);
    const Monomial threshold = quotient(nxt.big, m);
    const bool valid = ord.less(ring.lm(ft), threshold);
    if (opt.trace) out.trace.push_back({"test", m, r, ft, ring.lm(r.f), ring.lm(ft), std::nullopt, valid, ""});

    if (valid) {
      r.f = detail::mul_mod(ring, cur.p, r.c, cur.bi);
      cur.accepted.push_back(std::move(r));
      pending.erase(std::remove_if(pending.begin(), pending.end(), [&](const Monomial& t) { return divides(m, t); }),
                    pending.end());
      continue;
    }
    // the relation fails: commit S'
    auto pos = std::lower_bound(cur.staircase.begin(), cur.staircase.end(), m,
                                [&](const Monomial& x, const Monomial& y) { return ord.less(x, y); });
    nxt.stairs.insert(nxt.stairs.begin() + (pos - cur.staircase.begin()), std::move(r));
    cur = std::move(nxt);
    if (cur.staircase.size() > opt.max_staircase)
      throw StaircaseLimit("staircase exceeds " + std::to_string(opt.max_staircase) + " monomials");
    for (std::size_t i = 0; i < n; ++i) pending.push_back(mul(m, Monomial::var(n, i, 1)));
    MonomialSet lms;
    for (const auto& g : cur.accepted) lms.push_back(g.tag);
    pending.erase(std::remove_if(pending.begin(), pending.end(),
                                 [&](const Monomial& t) { return in_ideal(t, lms) || contains(cur.staircase, t, ord); }),
                  pending.end());
    sort_unique(pending, ord);
  }

  out.muls = counter.mul_count;
  out.queries = tab.query_count();
  out.accepted = cur.accepted;
  std::vector<Poly<F>> rels;
  for (const auto& g : cur.accepted) rels.push_back(g.c);
  Ring<F> plain(field.without_counter(), ord);
  out.gb = opt.interreduce ? make_basis(plain, interreduce_polys(plain, rels), cur.staircase)
                           : make_basis(plain, rels, cur.staircase);
  if (!opt.interreduce || !out.gb.finite_staircase) out.gb.staircase = cur.staircase;
  return out;
}

}  // namespace seqrel
