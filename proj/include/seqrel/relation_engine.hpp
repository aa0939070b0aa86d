// Pairs [F, C] with F = P·C mod B, validity of a candidate relation, and
// construction of new pairs from failing ones.
#pragma once

#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monomials.hpp"
#include "polynomials.hpp"
#include "tables.hpp"

namespace seqrel {

class GuessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when the staircase grows past the configured bound.
class StaircaseLimit : public GuessError {
 public:
  using GuessError::GuessError;
};

template <class F>
struct PairR {
  Poly<F> f;
  Poly<F> c;
  Monomial tag;
  bool border = false;
};

/// Optional masking of the dividend and of non-border reducers: a term τ is
/// ignored when some generator divides M/τ.
struct PairMask {
  const Monomial* big = nullptr;
  const MonomialSet* gens = nullptr;

  bool active() const { return big && gens && !gens->empty(); }
  bool hides(const Monomial& tau) const {
    if (!active()) return false;
    return in_ideal(quotient(*big, tau), *gens);
  }
};

/// Greatest σ with σ·m ⪯ a, if any.
inline std::optional<Monomial> max_shift(const Monomial& m, const Monomial& a, const MonomialOrder& ord) {
  if (ord.greater(m, a)) return std::nullopt;
  MonomialSet ta = enumerate_below(a, ord);
  for (auto it = ta.rbegin(); it != ta.rend(); ++it)
    if (ord.less_equal(mul(*it, m), a)) return *it;
  return std::nullopt;
}

/// Everything divalgo needs about the window T[a] + T[b].
template <class F>
struct GuessContext {
  Ring<F> ring;
  Poly<F> p;
  Monomial big;  // M
  PowerIdeal b_ideal;
  Monomial a, b;
  MonomialSet ta, tb;
  std::map<std::vector<unsigned>, MonomialSet> mask_cache;

  const MonomialOrder& order() const { return ring.order(); }

  std::optional<Monomial> shift_of(const Monomial& m) const {
    if (order().greater(m, a)) return std::nullopt;
    for (auto it = ta.rbegin(); it != ta.rend(); ++it)
      if (order().less_equal(mul(*it, m), a)) return *it;
    return std::nullopt;
  }

  const MonomialSet& mask_for(const Monomial& s) {
    std::vector<unsigned> key(s.nvars());
    for (std::size_t i = 0; i < s.nvars(); ++i) key[i] = s[i];
    auto it = mask_cache.find(key);
    if (it != mask_cache.end()) return it->second;
    return mask_cache.emplace(key, mask_generators(b, s, order())).first->second;
  }
};

template <class F>
GuessContext<F> make_context(const Ring<F>& ring, const Table<F>& t, const Monomial& a, const Monomial& b) {
  const MonomialOrder& ord = ring.order();
  ord.require_weight_order();
  if (a.nvars() != ring.nvars() || b.nvars() != ring.nvars()) throw MonomialError("bound dimension differs from table dimension");
  MonomialSet ta = enumerate_below(a, ord);
  MonomialSet tb = enumerate_below(b, ord);
  MonomialSet support = minkowski_sum(ta, tb, ord);
  Mirror<F> mirror = mirror_series(ring, t, support);
  return GuessContext<F>{ring, std::move(mirror.p), mirror.big, PowerIdeal::above(mirror.big), a, b,
                         std::move(ta), std::move(tb), {}};
}

/// [x_i^{1+deg_{x_i} M}, 0] for each variable.
template <class F>
std::vector<PairR<F>> make_border_pairs(const Ring<F>& ring, const PowerIdeal& bi) {
  std::vector<PairR<F>> out;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    Monomial g = bi.generator(i);
    out.push_back(PairR<F>{ring.monomial(g), ring.zero(), g, true});
  }
  return out;
}

template <class F>
std::vector<PairR<F>> make_border_pairs(const GuessContext<F>& ctx) {
  return make_border_pairs(ctx.ring, ctx.b_ideal);
}

struct Validity {
  bool valid = false;
  bool in_window = false;  // tag ⪯ a
  std::optional<Monomial> shift;
  Monomial lm_f, lm_ftilde, threshold;
};

/// A pair is valid iff its tag lies beyond a, or lm(F̃) ≺ M/(b·s) with s the
/// greatest shift keeping tag·s ⪯ a and F̃ masked by mask_generators(b, s).
template <class F>
Validity validity_test(GuessContext<F>& ctx, const PairR<F>& r) {
  Validity v;
  v.lm_f = ctx.ring.lm(r.f);
  v.lm_ftilde = v.lm_f;
  v.shift = ctx.shift_of(r.tag);
  if (!v.shift) {
    v.valid = true;
    return v;
  }
  v.in_window = true;
  const MonomialSet& mask = ctx.mask_for(*v.shift);
  Poly<F> ft = ctx.ring.mask_higher_part(r.f, ctx.big, mask);
  v.lm_ftilde = ctx.ring.lm(ft);
  v.threshold = quotient(ctx.big, mul(ctx.b, *v.shift));
  v.valid = ctx.order().less(v.lm_ftilde, v.threshold);
  return v;
}

// ---------------------------------------------------------------------------
// Pair reduction

namespace detail {

template <class F>
const Term<F>* key_term(const PairR<F>& r, const PairMask& mask) {
  for (const auto& t : r.f.terms)
    if (r.border || !mask.hides(t.m)) return &t;
  return nullptr;
}

/// r -= coef·q·R_t, where the key term of R_t times q equals `tau`.
template <class F>
void subtract_shifted(const Ring<F>& ring, const PowerIdeal& bi, PairR<F>& r, const PairR<F>& red,
                      const Term<F>& key, const typename F::value_type& coef, const Monomial& q, const Monomial& tau) {
  const F& k = ring.field();
  Poly<F> shifted;
  shifted.terms.reserve(red.f.size());
  for (const auto& t : red.f.terms) {
    if (&t == &key) continue;
    Monomial m = mul(q, t.m);
    if (bi.contains(m)) continue;
    shifted.terms.push_back({m, k.mul(coef, t.c)});
  }
  // the key term cancels τ exactly
  auto it = std::find_if(r.f.terms.begin(), r.f.terms.end(), [&](const Term<F>& t) { return t.m == tau; });
  if (it != r.f.terms.end()) r.f.terms.erase(it);
  r.f = ring.sub(r.f, shifted);
  if (!red.c.is_zero()) r.c = ring.sub(r.c, ring.term_mul(coef, q, red.c));
}

}  // namespace detail

/// Full reduction of the F-part of `r` by the ordered reducers; each step
/// cancels the current term against the first reducer whose (masked) leading
/// monomial divides it, applying the same combination to C. A step is skipped
/// when it would push lm(C) above `target` or cancel the `target` term of C.
template <class F>
PairR<F> pair_normal_form(const Ring<F>& ring, const PowerIdeal& bi, PairR<F> r,
                          const std::vector<const PairR<F>*>& reducers, const Monomial& target,
                          const PairMask& mask = {}) {
  const MonomialOrder& ord = ring.order();
  const F& k = ring.field();
  std::vector<const Term<F>*> keys;
  keys.reserve(reducers.size());
  for (const auto* red : reducers) keys.push_back(detail::key_term(*red, mask));
  std::optional<Monomial> cursor;
  while (true) {
    // next unmasked term strictly below the cursor
    const Term<F>* cur = nullptr;
    for (const auto& t : r.f.terms) {
      if (cursor && !ord.less(t.m, *cursor)) continue;
      if (mask.hides(t.m)) continue;
      cur = &t;
      break;
    }
    if (!cur) break;
    const Monomial tau = cur->m;
    const auto c = cur->c;
    cursor = tau;
    for (std::size_t i = 0; i < reducers.size(); ++i) {
      const auto* red = reducers[i];
      const Term<F>* key = keys[i];
      if (!key || !divides(key->m, tau)) continue;
      Monomial q = quotient(tau, key->m);
      if (red->border) {
        auto it = std::find_if(r.f.terms.begin(), r.f.terms.end(), [&](const Term<F>& t) { return t.m == tau; });
        r.f.terms.erase(it);
        break;
      }
      Monomial lead_c = mul(q, red->tag);
      if (ord.greater(lead_c, target)) continue;
      if (lead_c == target && !ord.less(ring.lm(r.c), target)) continue;
      auto coef = k.div(c, key->c);
      detail::subtract_shifted(ring, bi, r, *red, *key, coef, q, tau);
      break;
    }
  }
  return r;
}

/// Divides the C-part by the accepted relations' C's and applies the same
/// combination to F.
template <class F>
PairR<F> normal_form_right_side(const Ring<F>& ring, const PowerIdeal& bi, PairR<F> r,
                                const std::vector<const PairR<F>*>& accepted) {
  if (accepted.empty()) return r;
  const F& k = ring.field();
  std::optional<Monomial> cursor;
  while (true) {
    const Term<F>* cur = nullptr;
    for (const auto& t : r.c.terms) {
      if (cursor && !ring.order().less(t.m, *cursor)) continue;
      cur = &t;
      break;
    }
    if (!cur) break;
    const Monomial mono = cur->m;
    const auto c = cur->c;
    cursor = mono;
    for (const auto* g : accepted) {
      if (!divides(g->tag, mono)) continue;
      Monomial q = quotient(mono, g->tag);
      auto coef = k.div(c, ring.lc(g->c));
      // C -= coef·q·C_g, leading term cancelling exactly
      Poly<F> tail;
      for (std::size_t j = 1; j < g->c.size(); ++j)
        tail.terms.push_back({mul(q, g->c.terms[j].m), k.mul(coef, g->c.terms[j].c)});
      auto it = std::find_if(r.c.terms.begin(), r.c.terms.end(), [&](const Term<F>& t) { return t.m == mono; });
      r.c.terms.erase(it);
      r.c = ring.sub(r.c, tail);
      Poly<F> fs;
      for (const auto& t : g->f.terms) {
        Monomial m = mul(q, t.m);
        if (!bi.contains(m)) fs.terms.push_back({m, k.mul(coef, t.c)});
      }
      r.f = ring.sub(r.f, fs);
      break;
    }
  }
  return r;
}

/// Normal form of the masked F-part against the reducers' masked F-parts
/// (border pairs are never masked).
template <class F>
PairR<F> normal_form_higher_part(const Ring<F>& ring, const PowerIdeal& bi, PairR<F> r,
                                 const std::vector<const PairR<F>*>& reducers, const Monomial& big,
                                 const MonomialSet& mask_gens, const Monomial& target) {
  PairMask mask{&big, &mask_gens};
  return pair_normal_form(ring, bi, std::move(r), reducers, target, mask);
}

/// Divides both components by lc(C).
template <class F>
PairR<F> make_monic(const Ring<F>& ring, PairR<F> r) {
  if (r.c.is_zero()) return r;
  const F& k = ring.field();
  if (k.is_one(ring.lc(r.c))) return r;
  auto inv = k.inv(ring.lc(r.c));
  r.c = ring.scalar_mul(inv, r.c);
  r.f = ring.scalar_mul(inv, r.f);
  return r;
}

/// How a new pair was obtained.
struct NewPairNote {
  Monomial source;                    // m
  std::optional<Monomial> partner;    // m' in the first case
  bool remainder_of_power = false;    // built from [q·lm(F_m), 0]
  std::string to_string() const {
    std::string s = "from " + seqrel::to_string(source);
    if (partner) s += " with " + seqrel::to_string(*partner);
    if (remainder_of_power) s += " (border monomial)";
    return s;
  }
};

/// Builds the pair for border monomial h out of the failing pairs.
template <class F>
PairR<F> new_pair(GuessContext<F>& ctx, const Monomial& h, const std::deque<PairR<F>>& failing,
                  const std::vector<PairR<F>>& borders, NewPairNote* note = nullptr) {
  const Ring<F>& ring = ctx.ring;
  const MonomialOrder& ord = ring.order();
  const PairR<F>* rm = nullptr;
  for (const auto& f : failing)
    if (divides(f.tag, h) && (!rm || ord.less(rm->tag, f.tag))) rm = &f;
  if (!rm) throw GuessError("no failing pair divides " + to_string(h));
  Monomial q = quotient(h, rm->tag);
  Monomial target_lm = mul(q, ring.lm(rm->f));
  const PairR<F>* partner = nullptr;
  for (const auto& f : failing)
    if (&f != rm && ring.lm(f.f) == target_lm && ord.less(f.tag, h) && (!partner || ord.less(partner->tag, f.tag)))
      partner = &f;

  std::vector<const PairR<F>*> others;
  for (const auto& f : failing)
    if (&f != rm && &f != partner) others.push_back(&f);
  std::stable_sort(others.begin(), others.end(),
                   [&](const PairR<F>* x, const PairR<F>* y) { return ord.less(ring.lm(y->f), ring.lm(x->f)); });

  std::vector<const PairR<F>*> list;
  PairR<F> start;
  if (note) *note = NewPairNote{rm->tag, std::nullopt, false};
  if (partner) {
    if (note) note->partner = partner->tag;
    list.push_back(rm);
    for (const auto& b : borders) list.push_back(&b);
    list.insert(list.end(), others.begin(), others.end());
    start = *partner;
  } else if (ctx.b_ideal.contains(target_lm)) {
    if (note) note->remainder_of_power = true;
    list.push_back(rm);
    for (const auto& b : borders) list.push_back(&b);
    list.insert(list.end(), others.begin(), others.end());
    start = PairR<F>{ring.monomial(target_lm), ring.zero(), h, false};
  } else {
    for (const auto& b : borders) list.push_back(&b);
    others.push_back(rm);
    std::stable_sort(others.begin(), others.end(),
                     [&](const PairR<F>* x, const PairR<F>* y) { return ord.less(ring.lm(y->f), ring.lm(x->f)); });
    list.insert(list.end(), others.begin(), others.end());
    start = PairR<F>{ring.reduce_mod(ring.mono_mul(q, rm->f), ctx.b_ideal), ring.mono_mul(q, rm->c), h, false};
  }
  start.tag = h;
  PairR<F> res = pair_normal_form(ring, ctx.b_ideal, std::move(start), list, h);
  if (!(ring.lm(res.c) == h)) throw GuessError("new pair for " + to_string(h) + " lost its leading monomial");
  return make_monic(ring, std::move(res));
}

/// Checks F = P·C mod B with an independent, uncounted multiplication.
template <class F>
bool pair_invariant_holds(const Ring<F>& ring, const Poly<F>& p, const PowerIdeal& bi, const PairR<F>& r) {
  if (r.border) return true;
  Ring<F> plain(ring.field().without_counter(), ring.order());
  return plain.reduce_mod(plain.mul(p, r.c), bi) == r.f;
}

}  // namespace seqrel
