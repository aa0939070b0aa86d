// Sparse multivariate polynomials over an exact field.
#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "monomials.hpp"
#include "scalars.hpp"

namespace seqrel {

template <class F>
struct Term {
  Monomial m;
  typename F::value_type c;
};

/// Terms sorted strictly decreasing by the ring's ordering, no zero coefficient.
template <class F>
struct Poly {
  std::vector<Term<F>> terms;

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms.size() != b.terms.size()) return false;
    for (std::size_t i = 0; i < a.terms.size(); ++i)
      if (!(a.terms[i].m == b.terms[i].m) || !(a.terms[i].c == b.terms[i].c)) return false;
    return true;
  }
};

/// B = (x_1^{e_1}, ..., x_n^{e_n}); `bounds[i]` is the exponent e_i.
struct PowerIdeal {
  Monomial bounds;

  static PowerIdeal above(const Monomial& m) {
    Monomial b(m.nvars());
    for (std::size_t i = 0; i < m.nvars(); ++i) b.set(i, std::uint64_t(m[i]) + 1);
    return {b};
  }
  bool contains(const Monomial& m) const {
    if (m.is_zero_sentinel()) return false;
    for (std::size_t i = 0; i < m.nvars(); ++i)
      if (m[i] >= bounds[i]) return true;
    return false;
  }
  Monomial generator(std::size_t i) const { return Monomial::var(bounds.nvars(), i, bounds[i]); }
};

template <class F>
struct Division {
  std::vector<Poly<F>> quotients;
  Poly<F> remainder;
};

/// Polynomial arithmetic bound to a field context and an ordering.
template <class F>
class Ring {
 public:
  using scalar = typename F::value_type;
  using poly = Poly<F>;

  Ring(F field, MonomialOrder order) : field_(std::move(field)), order_(std::move(order)) {}

  const F& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return order_.nvars(); }

  Ring with_counter(OpCounter& c) const { return Ring(field_.with_counter(c), order_); }

  poly zero() const { return {}; }
  poly constant(const scalar& c) const { return monomial(Monomial(nvars()), c); }
  poly one() const { return constant(field_.one()); }
  poly monomial(const Monomial& m, const scalar& c) const {
    poly p;
    if (!field_.is_zero(c)) p.terms.push_back({m, c});
    return p;
  }
  poly monomial(const Monomial& m) const { return monomial(m, field_.one()); }

  Monomial lm(const poly& p) const {
    return p.is_zero() ? Monomial::zero_sentinel(nvars()) : p.terms.front().m;
  }
  scalar lc(const poly& p) const { return p.is_zero() ? field_.zero() : p.terms.front().c; }
  Term<F> lt(const poly& p) const {
    return p.is_zero() ? Term<F>{Monomial::zero_sentinel(nvars()), field_.zero()} : p.terms.front();
  }

  scalar coeff(const poly& p, const Monomial& m) const {
    auto it = find(p, m);
    return it == p.terms.end() ? field_.zero() : it->c;
  }

  bool less(const Monomial& a, const Monomial& b) const { return order_.less(a, b); }

  /// Sorts and merges an arbitrary term list into canonical form.
  poly canonical(std::vector<Term<F>> terms) const {
    std::sort(terms.begin(), terms.end(), [this](const Term<F>& a, const Term<F>& b) { return less(b.m, a.m); });
    poly out;
    for (auto& t : terms) {
      if (!out.terms.empty() && out.terms.back().m == t.m) {
        out.terms.back().c = field_.add(out.terms.back().c, t.c);
        if (field_.is_zero(out.terms.back().c)) out.terms.pop_back();
      } else if (!field_.is_zero(t.c)) {
        out.terms.push_back(std::move(t));
      }
    }
    return out;
  }

  bool is_canonical(const poly& p) const {
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
      if (field_.is_zero(p.terms[i].c)) return false;
      if (p.terms[i].m.nvars() != nvars()) return false;
      if (i && !less(p.terms[i].m, p.terms[i - 1].m)) return false;
    }
    return true;
  }

  poly add(const poly& a, const poly& b) const { return merge(a, b, false); }
  poly sub(const poly& a, const poly& b) const { return merge(a, b, true); }
  poly neg(const poly& a) const {
    poly r = a;
    for (auto& t : r.terms) t.c = field_.neg(t.c);
    return r;
  }

  /// c·p; counts |p| multiplications.
  poly scalar_mul(const scalar& c, const poly& p) const {
    if (field_.is_zero(c)) return {};
    poly r;
    r.terms.reserve(p.size());
    for (const auto& t : p.terms) r.terms.push_back({t.m, field_.mul(c, t.c)});
    return r;
  }
  /// m·p; no coefficient arithmetic.
  poly mono_mul(const Monomial& m, const poly& p) const {
    poly r;
    r.terms.reserve(p.size());
    for (const auto& t : p.terms) r.terms.push_back({seqrel::mul(m, t.m), t.c});
    return r;
  }
  /// c·m·p; counts |p| multiplications.
  poly term_mul(const scalar& c, const Monomial& m, const poly& p) const {
    if (field_.is_zero(c)) return {};
    poly r;
    r.terms.reserve(p.size());
    for (const auto& t : p.terms) r.terms.push_back({seqrel::mul(m, t.m), field_.mul(c, t.c)});
    return r;
  }
  /// p·q; counts |p|·|q| multiplications.
  poly mul(const poly& p, const poly& q) const {
    std::unordered_map<Monomial, scalar, MonomialHash> acc;
    acc.reserve(p.size() * q.size());
    for (const auto& a : p.terms)
      for (const auto& b : q.terms) {
        auto prod = field_.mul(a.c, b.c);
        auto [it, fresh] = acc.try_emplace(seqrel::mul(a.m, b.m), prod);
        if (!fresh) it->second = field_.add(it->second, prod);
      }
    std::vector<Term<F>> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc) terms.push_back({m, c});
    return canonical(std::move(terms));
  }

  /// Drops every term lying in B; no multiplication.
  poly reduce_mod(const poly& p, const PowerIdeal& b) const {
    poly r;
    for (const auto& t : p.terms)
      if (!b.contains(t.m)) r.terms.push_back(t);
    return r;
  }

  /// Divides by lc; counts one inversion and |p| multiplications.
  poly make_monic(const poly& p) const {
    if (p.is_zero()) return p;
    return scalar_mul(field_.inv(lc(p)), p);
  }

  /// Multivariate division: the current leading term is cancelled against the
  /// first divisor (in list order) whose lm divides it.
  Division<F> normal_form(const poly& p, const std::vector<poly>& divisors) const {
    return divide(p, divisors, true);
  }
  poly normal_form_remainder(const poly& p, const std::vector<poly>& divisors) const {
    return divide(p, divisors, false).remainder;
  }

  /// Removes each term τ of F such that some mask generator divides M/τ.
  poly mask_higher_part(const poly& f, const Monomial& big, const MonomialSet& mask) const {
    if (mask.empty()) return f;
    poly r;
    for (const auto& t : f.terms) {
      if (!divides(t.m, big)) throw MonomialError("term does not divide the mirror monomial");
      if (!in_ideal(quotient(big, t.m), mask)) r.terms.push_back(t);
    }
    return r;
  }

  // -------------------------------------------------------------------------
  // text

  std::string to_string(const poly& p) const {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
      const auto& t = p.terms[i];
      std::string c = field_.to_string(t.c);
      bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (i == 0) s += negative ? "-" : "";
      else s += negative ? " - " : " + ";
      bool unit_coeff = c == "1";
      if (t.m.is_one()) s += c;
      else s += (unit_coeff ? "" : c + "*") + seqrel::to_string(t.m);
    }
    return s;
  }

  /// Parses `x^2 - 2*x + 1`, `-15/17*x*y + 3`.
  poly parse(std::string_view text) const {
    std::string s = detail::strip(text);
    if (s.empty()) throw FieldError("empty polynomial");
    std::vector<Term<F>> terms;
    std::size_t pos = 0;
    while (pos < s.size()) {
      bool negative = false;
      while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') negative = !negative;
        ++pos;
      }
      std::size_t end = pos;
      while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
      std::string body = s.substr(pos, end - pos);
      if (body.empty()) throw FieldError("bad polynomial '" + std::string(text) + "'");
      scalar c = field_.one();
      Monomial m(nvars());
      std::size_t p = 0;
      while (p <= body.size()) {
        std::size_t e = body.find('*', p);
        if (e == std::string::npos) e = body.size();
        std::string factor = body.substr(p, e - p);
        if (factor.empty()) throw FieldError("bad polynomial '" + std::string(text) + "'");
        if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
          F plain = field_.without_counter();
          c = plain.mul(c, plain.parse(factor));
        } else {
          m = seqrel::mul(m, parse_monomial(factor, nvars()));
        }
        p = e + 1;
      }
      if (negative) c = field_.neg(c);
      terms.push_back({m, c});
      pos = end;
    }
    return canonical(std::move(terms));
  }

 private:
  typename std::vector<Term<F>>::const_iterator find(const poly& p, const Monomial& m) const {
    auto it = std::lower_bound(p.terms.begin(), p.terms.end(), m,
                               [this](const Term<F>& t, const Monomial& x) { return less(x, t.m); });
    if (it != p.terms.end() && it->m == m) return it;
    return p.terms.end();
  }

  poly merge(const poly& a, const poly& b, bool subtract) const {
    poly r;
    r.terms.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && less(b.terms[j].m, a.terms[i].m))) {
        r.terms.push_back(a.terms[i++]);
      } else if (i == a.size() || less(a.terms[i].m, b.terms[j].m)) {
        auto c = subtract ? field_.neg(b.terms[j].c) : b.terms[j].c;
        r.terms.push_back({b.terms[j].m, c});
        ++j;
      } else {
        auto c = subtract ? field_.sub(a.terms[i].c, b.terms[j].c) : field_.add(a.terms[i].c, b.terms[j].c);
        if (!field_.is_zero(c)) r.terms.push_back({a.terms[i].m, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Division<F> divide(const poly& p, const std::vector<poly>& divisors, bool keep_quotients) const {
    Division<F> out;
    std::vector<std::vector<Term<F>>> q(keep_quotients ? divisors.size() : 0);
    poly work = p;
    while (!work.is_zero()) {
      const Term<F> head = work.terms.front();
      std::size_t k = 0;
      for (; k < divisors.size(); ++k)
        if (!divisors[k].is_zero() && divides(lm(divisors[k]), head.m)) break;
      if (k == divisors.size()) {
        out.remainder.terms.push_back(head);
        work.terms.erase(work.terms.begin());
        continue;
      }
      const poly& d = divisors[k];
      scalar c = field_.div(head.c, lc(d));
      Monomial shift = quotient(head.m, lm(d));
      poly tail;
      tail.terms.reserve(d.size() - 1);
      for (std::size_t t = 1; t < d.size(); ++t)
        tail.terms.push_back({seqrel::mul(shift, d.terms[t].m), field_.mul(c, d.terms[t].c)});
      work.terms.erase(work.terms.begin());
      work = sub(work, tail);
      if (keep_quotients) q[k].push_back({shift, c});
    }
    if (keep_quotients) {
      out.quotients.resize(divisors.size());
      for (std::size_t k = 0; k < divisors.size(); ++k) out.quotients[k] = canonical(std::move(q[k]));
    }
    return out;
  }

  F field_;
  MonomialOrder order_;
};

}  // namespace seqrel
