// Sequence tables with query counting, mirror series, and table generators.
#pragma once

#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "monomials.hpp"
#include "polynomials.hpp"
#include "scalars.hpp"

namespace seqrel {

class UnavailableTerm : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A relation set with its staircase.
template <class F>
struct GroebnerBasis {
  std::vector<Poly<F>> relations;
  MonomialSet staircase;
  MonomialOrder order;
  bool finite_staircase = true;

  MonomialSet leading_monomials() const {
    MonomialSet out;
    for (const auto& g : relations) out.push_back(g.terms.front().m);
    return out;
  }
};

inline std::string index_string(const Monomial& i) {
  std::string s = "(";
  for (std::size_t k = 0; k < i.nvars(); ++k) s += (k ? "," : "") + std::to_string(i[k]);
  return s + ")";
}

/// Query interface over an n-dimensional sequence. Copies share the cache and
/// the counter; `fresh()` gives an independent view of the same source.
template <class F>
class Table {
 public:
  using scalar = typename F::value_type;
  using Source = std::function<scalar(const Monomial&)>;

  Table(F field, std::size_t n, Source source, std::string name = "table")
      : field_(field.without_counter()), n_(n), source_(std::move(source)), name_(std::move(name)),
        state_(std::make_shared<State>()) {}

  const F& field() const { return field_; }
  std::size_t nvars() const { return n_; }
  const std::string& name() const { return name_; }

  scalar query(const Monomial& i) const {
    if (i.nvars() != n_) throw MonomialError("index dimension differs from table dimension");
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto it = state_->cache.find(i);
    if (it != state_->cache.end()) return it->second;
    scalar v = source_(i);
    state_->cache.emplace(i, v);
    return v;
  }
  scalar operator[](const Monomial& i) const { return query(i); }

  /// Distinct indices fetched so far.
  std::uint64_t query_count() const {
    std::lock_guard<std::mutex> lock(state_->mutex);
    return state_->cache.size();
  }

  Table fresh() const { return Table(field_, n_, source_, name_); }

 private:
  struct State {
    std::mutex mutex;
    std::unordered_map<Monomial, scalar, MonomialHash> cache;
  };

  F field_;
  std::size_t n_;
  Source source_;
  std::string name_;
  std::shared_ptr<State> state_;
};

/// [x^shift · f] = Σ γ_k w_{k+shift}.
template <class F>
typename F::value_type bracket_eval(const Table<F>& t, const Poly<F>& f, const Monomial& shift) {
  const F& k = t.field();
  auto acc = k.zero();
  for (const auto& term : f.terms) acc = k.add(acc, k.mul(term.c, t.query(mul(term.m, shift))));
  return acc;
}

template <class F>
struct Mirror {
  Poly<F> p;
  Monomial big;
};

/// P = Σ_{τ ∈ support} [τ]·M/τ with M = lcm(support).
template <class F>
Mirror<F> mirror_series(const Ring<F>& ring, const Table<F>& t, const MonomialSet& support) {
  Monomial big(ring.nvars());
  for (const auto& s : support) big = lcm(big, s);
  std::vector<Term<F>> terms;
  terms.reserve(support.size());
  for (const auto& s : support) terms.push_back({quotient(big, s), t.query(s)});
  return {ring.canonical(std::move(terms)), big};
}

// ---------------------------------------------------------------------------
// Tables driven by a Groebner basis

/// w_i = Σ_s initial[s]·coeff_s(NF(x^i, G)).
template <class F>
Table<F> table_from_gb(const F& field, const GroebnerBasis<F>& gb,
                       const std::map<std::vector<unsigned>, typename F::value_type>& initial) {
  using scalar = typename F::value_type;
  const MonomialOrder& ord = gb.order;
  std::size_t n = ord.nvars();
  F k = field.without_counter();
  Ring<F> ring(k, ord);
  auto stairs = staircase_of(gb.leading_monomials(), ord);
  if (!stairs) throw TableError("infinite staircase: the basis is not zero-dimensional");
  MonomialSet S = *stairs;
  std::size_t N = S.size();
  auto position = [&S, &ord](const Monomial& m) -> std::ptrdiff_t {
    auto it = std::lower_bound(S.begin(), S.end(), m, [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
    return (it != S.end() && *it == m) ? it - S.begin() : -1;
  };
  // multiplication matrices: mult[i][col] = NF(x_i · S[col]) as a dense vector
  auto mult = std::make_shared<std::vector<std::vector<std::vector<scalar>>>>(
      n, std::vector<std::vector<scalar>>(N, std::vector<scalar>(N, k.zero())));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t col = 0; col < N; ++col) {
      auto nf = ring.normal_form_remainder(ring.monomial(mul(Monomial::var(n, i), S[col])), gb.relations);
      for (const auto& term : nf.terms) {
        auto pos = position(term.m);
        if (pos < 0) throw TableError("normal form left the staircase; relations are not a Groebner basis");
        (*mult)[i][col][static_cast<std::size_t>(pos)] = term.c;
      }
    }
  auto lambda = std::make_shared<std::vector<scalar>>(N, k.zero());
  for (const auto& [exps, v] : initial) {
    if (exps.size() != n) throw TableError("initial value index has wrong dimension");
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, exps[i]);
    auto pos = position(m);
    if (pos < 0) throw TableError("initial value outside the staircase at " + index_string(m));
    (*lambda)[static_cast<std::size_t>(pos)] = v;
  }
  struct Memo {
    std::mutex mutex;
    std::unordered_map<Monomial, std::vector<scalar>, MonomialHash> vec;
  };
  auto memo = std::make_shared<Memo>();
  auto one_pos = position(Monomial(n));
  return Table<F>(
      k, n,
      [k, n, N, mult, lambda, memo, one_pos](const Monomial& idx) {
        std::lock_guard<std::mutex> lock(memo->mutex);
        std::function<const std::vector<scalar>&(const Monomial&)> nf_vec = [&](const Monomial& m) -> const std::vector<scalar>& {
          auto it = memo->vec.find(m);
          if (it != memo->vec.end()) return it->second;
          std::vector<scalar> v(N, k.zero());
          if (m.is_one()) {
            if (one_pos >= 0) v[static_cast<std::size_t>(one_pos)] = k.one();
          } else {
            std::size_t var = 0;
            while (m[var] == 0) ++var;
            Monomial prev = m;
            prev.set(var, m[var] - 1);
            std::vector<scalar> base = nf_vec(prev);
            const auto& mat = (*mult)[var];
            for (std::size_t col = 0; col < N; ++col) {
              if (k.is_zero(base[col])) continue;
              for (std::size_t row = 0; row < N; ++row)
                if (!k.is_zero(mat[col][row])) v[row] = k.add(v[row], k.mul(base[col], mat[col][row]));
            }
          }
          return memo->vec.emplace(m, std::move(v)).first->second;
        };
        // walk down along the first variable iteratively to keep recursion shallow
        std::vector<Monomial> chain;
        Monomial cur = idx;
        while (!memo->vec.count(cur) && !cur.is_one()) {
          chain.push_back(cur);
          std::size_t var = 0;
          while (cur[var] == 0) ++var;
          cur.set(var, cur[var] - 1);
        }
        nf_vec(cur);
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) nf_vec(*it);
        const auto& v = nf_vec(idx);
        scalar acc = k.zero();
        for (std::size_t s = 0; s < N; ++s)
          if (!k.is_zero(v[s])) acc = k.add(acc, k.mul(v[s], (*lambda)[s]));
        (void)n;
        return acc;
      },
      "gb-table");
}

// ---------------------------------------------------------------------------
// Point ideals: reduced Groebner basis of the vanishing ideal of distinct points

template <class F>
GroebnerBasis<F> points_ideal_gb(const F& field, const MonomialOrder& ord,
                                 const std::vector<std::vector<typename F::value_type>>& points) {
  using scalar = typename F::value_type;
  F k = field.without_counter();
  Ring<F> ring(k, ord);
  std::size_t n = ord.nvars();
  std::size_t N = points.size();
  auto eval = [&](const Monomial& m) {
    std::vector<scalar> v(N, k.one());
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t i = 0; i < n; ++i)
        for (unsigned e = 0; e < m[i]; ++e) v[p] = k.mul(v[p], points[p][i]);
    return v;
  };
  // echelon rows over the evaluation vectors of staircase monomials, each row
  // carrying its expression in staircase monomials
  struct Row {
    std::vector<scalar> v;
    std::size_t pivot;
    std::vector<scalar> combo;  // coefficients on staircase monomials
  };
  std::vector<Row> rows;
  MonomialSet staircase;
  GroebnerBasis<F> gb;
  gb.order = ord;
  MonomialSet lms;
  MonomialWalker walk(ord);
  bool dirty = true;
  while (true) {
    if (dirty && staircase.size() == N) {
      bool done = true;
      for (const auto& h : border(staircase, ord))
        if (!in_ideal(h, lms)) done = false;
      if (done) break;
      dirty = false;
    }
    const Monomial m = walk.current();
    walk.advance();
    if (in_ideal(m, lms)) continue;
    dirty = true;
    std::vector<scalar> v = eval(m);
    std::vector<scalar> combo(staircase.size() + 1, k.zero());
    combo.back() = k.one();
    for (const auto& r : rows) {
      scalar c = v[r.pivot];
      if (k.is_zero(c)) continue;
      for (std::size_t p = 0; p < N; ++p) v[p] = k.sub(v[p], k.mul(c, r.v[p]));
      for (std::size_t s = 0; s < r.combo.size(); ++s) combo[s] = k.sub(combo[s], k.mul(c, r.combo[s]));
    }
    std::size_t pivot = N;
    for (std::size_t p = 0; p < N; ++p)
      if (!k.is_zero(v[p])) {
        pivot = p;
        break;
      }
    if (pivot == N) {
      std::vector<Term<F>> terms;
      for (std::size_t s = 0; s < staircase.size(); ++s) terms.push_back({staircase[s], combo[s]});
      terms.push_back({m, combo.back()});
      gb.relations.push_back(ring.canonical(std::move(terms)));
      lms.push_back(m);
    } else {
      scalar inv = k.inv(v[pivot]);
      for (auto& x : v) x = k.mul(x, inv);
      for (auto& x : combo) x = k.mul(x, inv);
      staircase.push_back(m);
      for (auto& r : rows) r.combo.resize(staircase.size(), k.zero());
      rows.push_back({std::move(v), pivot, std::move(combo)});
    }
    if (staircase.size() > N) throw TableError("point evaluation rank exceeds point count");
  }
  gb.staircase = staircase;
  sort_unique(gb.staircase, ord);
  std::sort(gb.relations.begin(), gb.relations.end(),
            [&](const Poly<F>& a, const Poly<F>& b) { return ord.less(a.terms.front().m, b.terms.front().m); });
  return gb;
}

// ---------------------------------------------------------------------------
// Benchmark families

enum class Family { rectangle, lshape, simplex };

inline Family parse_family(std::string_view s) {
  if (s == "rectangle") return Family::rectangle;
  if (s == "lshape" || s == "l-shape") return Family::lshape;
  if (s == "simplex") return Family::simplex;
  throw TableError("unknown family '" + std::string(s) + "'");
}

inline std::string family_name(Family f) {
  switch (f) {
    case Family::rectangle: return "rectangle";
    case Family::lshape: return "lshape";
    case Family::simplex: return "simplex";
  }
  return "?";
}

/// Leading monomials of the family's Groebner basis.
inline MonomialSet family_leading_monomials(Family kind, std::size_t n, unsigned d, const MonomialOrder& ord) {
  MonomialSet lms;
  if (n != 2 && n != 3) throw TableError("families are defined for n = 2 or 3");
  if (d < 2) throw TableError("family degree must be at least 2");
  switch (kind) {
    case Family::rectangle:
      lms.push_back(Monomial::var(n, 0, d));
      lms.push_back(Monomial::var(n, 1, d / 2));
      if (n == 3) lms.push_back(Monomial::var(n, 2, (d + 2) / 3));
      break;
    case Family::lshape:
      for (std::size_t i = 0; i < n; ++i) lms.push_back(Monomial::var(n, i, d));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) lms.push_back(mul(Monomial::var(n, i), Monomial::var(n, j)));
      break;
    case Family::simplex: {
      Monomial top = Monomial::var(n, 0, d);
      for (const auto& m : enumerate_below(top, MonomialOrder::drl(n)))
        if (m.total_degree() == d) lms.push_back(m);
      break;
    }
  }
  sort_unique(lms, ord);
  return lms;
}

template <class F>
struct GeneratedTable {
  Table<F> table;
  GroebnerBasis<F> gb;
};

namespace detail {

template <class F>
std::vector<typename F::value_type> distinct_values(const F& k, std::mt19937_64& rng, std::size_t count, bool allow_zero) {
  std::uint64_t p = k.modulus();
  std::vector<typename F::value_type> out;
  while (out.size() < count) {
    auto v = k.from_int(static_cast<std::int64_t>(rng() % p));
    if (!allow_zero && k.is_zero(v)) continue;
    if (std::find(out.begin(), out.end(), v) != out.end()) continue;
    out.push_back(v);
  }
  return out;
}

/// Rank of the Hankel matrix H_{S,S} of a table, for nondegeneracy checks.
template <class F>
std::size_t hankel_rank(const Table<F>& t, const MonomialSet& s) {
  const F& k = t.field();
  std::size_t N = s.size();
  std::vector<std::vector<typename F::value_type>> h(N, std::vector<typename F::value_type>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) h[i][j] = t.query(mul(s[i], s[j]));
  std::size_t rank = 0;
  for (std::size_t col = 0; col < N && rank < N; ++col) {
    std::size_t piv = rank;
    while (piv < N && k.is_zero(h[piv][col])) ++piv;
    if (piv == N) continue;
    std::swap(h[piv], h[rank]);
    auto inv = k.inv(h[rank][col]);
    for (std::size_t r = rank + 1; r < N; ++r) {
      if (k.is_zero(h[r][col])) continue;
      auto c = k.mul(h[r][col], inv);
      for (std::size_t j = col; j < N; ++j) h[r][j] = k.sub(h[r][j], k.mul(c, h[rank][j]));
    }
    ++rank;
  }
  return rank;
}

/// Random initial values on the staircase giving a nondegenerate functional.
template <class F>
GeneratedTable<F> table_with_random_functional(const F& k, const GroebnerBasis<F>& gb, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::map<std::vector<unsigned>, typename F::value_type> init;
    for (const auto& s : gb.staircase) {
      std::vector<unsigned> e(s.nvars());
      for (std::size_t i = 0; i < s.nvars(); ++i) e[i] = s[i];
      init[e] = k.from_int(static_cast<std::int64_t>(rng() % k.modulus()));
    }
    Table<F> t = table_from_gb(k, gb, init);
    if (hankel_rank(t, gb.staircase) == gb.staircase.size()) return {t.fresh(), gb};
  }
  throw TableError("could not draw a nondegenerate functional");
}

/// x_i -> x_i + sum of c_j x_j over smaller variables of no larger weight,
/// plus a translation. Leading monomials are unchanged; tails get dense.
inline void triangular_shift(const PrimeField& k, const MonomialOrder& ord, std::mt19937_64& rng,
                             std::vector<std::vector<PrimeField::value_type>>& pts) {
  const auto& prec = ord.precedence();
  const std::size_t n = prec.size();
  auto draw = [&] { return k.from_int(static_cast<std::int64_t>(rng() % k.modulus())); };
  std::vector<std::vector<PrimeField::value_type>> c(n, std::vector<PrimeField::value_type>(n, k.zero()));
  std::vector<PrimeField::value_type> t(n);
  for (std::size_t r = 0; r < n; ++r) {
    t[prec[r]] = draw();
    for (std::size_t s = r + 1; s < n; ++s)
      if (ord.weights()[prec[s]] <= ord.weights()[prec[r]]) c[prec[r]][prec[s]] = draw();
  }
  for (auto& p : pts) {
    std::vector<PrimeField::value_type> q = p;
    for (std::size_t i = 0; i < n; ++i) {
      q[i] = k.add(p[i], t[i]);
      for (std::size_t j = 0; j < n; ++j)
        if (!k.is_zero(c[i][j])) q[i] = k.add(q[i], k.mul(c[i][j], p[j]));
    }
    p = std::move(q);
  }
}

}  // namespace detail

/// Random table whose relation ideal has the family's Groebner basis shape.
/// The basis is the vanishing ideal of a random point configuration realizing
/// the requested staircase.
inline GeneratedTable<PrimeField> family_table(Family kind, std::size_t n, unsigned d, std::uint64_t seed,
                                               const PrimeField& field, const MonomialOrder& ord) {
  MonomialSet expected = family_leading_monomials(kind, n, d, ord);
  PrimeField k = field.without_counter();
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::vector<std::vector<PrimeField::value_type>> pts;
    switch (kind) {
      case Family::rectangle: {
        std::vector<unsigned> sides = {d, d / 2};
        if (n == 3) sides.push_back((d + 2) / 3);
        std::vector<std::vector<PrimeField::value_type>> axis;
        for (auto s : sides) axis.push_back(detail::distinct_values(k, rng, s, true));
        std::vector<std::size_t> idx(n, 0);
        while (true) {
          std::vector<PrimeField::value_type> p(n);
          for (std::size_t i = 0; i < n; ++i) p[i] = axis[i][idx[i]];
          pts.push_back(p);
          std::size_t i = 0;
          while (i < n && ++idx[i] == sides[i]) idx[i++] = 0;
          if (i == n) break;
        }
        break;
      }
      case Family::lshape: {
        pts.push_back(std::vector<PrimeField::value_type>(n, k.zero()));
        for (std::size_t i = 0; i < n; ++i)
          for (auto v : detail::distinct_values(k, rng, d - 1, false)) {
            std::vector<PrimeField::value_type> p(n, k.zero());
            p[i] = v;
            pts.push_back(p);
          }
        break;
      }
      case Family::simplex: {
        std::size_t count = 0;
        for (const auto& m : enumerate_below(Monomial::var(n, 0, d), MonomialOrder::drl(n)))
          if (m.total_degree() < d) ++count;
        while (pts.size() < count) {
          std::vector<PrimeField::value_type> p(n);
          for (auto& c : p) c = k.from_int(static_cast<std::int64_t>(rng() % k.modulus()));
          if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
        }
        break;
      }
    }
    detail::triangular_shift(k, ord, rng, pts);
    GroebnerBasis<PrimeField> gb = points_ideal_gb(k, ord, pts);
    if (gb.leading_monomials() != expected) continue;
    return detail::table_with_random_functional(k, gb, rng);
  }
  throw TableError("could not realize the family staircase");
}

/// Random zero-dimensional radical ideal: random points taken from a random grid.
inline GeneratedTable<PrimeField> random_points_table(std::size_t n, std::size_t npoints, std::uint64_t seed,
                                                     const PrimeField& field, const MonomialOrder& ord) {
  PrimeField k = field.without_counter();
  std::mt19937_64 rng(seed);
  std::size_t side = n == 1 ? npoints : (n == 2 ? 5 : 3);
  std::vector<std::vector<PrimeField::value_type>> axis;
  for (std::size_t i = 0; i < n; ++i) axis.push_back(detail::distinct_values(k, rng, side, true));
  std::vector<std::vector<PrimeField::value_type>> grid;
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    std::vector<PrimeField::value_type> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = axis[i][idx[i]];
    grid.push_back(p);
    std::size_t i = 0;
    while (i < n && ++idx[i] == side) idx[i++] = 0;
    if (i == n) break;
  }
  std::shuffle(grid.begin(), grid.end(), rng);
  grid.resize(std::min(npoints, grid.size()));
  GroebnerBasis<PrimeField> gb = points_ideal_gb(k, ord, grid);
  return detail::table_with_random_functional(k, gb, rng);
}

/// Random 1-D sequence satisfying a random monic recurrence of the given order.
inline GeneratedTable<PrimeField> random_recurrent_1d(unsigned order, std::uint64_t seed, const PrimeField& field) {
  PrimeField k = field.without_counter();
  std::mt19937_64 rng(seed);
  MonomialOrder ord = MonomialOrder::drl(1);
  Ring<PrimeField> ring(k, ord);
  std::vector<Term<PrimeField>> terms{{Monomial::var(1, 0, order), k.one()}};
  for (unsigned e = 0; e < order; ++e)
    terms.push_back({Monomial::var(1, 0, e), k.from_int(static_cast<std::int64_t>(rng() % k.modulus()))});
  GroebnerBasis<PrimeField> gb;
  gb.order = ord;
  gb.relations.push_back(ring.canonical(std::move(terms)));
  gb.staircase = *staircase_of(gb.leading_monomials(), ord);
  return detail::table_with_random_functional(k, gb, rng);
}

// ---------------------------------------------------------------------------
// Built-in tables

inline std::uint64_t nth_prime(std::uint64_t k) {
  std::uint64_t count = 0;
  for (std::uint64_t c = 2;; ++c)
    if (PrimeField::is_prime(c) && ++count == k) return c;
}

template <class F>
Table<F> builtin_table(const std::string& spec, const F& field) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.empty()) throw TableError("empty builtin name");
  const std::string& name = parts[0];
  F k = field.without_counter();
  auto arg = [&](std::size_t i) -> std::uint64_t {
    if (parts.size() <= i) throw TableError("builtin '" + name + "' needs more arguments");
    return std::stoull(parts[i]);
  };
  if (name == "binomial") {
    return Table<F>(k, 2, [k](const Monomial& i) {
      if (i[1] > i[0]) return k.zero();
      mpz_class z;
      mpz_bin_uiui(z.get_mpz_t(), i[0], i[1]);
      return k.from_mpz(z);
    }, name);
  }
  if (name == "fibonacci") {
    return Table<F>(k, 1, [k](const Monomial& i) {
      mpz_class z;
      mpz_fib_ui(z.get_mpz_t(), i[0] + 1);
      return k.from_mpz(z);
    }, name);
  }
  if (name == "pascal-variant") {
    return Table<F>(k, 2, [k](const Monomial& i) {
      std::int64_t a = i[0], b = i[1];
      std::int64_t sign = ((a + b) % 2 == 0) ? 1 : -1;
      return k.from_int((2 * a + 1) + (2 * b - 1) * sign);
    }, name);
  }
  if (name == "adaptive-example") {
    static const int base[2][10] = {{6, 9, 5, 1, 10, -6, -9, -5, -1, -10}, {3, 12, 2, 4, 7, -3, -12, -2, -4, -7}};
    return Table<F>(k, 2, [k](const Monomial& i) { return k.from_int(base[i[0] % 2][i[1] % 10]); }, name);
  }
  if (name == "primes") {
    std::size_t n = arg(1);
    std::uint64_t d = arg(2);
    if (n == 0 || n > kMaxVars) throw TableError("primes: bad dimension");
    return Table<F>(k, n, [k, d](const Monomial& i) {
      if (i[0] >= d) return k.zero();
      return k.from_int(static_cast<std::int64_t>(nth_prime(i[0] + 1)));
    }, spec);
  }
  if (name == "geometric") {
    std::vector<std::int64_t> ratios;
    for (std::size_t j = 1; j < parts.size(); ++j) ratios.push_back(std::stoll(parts[j]));
    if (ratios.empty() || ratios.size() > kMaxVars) throw TableError("geometric: give one ratio per variable");
    return Table<F>(k, ratios.size(), [k, ratios](const Monomial& i) {
      auto v = k.one();
      for (std::size_t j = 0; j < ratios.size(); ++j)
        for (unsigned e = 0; e < i[j]; ++e) v = k.mul(v, k.from_int(ratios[j]));
      return v;
    }, spec);
  }
  if (name == "zero") {
    std::size_t n = parts.size() > 1 ? arg(1) : 2;
    return Table<F>(k, n, [k](const Monomial&) { return k.zero(); }, spec);
  }
  throw TableError("unknown builtin table '" + name + "'");
}

// ---------------------------------------------------------------------------
// Table files: `dim n`, `field <spec>`, then `i1 ... in value` lines

struct TableFile {
  std::size_t n = 0;
  FieldSpec field;
  std::vector<std::pair<std::vector<unsigned>, std::string>> entries;
};

inline TableFile read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw TableError("cannot open table file " + path);
  TableFile tf;
  bool have_dim = false, have_field = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "dim") {
      if (!(ls >> tf.n) || tf.n == 0 || tf.n > kMaxVars) throw TableError(path + ":" + std::to_string(lineno) + ": bad dim");
      have_dim = true;
      continue;
    }
    if (first == "field") {
      std::string f;
      ls >> f;
      tf.field = FieldSpec::parse(f);
      have_field = true;
      continue;
    }
    if (!have_dim) throw TableError(path + ": entries before 'dim' header");
    std::vector<std::string> tokens{first};
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.size() != tf.n + 1) throw TableError(path + ":" + std::to_string(lineno) + ": expected " + std::to_string(tf.n) + " indices and a value");
    std::vector<unsigned> idx;
    for (std::size_t i = 0; i < tf.n; ++i) {
      try {
        idx.push_back(static_cast<unsigned>(std::stoul(tokens[i])));
      } catch (const std::exception&) {
        throw TableError(path + ":" + std::to_string(lineno) + ": bad index '" + tokens[i] + "'");
      }
    }
    tf.entries.emplace_back(std::move(idx), tokens.back());
  }
  if (!have_dim) throw TableError(path + ": missing 'dim' header");
  if (!have_field) tf.field = FieldSpec::parse("rational");
  return tf;
}

template <class F>
Table<F> file_table(const TableFile& tf, const F& field, const std::string& name = "file") {
  if (!(spec_of(field) == tf.field))
    throw FieldError("mismatched field contexts: table file is over " + tf.field.to_string() + ", computation over " + field.spec());
  F k = field.without_counter();
  auto data = std::make_shared<std::unordered_map<Monomial, typename F::value_type, MonomialHash>>();
  for (const auto& [idx, v] : tf.entries) {
    Monomial m(tf.n);
    for (std::size_t i = 0; i < tf.n; ++i) m.set(i, idx[i]);
    (*data)[m] = k.parse(v);
  }
  return Table<F>(k, tf.n, [data](const Monomial& i) {
    auto it = data->find(i);
    if (it == data->end()) throw UnavailableTerm("table term " + index_string(i) + " is not available");
    return it->second;
  }, name);
}

/// Writes every index of the box [0, dims[0]) × ... as a table file.
template <class F>
void write_table_window(std::ostream& out, const Table<F>& t, const std::vector<unsigned>& dims) {
  if (dims.size() != t.nvars()) throw TableError("window dimension differs from table dimension");
  out << "dim " << t.nvars() << "\n";
  out << "field " << t.field().spec() << "\n";
  std::vector<unsigned> idx(dims.size(), 0);
  for (auto d : dims)
    if (d == 0) return;
  while (true) {
    Monomial m(t.nvars());
    for (std::size_t i = 0; i < idx.size(); ++i) {
      m.set(i, idx[i]);
      out << idx[i] << ' ';
    }
    out << t.field().to_string(t.query(m)) << "\n";
    std::size_t i = idx.size();
    while (i-- > 0) {
      if (++idx[i] < dims[i]) break;
      idx[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace seqrel
