// Monomials, weight orderings, enumeration and staircase combinatorics.
#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seqrel {

inline constexpr std::size_t kMaxVars = 8;

class MonomialError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exponent vector x_1^{e_1}...x_n^{e_n} with checked 16-bit exponents.
/// A separate zero sentinel stands for lm(0).
class Monomial {
 public:
  using exponent_type = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t n) : n_(check_nvars(n)) {}
  Monomial(std::size_t n, std::initializer_list<unsigned> exps) : n_(check_nvars(n)) {
    if (exps.size() != n) throw MonomialError("exponent list length differs from dimension");
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }

  static Monomial zero_sentinel(std::size_t n) {
    Monomial m(n);
    m.zero_ = true;
    return m;
  }
  static Monomial var(std::size_t n, std::size_t i, unsigned e = 1) {
    Monomial m(n);
    m.set(i, e);
    return m;
  }

  std::size_t nvars() const { return n_; }
  bool is_zero_sentinel() const { return zero_; }
  bool is_one() const {
    if (zero_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (exp_[i]) return false;
    return true;
  }

  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, std::uint64_t e) {
    if (i >= n_) throw MonomialError("variable index out of range");
    if (e > std::numeric_limits<exponent_type>::max()) throw MonomialError("exponent overflow");
    exp_[i] = static_cast<exponent_type>(e);
  }

  std::uint64_t total_degree() const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += exp_[i];
    return d;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.zero_ == b.zero_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const {
    std::size_t h = n_ * 0x9e3779b97f4a7c15ULL + (zero_ ? 1 : 0);
    for (std::size_t i = 0; i < n_; ++i) h = (h ^ exp_[i]) * 0x100000001b3ULL;
    return h;
  }

 private:
  static std::uint8_t check_nvars(std::size_t n) {
    if (n == 0 || n > kMaxVars)
      throw MonomialError("number of variables must be in 1.." + std::to_string(kMaxVars));
    return static_cast<std::uint8_t>(n);
  }

  std::array<exponent_type, kMaxVars> exp_{};
  std::uint8_t n_ = 0;
  bool zero_ = false;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

inline void require_same_nvars(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw MonomialError("dimension mismatch between monomials");
}

inline Monomial one_monomial(std::size_t n) { return Monomial(n); }

inline Monomial mul(const Monomial& a, const Monomial& b) {
  require_same_nvars(a, b);
  if (a.is_zero_sentinel() || b.is_zero_sentinel()) return Monomial::zero_sentinel(a.nvars());
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) r.set(i, std::uint64_t(a[i]) + b[i]);
  return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  require_same_nvars(a, b);
  if (a.is_zero_sentinel() || b.is_zero_sentinel()) return false;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// b / a; requires a | b.
inline Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) throw MonomialError("quotient of non-divisible monomials");
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) r.set(i, b[i] - a[i]);
  return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_nvars(a, b);
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) r.set(i, std::max(a[i], b[i]));
  return r;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_nvars(a, b);
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) r.set(i, std::min(a[i], b[i]));
  return r;
}

inline Monomial pow(const Monomial& a, unsigned k) {
  Monomial r(a.nvars());
  for (std::size_t i = 0; i < a.nvars(); ++i) r.set(i, std::uint64_t(a[i]) * k);
  return r;
}

// ---------------------------------------------------------------------------
// Variable names

inline std::string var_name(std::size_t n, std::size_t i) {
  if (n <= 3) return std::string(1, "xyz"[i]);
  return "x" + std::to_string(i + 1);
}

/// Index of a variable name, or nullopt.
inline std::optional<std::size_t> var_index(std::string_view name, std::size_t n) {
  if (n <= 3 && name.size() == 1) {
    for (std::size_t i = 0; i < n; ++i)
      if (name[0] == "xyz"[i]) return i;
  }
  if (name.size() >= 2 && name[0] == 'x') {
    std::size_t k = 0;
    for (char c : name.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      k = k * 10 + static_cast<std::size_t>(c - '0');
    }
    if (k >= 1 && k <= n) return k - 1;
  }
  return std::nullopt;
}

inline std::string to_string(const Monomial& m) {
  if (m.is_zero_sentinel()) return "0";
  std::string s;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += var_name(m.nvars(), i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

namespace detail {
inline std::string strip(std::string_view s) {
  std::string r;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r += c;
  return r;
}
}  // namespace detail

/// Parses `x^2*y`, `x1^2*x2` or `1`.
inline Monomial parse_monomial(std::string_view text, std::size_t n) {
  std::string s = detail::strip(text);
  Monomial m(n);
  if (s.empty()) throw MonomialError("empty monomial");
  if (s == "1") return m;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find('*', pos);
    if (end == std::string::npos) end = s.size();
    std::string factor = s.substr(pos, end - pos);
    std::uint64_t e = 1;
    auto caret = factor.find('^');
    std::string name = factor.substr(0, caret);
    if (caret != std::string::npos) {
      std::string es = factor.substr(caret + 1);
      if (es.empty() || !std::all_of(es.begin(), es.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw MonomialError("bad exponent in '" + std::string(text) + "'");
      e = std::stoull(es);
    }
    if (name != "1") {
      auto idx = var_index(name, n);
      if (!idx) throw MonomialError("unknown variable '" + name + "' in '" + std::string(text) + "'");
      m.set(*idx, std::uint64_t(m[*idx]) + e);
    }
    pos = end + 1;
  }
  return m;
}

// ---------------------------------------------------------------------------
// Orderings

enum class OrderKind { drl, lex, wdeg };

enum class Cmp { less = -1, equal = 0, greater = 1 };

/// A monomial ordering over n variables. `precedence` lists variable indices
/// from the greatest to the least variable.
class MonomialOrder {
 public:
  MonomialOrder() = default;

  static MonomialOrder drl(std::size_t n) { return make(OrderKind::drl, n, {}, {}); }
  static MonomialOrder lex(std::size_t n) { return make(OrderKind::lex, n, {}, {}); }
  static MonomialOrder make(OrderKind kind, std::size_t n, std::vector<std::uint64_t> weights,
                            std::vector<std::size_t> precedence) {
    if (n == 0 || n > kMaxVars) throw MonomialError("bad number of variables");
    MonomialOrder o;
    o.kind_ = kind;
    o.n_ = n;
    if (weights.empty()) weights.assign(n, 1);
    if (weights.size() != n) throw MonomialError("weight vector length differs from dimension");
    for (auto w : weights)
      if (w == 0) throw MonomialError("weights must be positive");
    if (precedence.empty())
      for (std::size_t i = 0; i < n; ++i) precedence.push_back(i);
    std::vector<std::size_t> check = precedence;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < n; ++i)
      if (check.size() != n || check[i] != i) throw MonomialError("precedence is not a permutation");
    o.weights_ = std::move(weights);
    o.prec_ = std::move(precedence);
    return o;
  }

  /// Parses `drl(z<y<x)`, `lex(y<x)`, `wdeg(w1,...,wn; z<y<x)`, or a bare kind.
  static MonomialOrder parse(std::string_view text, std::size_t n) {
    std::string s = detail::strip(text);
    auto open = s.find('(');
    std::string kind_s = s.substr(0, open);
    OrderKind kind;
    if (kind_s == "drl" || kind_s == "grevlex" || kind_s == "degrevlex") kind = OrderKind::drl;
    else if (kind_s == "lex") kind = OrderKind::lex;
    else if (kind_s == "wdeg") kind = OrderKind::wdeg;
    else throw MonomialError("unknown ordering '" + std::string(text) + "'");
    if (open == std::string::npos) {
      if (kind == OrderKind::wdeg) throw MonomialError("wdeg needs weights");
      return make(kind, n, {}, {});
    }
    if (s.back() != ')') throw MonomialError("unbalanced ordering '" + std::string(text) + "'");
    std::string body = s.substr(open + 1, s.size() - open - 2);
    std::vector<std::uint64_t> weights;
    if (kind == OrderKind::wdeg) {
      auto semi = body.find(';');
      std::string ws = body.substr(0, semi);
      body = semi == std::string::npos ? "" : body.substr(semi + 1);
      std::size_t p = 0;
      while (p <= ws.size()) {
        auto c = ws.find(',', p);
        if (c == std::string::npos) c = ws.size();
        std::string item = ws.substr(p, c - p);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
          throw MonomialError("bad weight in '" + std::string(text) + "'");
        weights.push_back(std::stoull(item));
        p = c + 1;
      }
    }
    std::vector<std::size_t> prec;
    if (!body.empty()) {
      std::vector<std::size_t> least_first;
      std::size_t p = 0;
      while (p <= body.size()) {
        auto c = body.find('<', p);
        if (c == std::string::npos) c = body.size();
        std::string name = body.substr(p, c - p);
        auto idx = var_index(name, n);
        if (!idx) throw MonomialError("unknown variable '" + name + "' in ordering");
        least_first.push_back(*idx);
        p = c + 1;
      }
      prec.assign(least_first.rbegin(), least_first.rend());
    }
    return make(kind, n, std::move(weights), std::move(prec));
  }

  std::string to_string() const {
    std::string s = kind_ == OrderKind::drl ? "drl(" : kind_ == OrderKind::lex ? "lex(" : "wdeg(";
    if (kind_ == OrderKind::wdeg) {
      for (std::size_t i = 0; i < n_; ++i) s += (i ? "," : "") + std::to_string(weights_[i]);
      s += "; ";
    }
    for (std::size_t k = n_; k-- > 0;) s += var_name(n_, prec_[k]) + (k ? "<" : "");
    return s + ")";
  }

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return n_; }
  bool is_weight_order() const { return kind_ != OrderKind::lex; }
  const std::vector<std::uint64_t>& weights() const { return weights_; }
  const std::vector<std::size_t>& precedence() const { return prec_; }

  std::uint64_t weighted_degree(const Monomial& m) const {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += weights_[i] * m[i];
    return d;
  }

  Cmp compare(const Monomial& a, const Monomial& b) const {
    if (a.is_zero_sentinel() || b.is_zero_sentinel()) {
      if (a.is_zero_sentinel() && b.is_zero_sentinel()) return Cmp::equal;
      return a.is_zero_sentinel() ? Cmp::less : Cmp::greater;
    }
    if (a.nvars() != n_ || b.nvars() != n_) throw MonomialError("dimension mismatch in compare");
    if (kind_ == OrderKind::lex) {
      for (std::size_t v : prec_)
        if (a[v] != b[v]) return a[v] < b[v] ? Cmp::less : Cmp::greater;
      return Cmp::equal;
    }
    std::uint64_t da = weighted_degree(a), db = weighted_degree(b);
    if (da != db) return da < db ? Cmp::less : Cmp::greater;
    for (std::size_t k = n_; k-- > 0;) {
      std::size_t v = prec_[k];
      if (a[v] != b[v]) return a[v] > b[v] ? Cmp::less : Cmp::greater;
    }
    return Cmp::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::less; }
  bool less_equal(const Monomial& a, const Monomial& b) const { return compare(a, b) != Cmp::greater; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::greater; }

  const Monomial& max(const Monomial& a, const Monomial& b) const { return less(a, b) ? b : a; }

  /// All monomials of weighted degree exactly w, sorted increasingly.
  std::vector<Monomial> level(std::uint64_t w) const {
    require_weight_order();
    std::vector<Monomial> out;
    Monomial cur(n_);
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
      if (i + 1 == n_) {
        if (left % weights_[i] == 0) {
          cur.set(i, left / weights_[i]);
          out.push_back(cur);
        }
        return;
      }
      for (std::uint64_t e = 0; e * weights_[i] <= left; ++e) {
        cur.set(i, e);
        rec(i + 1, left - e * weights_[i]);
      }
      cur.set(i, 0);
    };
    rec(0, w);
    std::sort(out.begin(), out.end(), [this](const Monomial& a, const Monomial& b) { return less(a, b); });
    return out;
  }

  void require_weight_order() const {
    if (!is_weight_order())
      throw MonomialError("operation requires a weight ordering; lexicographic order has no successor");
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  OrderKind kind_ = OrderKind::drl;
  std::size_t n_ = 0;
  std::vector<std::uint64_t> weights_;
  std::vector<std::size_t> prec_;
};

inline Monomial successor(const Monomial& m, const MonomialOrder& ord) {
  ord.require_weight_order();
  std::uint64_t w = ord.weighted_degree(m);
  auto lvl = ord.level(w);
  auto it = std::lower_bound(lvl.begin(), lvl.end(), m, [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
  if (it != lvl.end() && std::next(it) != lvl.end()) return *std::next(it);
  for (std::uint64_t v = w + 1;; ++v) {
    auto next = ord.level(v);
    if (!next.empty()) return next.front();
  }
}

inline Monomial predecessor(const Monomial& m, const MonomialOrder& ord) {
  ord.require_weight_order();
  if (m.is_one()) throw MonomialError("1 has no predecessor");
  std::uint64_t w = ord.weighted_degree(m);
  auto lvl = ord.level(w);
  auto it = std::lower_bound(lvl.begin(), lvl.end(), m, [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
  if (it != lvl.begin()) return *std::prev(it);
  for (std::uint64_t v = w; v-- > 0;) {
    auto prev = ord.level(v);
    if (!prev.empty()) return prev.back();
  }
  throw MonomialError("no predecessor");
}

/// Walks monomials in increasing order, one successor at a time, keeping the
/// current weight level cached.
class MonomialWalker {
 public:
  explicit MonomialWalker(const MonomialOrder& ord) : ord_(&ord) {
    ord.require_weight_order();
    level_ = ord.level(0);
  }
  const Monomial& current() const { return level_[idx_]; }
  void advance() {
    if (++idx_ < level_.size()) return;
    idx_ = 0;
    do {
      level_ = ord_->level(++w_);
    } while (level_.empty());
  }

 private:
  const MonomialOrder* ord_;
  std::uint64_t w_ = 0;
  std::vector<Monomial> level_;
  std::size_t idx_ = 0;
};

/// T[a]: all monomials m with m ⪯ a, increasing.
inline std::vector<Monomial> enumerate_below(const Monomial& a, const MonomialOrder& ord) {
  std::vector<Monomial> out;
  MonomialWalker walk(ord);
  while (ord.less_equal(walk.current(), a)) {
    out.push_back(walk.current());
    walk.advance();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monomial sets, kept sorted increasingly by the ordering

using MonomialSet = std::vector<Monomial>;

inline void sort_unique(MonomialSet& s, const MonomialOrder& ord) {
  std::sort(s.begin(), s.end(), [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline bool contains(const MonomialSet& sorted, const Monomial& m, const MonomialOrder& ord) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), m, [&](const Monomial& a, const Monomial& b) { return ord.less(a, b); });
  return it != sorted.end() && *it == m;
}

inline MonomialSet minkowski_sum(const MonomialSet& t, const MonomialSet& u, const MonomialOrder& ord) {
  MonomialSet out;
  out.reserve(t.size() * u.size());
  for (const auto& a : t)
    for (const auto& b : u) out.push_back(mul(a, b));
  sort_unique(out, ord);
  return out;
}

inline void for_each_divisor(const Monomial& m, const std::function<void(const Monomial&)>& f) {
  Monomial cur(m.nvars());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == m.nvars()) {
      f(cur);
      return;
    }
    for (unsigned e = 0; e <= m[i]; ++e) {
      cur.set(i, e);
      rec(i + 1);
    }
    cur.set(i, 0);
  };
  rec(0);
}

/// Divisor closure.
inline MonomialSet stabilize(const MonomialSet& s, const MonomialOrder& ord) {
  MonomialSet out;
  for (const auto& m : s) for_each_divisor(m, [&](const Monomial& d) { out.push_back(d); });
  sort_unique(out, ord);
  return out;
}

/// Divisibility-minimal monomials outside a divisor-closed set.
inline MonomialSet border(const MonomialSet& staircase, const MonomialOrder& ord) {
  std::size_t n = ord.nvars();
  if (staircase.empty()) return {Monomial(n)};
  MonomialSet sorted = staircase;
  sort_unique(sorted, ord);
  MonomialSet out;
  for (const auto& s : sorted) {
    for (std::size_t i = 0; i < n; ++i) {
      Monomial h = mul(s, Monomial::var(n, i));
      if (contains(sorted, h, ord)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j)
        if (h[j] && !contains(sorted, quotient(h, Monomial::var(n, j)), ord)) ok = false;
      if (ok) out.push_back(h);
    }
  }
  sort_unique(out, ord);
  return out;
}

/// Elements of `s` not divisible by another element of `s`.
inline MonomialSet minimal_generators(const MonomialSet& s, const MonomialOrder& ord) {
  MonomialSet sorted = s;
  sort_unique(sorted, ord);
  MonomialSet out;
  for (const auto& m : sorted) {
    bool redundant = false;
    for (const auto& g : out)
      if (divides(g, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  // A smaller monomial never is a proper multiple of a larger one, so the
  // increasing scan above already yields the minimal elements.
  return out;
}

inline bool in_ideal(const Monomial& m, const MonomialSet& gens) {
  for (const auto& g : gens)
    if (divides(g, m)) return true;
  return false;
}

/// Minimal generators of the ideal spanned by T[b·s] \ (T[b] + T[s]).
inline MonomialSet mask_generators(const Monomial& b, const Monomial& s, const MonomialOrder& ord) {
  if (b.is_one()) return {};
  MonomialSet tbs = enumerate_below(mul(b, s), ord);
  MonomialSet sum = minkowski_sum(enumerate_below(b, ord), enumerate_below(s, ord), ord);
  MonomialSet diff;
  for (const auto& m : tbs)
    if (!contains(sum, m, ord)) diff.push_back(m);
  return minimal_generators(diff, ord);
}

/// Monomials divisible by no element of `lms`; requires a pure power of every
/// variable among `lms` (finite staircase).
inline std::optional<MonomialSet> staircase_of(const MonomialSet& lms, const MonomialOrder& ord) {
  std::size_t n = ord.nvars();
  Monomial box(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    unsigned best = 0;
    for (const auto& g : lms) {
      bool pure = true;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i && g[j]) pure = false;
      if (pure && (!found || g[i] < best)) {
        best = g[i];
        found = true;
      }
    }
    if (!found) return std::nullopt;
    if (best == 0) return MonomialSet{};
    box.set(i, best - 1);
  }
  MonomialSet out;
  for_each_divisor(box, [&](const Monomial& m) {
    if (!in_ideal(m, lms)) out.push_back(m);
  });
  sort_unique(out, ord);
  return out;
}

}  // namespace seqrel
