// Exact coefficient fields with a per-computation multiplication counter.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace seqrel {

/// Counts base-field multiplications and divisions of one computation.
struct OpCounter {
  std::uint64_t mul_count = 0;
};

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Prime field F_p with p < 2^32.
class PrimeField {
 public:
  struct value_type {
    std::uint32_t v = 0;
    friend bool operator==(value_type, value_type) = default;
  };

  explicit PrimeField(std::uint64_t p = 65521) : p_(p) {
    if (p < 2 || p >= (1ULL << 32) || !is_prime(p))
      throw FieldError("modulus is not a prime below 2^32: " + std::to_string(p));
  }

  std::uint64_t modulus() const { return p_; }
  std::string spec() const { return "fp:" + std::to_string(p_); }

  PrimeField with_counter(OpCounter& c) const {
    PrimeField f = *this;
    f.counter_ = &c;
    return f;
  }
  PrimeField without_counter() const {
    PrimeField f = *this;
    f.counter_ = nullptr;
    return f;
  }
  OpCounter* counter() const { return counter_; }

  value_type zero() const { return {0}; }
  value_type one() const { return {1}; }
  value_type from_int(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return {static_cast<std::uint32_t>(r)};
  }
  value_type from_mpz(const mpz_class& z) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p_));
    return {static_cast<std::uint32_t>(r.get_ui())};
  }

  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t(a.v) + b.v;
    if (s >= p_) s -= p_;
    return {static_cast<std::uint32_t>(s)};
  }
  value_type sub(value_type a, value_type b) const {
    return {static_cast<std::uint32_t>(a.v >= b.v ? a.v - b.v : a.v + p_ - b.v)};
  }
  value_type neg(value_type a) const {
    return {static_cast<std::uint32_t>(a.v == 0 ? 0 : p_ - a.v)};
  }
  value_type mul(value_type a, value_type b) const {
    tick();
    return {static_cast<std::uint32_t>(std::uint64_t(a.v) * b.v % p_)};
  }
  value_type inv(value_type a) const {
    tick();
    return raw_inv(a);
  }
  value_type div(value_type a, value_type b) const {
    tick();
    return {static_cast<std::uint32_t>(std::uint64_t(a.v) * raw_inv(b).v % p_)};
  }

  bool is_zero(value_type a) const { return a.v == 0; }
  bool is_one(value_type a) const { return a.v == 1; }

  /// Symmetric representative, so p-1 prints as -1.
  std::string to_string(value_type a) const {
    if (a.v > p_ / 2) return "-" + std::to_string(p_ - a.v);
    return std::to_string(a.v);
  }
  /// Accepts integers and fractions a/b.
  value_type parse(std::string_view s) const {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return from_mpz(parse_int(s));
    value_type num = from_mpz(parse_int(s.substr(0, slash)));
    value_type den = from_mpz(parse_int(s.substr(slash + 1)));
    if (den.v == 0) throw FieldError("zero denominator in " + std::string(s));
    return {static_cast<std::uint32_t>(std::uint64_t(num.v) * raw_inv(den).v % p_)};
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

  static bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

 private:
  void tick() const {
    if (counter_) ++counter_->mul_count;
  }
  value_type raw_inv(value_type a) const {
    if (a.v == 0) throw FieldError("division by zero");
    // extended Euclid on (a, p)
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), newr = a.v;
    while (newr != 0) {
      std::int64_t q = r / newr;
      std::int64_t tmp = t - q * newt;
      t = newt;
      newt = tmp;
      tmp = r - q * newr;
      r = newr;
      newr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return {static_cast<std::uint32_t>(t)};
  }
  static mpz_class parse_int(std::string_view s) {
    std::string str(s);
    if (!str.empty() && str[0] == '+') str.erase(0, 1);
    mpz_class z;
    if (str.empty() || z.set_str(str, 10) != 0) throw FieldError("bad integer: " + std::string(s));
    return z;
  }

  std::uint64_t p_;
  OpCounter* counter_ = nullptr;
};

/// The rational numbers with arbitrary precision.
class RationalField {
 public:
  using value_type = mpq_class;

  std::string spec() const { return "rational"; }

  RationalField with_counter(OpCounter& c) const {
    RationalField f = *this;
    f.counter_ = &c;
    return f;
  }
  RationalField without_counter() const { return RationalField{}; }
  OpCounter* counter() const { return counter_; }

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(std::int64_t x) const {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(x));
    return value_type(z);
  }
  value_type from_mpz(const mpz_class& z) const { return value_type(z); }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const {
    tick();
    return a * b;
  }
  value_type inv(const value_type& a) const {
    tick();
    if (sgn(a) == 0) throw FieldError("division by zero");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const {
    tick();
    if (sgn(b) == 0) throw FieldError("division by zero");
    return a / b;
  }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }

  std::string to_string(const value_type& a) const { return a.get_str(); }
  value_type parse(std::string_view s) const {
    std::string str(s);
    if (!str.empty() && str[0] == '+') str.erase(0, 1);
    value_type q;
    if (str.empty() || q.set_str(str, 10) != 0) throw FieldError("bad rational: " + std::string(s));
    if (q.get_den() == 0) throw FieldError("zero denominator in " + std::string(s));
    q.canonicalize();
    return q;
  }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }

 private:
  void tick() const {
    if (counter_) ++counter_->mul_count;
  }
  OpCounter* counter_ = nullptr;
};

/// Parsed field selector: `fp:<prime>` or `rational`.
struct FieldSpec {
  bool rational = false;
  std::uint64_t prime = 65521;

  static FieldSpec parse(std::string_view s) {
    FieldSpec f;
    if (s == "rational" || s == "q" || s == "Q") {
      f.rational = true;
      return f;
    }
    if (s.rfind("fp:", 0) == 0) {
      std::string num(s.substr(3));
      try {
        std::size_t used = 0;
        f.prime = std::stoull(num, &used);
        if (used != num.size()) throw std::invalid_argument(num);
      } catch (const std::exception&) {
        throw FieldError("bad field modulus: " + std::string(s));
      }
      if (!PrimeField::is_prime(f.prime) || f.prime >= (1ULL << 32))
        throw FieldError("modulus is not a prime below 2^32: " + num);
      return f;
    }
    throw FieldError("unknown field: " + std::string(s) + " (expected fp:<prime> or rational)");
  }
  std::string to_string() const { return rational ? "rational" : "fp:" + std::to_string(prime); }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

template <class F>
FieldSpec spec_of(const F& f) {
  return FieldSpec::parse(f.spec());
}

/// Throws when two field contexts differ.
template <class F>
void require_same_field(const F& a, const F& b) {
  if (!(a == b)) throw FieldError("mismatched field contexts: " + a.spec() + " vs " + b.spec());
}

}  // namespace seqrel
