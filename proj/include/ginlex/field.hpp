#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "ginlex/error.hpp"

namespace ginlex {

/// The prime field GF(p) for an odd prime p below 2^31. Elements are stored as
/// canonical representatives in [0, p-1].
class PrimeField {
 public:
  using Elem = std::uint32_t;

  static constexpr std::uint32_t kDefaultPrime = 32003;
  static constexpr std::uint64_t kDefaultEntryBound = 99;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (p < 3 || p >= (1u << 31) || !is_prime(p)) {
      throw Error(ErrorKind::InvalidArgument, "field characteristic must be an odd prime below 2^31, got " +
                                                  std::to_string(p));
    }
  }

  std::uint32_t characteristic() const { return p_; }
  std::string name() const { return "gf " + std::to_string(p_); }
  std::uint64_t default_entry_bound() const { return kDefaultEntryBound; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  /// Decimal digits (optionally signed) reduced modulo p, any length.
  Elem from_decimal(std::string_view digits) const {
    bool negative = false;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
      negative = digits.front() == '-';
      digits.remove_prefix(1);
    }
    if (digits.empty()) throw Error(ErrorKind::Parse, "empty integer literal");
    std::uint64_t acc = 0;
    for (char c : digits) {
      if (c < '0' || c > '9') throw Error(ErrorKind::Parse, "bad digit in integer literal");
      acc = (acc * 10 + static_cast<std::uint64_t>(c - '0')) % p_;
    }
    Elem v = static_cast<Elem>(acc);
    return negative ? neg(v) : v;
  }

  Elem from_fraction(std::string_view num, std::string_view den) const {
    Elem d = from_decimal(den);
    if (d == 0) throw Error(ErrorKind::Parse, "denominator vanishes in " + name());
    return div(from_decimal(num), d);
  }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// a - b*c
  Elem submul(Elem a, Elem b, Elem c) const {
    return sub(a, mul(b, c));
  }

  Elem inv(Elem a) const {
    if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Elem>(t);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  /// Symmetric representative, so -1 prints as "-1" rather than p-1.
  std::string format(Elem a) const {
    if (a > p_ / 2) return "-" + std::to_string(p_ - a);
    return std::to_string(a);
  }
  bool is_negative(Elem a) const { return a > p_ / 2; }

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

 private:
  static bool is_prime(std::uint32_t n) {
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }

  std::uint32_t p_;
};

/// The rational numbers, exact, backed by GMP. mpq_class keeps values in
/// lowest terms with positive denominator.
class RationalField {
 public:
  using Elem = mpq_class;

  static constexpr std::uint64_t kDefaultEntryBound = 9;

  std::string name() const { return "qq"; }
  std::uint64_t default_entry_bound() const { return kDefaultEntryBound; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(std::int64_t v) const {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return Elem(z);
  }
  Elem from_decimal(std::string_view digits) const {
    std::string s(digits);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) throw Error(ErrorKind::Parse, "bad integer literal");
    return Elem(z);
  }
  Elem from_fraction(std::string_view num, std::string_view den) const {
    Elem d = from_decimal(den);
    if (d == 0) throw Error(ErrorKind::Parse, "zero denominator");
    return from_decimal(num) / d;
  }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem submul(const Elem& a, const Elem& b, const Elem& c) const { return a - b * c; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
    return 1 / a;
  }
  Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }

  std::string format(const Elem& a) const { return a.get_str(); }
  bool is_negative(const Elem& a) const { return sgn(a) < 0; }

  bool operator==(const RationalField&) const { return true; }
};

template <class F>
concept CoefficientField = requires(const F& f, const typename F::Elem& a, std::string_view s) {
  typename F::Elem;
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.one() } -> std::convertible_to<typename F::Elem>;
  { f.from_int(std::int64_t{}) } -> std::convertible_to<typename F::Elem>;
  { f.from_decimal(s) } -> std::convertible_to<typename F::Elem>;
  { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.sub(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.submul(a, a, a) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::convertible_to<bool>;
  { f.format(a) } -> std::convertible_to<std::string>;
  { f.name() } -> std::convertible_to<std::string>;
};

}  // namespace ginlex
