#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ginlex/error.hpp"

namespace ginlex {

inline constexpr std::size_t kMaxVariables = 12;

using Exponent = std::uint32_t;

/// Exponent vector x_0^{e_0} ... x_n^{e_n} with inline storage. Variable 0 has
/// the highest precedence.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(std::size_t nvars) : nvars_(checked_size(nvars)) {}

  Monomial(std::initializer_list<Exponent> exps) : Monomial(std::span<const Exponent>(exps.begin(), exps.size())) {}

  explicit Monomial(std::span<const Exponent> exps) : nvars_(checked_size(exps.size())) {
    std::uint64_t deg = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      exps_[i] = exps[i];
      deg += exps[i];
    }
    degree_ = checked_degree(deg);
  }

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1) {
    Monomial m(nvars);
    if (index >= nvars) throw Error(ErrorKind::InvalidArgument, "variable index out of range");
    m.exps_[index] = power;
    m.degree_ = power;
    return m;
  }

  std::size_t size() const { return nvars_; }
  Exponent degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return {exps_.data(), nvars_}; }
  bool is_one() const { return degree_ == 0; }

  void set(std::size_t i, Exponent e) {
    std::uint64_t deg = std::uint64_t{degree_} - exps_[i] + e;
    degree_ = checked_degree(deg);
    exps_[i] = e;
  }

  /// Bit i set iff x_i occurs; a necessary condition for divisibility.
  std::uint32_t support_mask() const {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exps_[i] != 0) mask |= 1u << i;
    }
    return mask;
  }

  bool divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    a.require_same_size(b);
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      std::uint64_t e = std::uint64_t{a.exps_[i]} + b.exps_[i];
      if (e > std::numeric_limits<Exponent>::max()) throw Error(ErrorKind::ExponentOverflow, "monomial product");
      r.exps_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = checked_degree(std::uint64_t{a.degree_} + b.degree_);
    return r;
  }

  /// Exact quotient; requires divisor | *this.
  Monomial operator/(const Monomial& divisor) const {
    require_same_size(divisor);
    Monomial r(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (divisor.exps_[i] > exps_[i]) throw Error(ErrorKind::InvalidArgument, "monomial quotient is not exact");
      r.exps_[i] = exps_[i] - divisor.exps_[i];
    }
    r.degree_ = degree_ - divisor.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    a.require_same_size(b);
    Monomial r(a.nvars_);
    std::uint64_t deg = 0;
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      deg += r.exps_[i];
    }
    r.degree_ = checked_degree(deg);
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    a.require_same_size(b);
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) {
      r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
      r.degree_ += r.exps_[i];
    }
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  /// Canonical text: factors in variable order joined by '*', e.g. x0*x2^12.
  std::string to_string(std::span<const std::string> names) const {
    if (degree_ == 0) return "1";
    std::string out;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (exps_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += names[i];
      if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out;
  }

  /// Same as to_string with the canonical names x0..x_{n-1}.
  std::string to_string() const;

  void require_same_size(const Monomial& other) const {
    if (nvars_ != other.nvars_) {
      throw Error(ErrorKind::RingMismatch, "monomials with " + std::to_string(nvars_) + " and " +
                                               std::to_string(other.nvars_) + " variables");
    }
  }

 private:
  static std::uint8_t checked_size(std::size_t n) {
    if (n > kMaxVariables) {
      throw Error(ErrorKind::InvalidArgument, "at most " + std::to_string(kMaxVariables) + " variables supported");
    }
    return static_cast<std::uint8_t>(n);
  }
  static Exponent checked_degree(std::uint64_t deg) {
    if (deg > std::numeric_limits<Exponent>::max()) throw Error(ErrorKind::ExponentOverflow, "monomial degree");
    return static_cast<Exponent>(deg);
  }

  std::array<Exponent, kMaxVariables> exps_{};
  Exponent degree_ = 0;
  std::uint8_t nvars_ = 0;
};

inline std::vector<std::string> canonical_names(std::size_t nvars, std::size_t first_index = 0) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(first_index + i));
  return names;
}

inline std::string Monomial::to_string() const { return to_string(canonical_names(nvars_)); }

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Exponent e : m.exponents()) {
      h ^= e;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

/// Variable precedence is always x_0 > x_1 > ... > x_n.
///
/// EliminateFirst compares the exponent of x_0 first and breaks ties with
/// GradedLex on the remaining variables. It is not degree-compatible; the
/// quotient routines use it to eliminate an auxiliary tag variable.
enum class TermOrder { GradedLex, GradedRevLex, EliminateFirst };

inline const char* to_string(TermOrder order) {
  switch (order) {
    case TermOrder::GradedLex: return "glex";
    case TermOrder::GradedRevLex: return "grevlex";
    case TermOrder::EliminateFirst: return "elim0";
  }
  return "?";
}

namespace detail {

inline std::strong_ordering lex_tail(const Monomial& a, const Monomial& b, std::size_t from) {
  for (std::size_t i = from; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

/// Unchecked comparison for inner loops; sizes must already agree.
inline std::strong_ordering compare(TermOrder order, const Monomial& a, const Monomial& b) {
  switch (order) {
    case TermOrder::GradedLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return lex_tail(a, b, 0);
    case TermOrder::GradedRevLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return b[i] <=> a[i];
      }
      return std::strong_ordering::equal;
    case TermOrder::EliminateFirst: {
      if (a[0] != b[0]) return a[0] <=> b[0];
      Exponent da = a.degree() - a[0];
      Exponent db = b.degree() - b[0];
      if (da != db) return da <=> db;
      return lex_tail(a, b, 1);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace detail

inline std::strong_ordering compare_monomials(TermOrder order, const Monomial& a, const Monomial& b) {
  a.require_same_size(b);
  return detail::compare(order, a, b);
}

/// Strict "greater" predicate, for sorting into descending term order.
struct DescendingIn {
  TermOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return detail::compare(order, a, b) > 0; }
};

/// C(n, k), exact while the result fits in 64 bits.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<std::uint64_t>(r);
}

/// All monomials of the given degree in nvars variables, in descending
/// GradedLex order.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, Exponent degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<Exponent> exps(nvars, 0);
  std::function<void(std::size_t, Exponent)> rec = [&](std::size_t i, Exponent rest) {
    if (i + 1 == nvars) {
      exps[i] = rest;
      out.emplace_back(std::span<const Exponent>(exps));
      return;
    }
    for (Exponent e = rest + 1; e-- > 0;) {
      exps[i] = e;
      rec(i + 1, rest - e);
    }
  };
  rec(0, degree);
  return out;
}

}  // namespace ginlex
