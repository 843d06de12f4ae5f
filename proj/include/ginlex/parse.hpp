#pragma once

#include <cctype>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "ginlex/error.hpp"
#include "ginlex/polynomial.hpp"

namespace ginlex {

/// Grammar:
///   polynomial := [sign] term (sign term)*
///   term       := coef | [coef][*] factor (* factor)*
///   coef       := integer [/ integer]
///   factor     := var | var^nat
/// Whitespace is ignored. The sign may be '-' or U+2212.
template <CoefficientField F>
class PolynomialParser {
 public:
  PolynomialParser(RingPtr<F> ring, std::string_view text, TermOrder order, std::size_t column_offset = 0)
      : ring_(std::move(ring)), text_(text), order_(order), column_offset_(column_offset) {}

  Polynomial<F> parse() {
    std::vector<Term<F>> terms;
    skip_space();
    bool negative = false;
    if (auto s = take_sign()) negative = *s;
    terms.push_back(parse_term(negative));
    skip_space();
    while (pos_ < text_.size()) {
      auto s = take_sign();
      if (!s) fail("expected '+' or '-'");
      terms.push_back(parse_term(*s));
      skip_space();
    }
    return Polynomial<F>::from_terms(ring_, order_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, "column " + std::to_string(column_offset_ + pos_ + 1) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  /// true for minus, false for plus, nullopt if no sign.
  std::optional<bool> take_sign() {
    skip_space();
    if (pos_ >= text_.size()) return std::nullopt;
    if (text_[pos_] == '+') {
      ++pos_;
      return false;
    }
    if (text_[pos_] == '-') {
      ++pos_;
      return true;
    }
    if (text_.substr(pos_, 3) == "\xE2\x88\x92") {
      pos_ += 3;
      return true;
    }
    return std::nullopt;
  }

  std::string_view take_digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Term<F> parse_term(bool negative) {
    const F& field = ring_->field;
    auto coef = field.one();
    bool have_coef = false;
    auto digits = take_digits();
    if (!digits.empty()) {
      have_coef = true;
      if (peek('/')) {
        ++pos_;
        auto den = take_digits();
        if (den.empty()) fail("expected denominator");
        try {
          coef = field.from_fraction(digits, den);
        } catch (const Error& e) {
          fail(e.detail());
        }
      } else {
        coef = field.from_decimal(digits);
      }
    }
    Monomial mono(ring_->nvars());
    bool need_factor = !have_coef;
    if (have_coef && peek('*')) {
      ++pos_;
      need_factor = true;
    }
    skip_space();
    if (need_factor || (pos_ < text_.size() && is_ident_start(text_[pos_]))) {
      parse_factor(mono);
      while (peek('*')) {
        ++pos_;
        parse_factor(mono);
      }
    }
    if (negative) coef = field.neg(coef);
    return {coef, mono};
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  void parse_factor(Monomial& mono) {
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail("expected a variable");
    while (pos_ < text_.size() && is_ident(text_[pos_])) ++pos_;
    auto name = text_.substr(start, pos_ - start);
    auto index = ring_->index_of(name);
    if (!index) {
      pos_ = start;
      throw Error(ErrorKind::UnknownVariable,
                  "column " + std::to_string(column_offset_ + start + 1) + ": '" + std::string(name) + "'");
    }
    std::uint64_t power = 1;
    if (peek('^')) {
      ++pos_;
      auto digits = take_digits();
      if (digits.empty()) fail("expected exponent after '^'");
      power = 0;
      for (char c : digits) {
        power = power * 10 + static_cast<std::uint64_t>(c - '0');
        if (power > std::numeric_limits<Exponent>::max()) {
          throw Error(ErrorKind::ExponentOverflow, "exponent literal too large");
        }
      }
    }
    std::uint64_t e = std::uint64_t{mono[*index]} + power;
    if (e > std::numeric_limits<Exponent>::max()) throw Error(ErrorKind::ExponentOverflow, "exponent too large");
    mono.set(*index, static_cast<Exponent>(e));
  }

  RingPtr<F> ring_;
  std::string_view text_;
  TermOrder order_;
  std::size_t column_offset_;
  std::size_t pos_ = 0;
};

template <CoefficientField F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, std::string_view text,
                               TermOrder order = TermOrder::GradedLex) {
  return PolynomialParser<F>(ring, text, order).parse();
}

template <CoefficientField F>
std::string format_polynomial(const Polynomial<F>& f) {
  return f.to_string();
}

}  // namespace ginlex
