#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ginlex/error.hpp"
#include "ginlex/groebner.hpp"
#include "ginlex/parse.hpp"

// Ideal files:
//
//   ring x0 x1 x2 x3
//   field gf 32003        (or: field qq)
//   order glex            (or: order grevlex)
//   ideal
//   x0^3 - x1*x2^2
//   x1^3 - x2^2*x3
//   end
//
// '#' starts a comment; blank lines are ignored.

namespace ginlex {

struct FieldSpec {
  bool rational = false;
  std::uint32_t prime = PrimeField::kDefaultPrime;

  std::string to_string() const { return rational ? "qq" : "gf " + std::to_string(prime); }
  bool operator==(const FieldSpec&) const = default;
};

inline FieldSpec parse_field_spec(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind;
  in >> kind;
  FieldSpec spec;
  if (kind == "qq") {
    spec.rational = true;
  } else if (kind == "gf") {
    std::string digits;
    in >> digits;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 10) {
      throw Error(ErrorKind::Parse, "expected a prime after 'gf'");
    }
    std::uint64_t p = std::stoull(digits);
    try {
      PrimeField check(static_cast<std::uint32_t>(p));
      if (p != check.characteristic()) throw Error(ErrorKind::InvalidArgument, "prime too large");
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse, e.detail());
    }
    spec.prime = static_cast<std::uint32_t>(p);
  } else {
    throw Error(ErrorKind::Parse, "field must be 'gf <prime>' or 'qq'");
  }
  std::string extra;
  if (in >> extra) throw Error(ErrorKind::Parse, "trailing text after field: " + extra);
  return spec;
}

inline TermOrder parse_order(std::string_view name) {
  if (name == "glex") return TermOrder::GradedLex;
  if (name == "grevlex") return TermOrder::GradedRevLex;
  throw Error(ErrorKind::Parse, "order must be 'glex' or 'grevlex', got '" + std::string(name) + "'");
}

struct GeneratorLine {
  std::size_t line;
  std::string text;
};

/// Syntax-level content of an ideal file; polynomials are parsed once the
/// field is fixed.
struct IdealFile {
  std::vector<std::string> names;
  FieldSpec field;
  TermOrder order = TermOrder::GradedLex;
  std::vector<GeneratorLine> generators;
};

namespace file_detail {

inline std::string strip(std::string_view s) {
  auto hash = s.find('#');
  if (hash != std::string_view::npos) s = s.substr(0, hash);
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] inline void fail(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

/// Splits off the first word and returns the remainder.
inline std::string keyword(const std::string& line, std::string& rest) {
  auto sp = line.find_first_of(" \t");
  if (sp == std::string::npos) {
    rest.clear();
    return line;
  }
  rest = strip(std::string_view(line).substr(sp));
  return line.substr(0, sp);
}

}  // namespace file_detail

inline IdealFile parse_ideal_file(std::string_view text) {
  using namespace file_detail;
  IdealFile file;
  enum class Stage { Ring, Field, Order, Ideal, Body, Done } stage = Stage::Ring;
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    auto raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    auto line = strip(raw);
    if (line.empty()) continue;
    std::string rest;
    switch (stage) {
      case Stage::Ring: {
        if (keyword(line, rest) != "ring") fail(lineno, "expected 'ring <names>'");
        std::istringstream in(rest);
        for (std::string name; in >> name;) file.names.push_back(name);
        if (file.names.empty()) fail(lineno, "ring declares no variables");
        try {
          make_ring(PrimeField(), file.names);
        } catch (const Error& e) {
          fail(lineno, e.detail());
        }
        stage = Stage::Field;
        break;
      }
      case Stage::Field:
        if (keyword(line, rest) != "field") fail(lineno, "expected 'field gf <prime>' or 'field qq'");
        try {
          file.field = parse_field_spec(rest);
        } catch (const Error& e) {
          fail(lineno, e.detail());
        }
        stage = Stage::Order;
        break;
      case Stage::Order:
        if (keyword(line, rest) != "order") fail(lineno, "expected 'order glex' or 'order grevlex'");
        try {
          file.order = parse_order(rest);
        } catch (const Error& e) {
          fail(lineno, e.detail());
        }
        stage = Stage::Ideal;
        break;
      case Stage::Ideal:
        if (line != "ideal") fail(lineno, "expected 'ideal'");
        stage = Stage::Body;
        break;
      case Stage::Body:
        if (line == "end") {
          stage = Stage::Done;
        } else {
          file.generators.push_back({lineno, line});
        }
        break;
      case Stage::Done:
        fail(lineno, "text after 'end'");
    }
  }
  if (stage != Stage::Done) fail(lineno, "unexpected end of file; missing 'end'");
  return file;
}

/// Parses the generators over `field`. Errors name the offending line.
template <CoefficientField F>
Ideal<F> build_ideal(const IdealFile& file, const F& field) {
  auto ring = make_ring(field, file.names);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : file.generators) {
    Polynomial<F> f = [&] {
      try {
        return parse_polynomial(ring, g.text, file.order);
      } catch (const Error& e) {
        throw Error(e.kind(), "line " + std::to_string(g.line) + ": " + e.detail());
      }
    }();
    if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, "line " + std::to_string(g.line) + ": " + g.text);
    gens.push_back(std::move(f));
  }
  return Ideal<F>(ring, std::move(gens));
}

/// "a,b,c,d" with optionally signed integers or fractions.
template <CoefficientField F>
std::vector<typename F::Elem> parse_point(const F& field, std::string_view text) {
  std::vector<typename F::Elem> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto item = file_detail::strip(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    start = comma == std::string_view::npos ? text.size() + 1 : comma + 1;
    if (item.empty()) throw Error(ErrorKind::Parse, "empty coordinate in point '" + std::string(text) + "'");
    auto slash = item.find('/');
    try {
      out.push_back(slash == std::string::npos ? field.from_decimal(item)
                                               : field.from_fraction(item.substr(0, slash), item.substr(slash + 1)));
    } catch (const Error&) {
      throw Error(ErrorKind::Parse, "bad coordinate '" + item + "'");
    }
  }
  return out;
}

/// Process exit status for an error kind.
inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::UnknownVariable: return 2;
    case ErrorKind::NotHomogeneous: return 3;
    case ErrorKind::GinInstability: return 4;
    case ErrorKind::NotACurve: return 5;
    case ErrorKind::ResourceCap: return 6;
    default: return 1;
  }
}

}  // namespace ginlex
