#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ginlex/error.hpp"
#include "ginlex/field.hpp"
#include "ginlex/monomial.hpp"

namespace ginlex {

/// Coefficient field plus ordered variable names (highest precedence first).
template <CoefficientField F>
struct Ring {
  F field;
  std::vector<std::string> names;

  std::size_t nvars() const { return names.size(); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return i;
    }
    return std::nullopt;
  }

  bool operator==(const Ring& other) const { return field == other.field && names == other.names; }
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <CoefficientField F>
RingPtr<F> make_ring(F field, std::vector<std::string> names) {
  if (names.empty()) throw Error(ErrorKind::InvalidArgument, "a ring needs at least one variable");
  if (names.size() > kMaxVariables) {
    throw Error(ErrorKind::InvalidArgument, "at most " + std::to_string(kMaxVariables) + " variables supported");
  }
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) throw Error(ErrorKind::InvalidArgument, "variable names must be distinct");
  return std::make_shared<const Ring<F>>(Ring<F>{std::move(field), std::move(names)});
}

template <CoefficientField F>
RingPtr<F> make_ring(F field, std::size_t nvars) {
  return make_ring(std::move(field), canonical_names(nvars));
}

/// R-bar: the same field with x_0 removed.
template <CoefficientField F>
RingPtr<F> drop_first_variable(const RingPtr<F>& ring) {
  std::vector<std::string> names(ring->names.begin() + 1, ring->names.end());
  return make_ring(ring->field, std::move(names));
}

template <CoefficientField F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || *a == *b;
}

template <CoefficientField F>
struct Term {
  typename F::Elem coef;
  Monomial mono;
};

namespace detail {

/// out = a - coef * mult * b, all term lists strictly descending in `order`.
template <CoefficientField F>
void sub_scaled(const F& field, TermOrder order, std::span<const Term<F>> a, const typename F::Elem& coef,
                const Monomial& mult, std::span<const Term<F>> b, std::vector<Term<F>>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Monomial mb;
  bool have_b = false;
  while (i < a.size() || j < b.size()) {
    if (!have_b && j < b.size()) {
      mb = b[j].mono * mult;
      have_b = true;
    }
    if (j >= b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i >= a.size()) {
      out.push_back({field.neg(field.mul(coef, b[j].coef)), mb});
      ++j;
      have_b = false;
      continue;
    }
    auto c = compare(order, a[i].mono, mb);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({field.neg(field.mul(coef, b[j].coef)), mb});
      ++j;
      have_b = false;
    } else {
      auto v = field.submul(a[i].coef, coef, b[j].coef);
      if (!field.is_zero(v)) out.push_back({std::move(v), mb});
      ++i;
      ++j;
      have_b = false;
    }
  }
}

}  // namespace detail

/// Sparse multivariate polynomial whose terms are kept strictly descending in
/// its term order with no zero coefficients.
template <CoefficientField F>
class Polynomial {
 public:
  using Elem = typename F::Elem;
  using TermT = Term<F>;

  explicit Polynomial(RingPtr<F> ring, TermOrder order = TermOrder::GradedLex)
      : ring_(std::move(ring)), order_(order) {}

  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr<F> ring, TermOrder order, std::vector<TermT> terms) {
    const F& field = ring->field;
    for (const auto& t : terms) {
      if (t.mono.size() != ring->nvars()) throw Error(ErrorKind::RingMismatch, "term has wrong variable count");
    }
    std::sort(terms.begin(), terms.end(),
              [order](const TermT& a, const TermT& b) { return detail::compare(order, a.mono, b.mono) > 0; });
    std::vector<TermT> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
      if (!merged.empty() && merged.back().mono == t.mono) {
        merged.back().coef = field.add(merged.back().coef, t.coef);
      } else {
        merged.push_back(std::move(t));
      }
    }
    std::erase_if(merged, [&](const TermT& t) { return field.is_zero(t.coef); });
    return adopt(std::move(ring), order, std::move(merged));
  }

  /// Takes terms already in canonical form.
  static Polynomial adopt(RingPtr<F> ring, TermOrder order, std::vector<TermT> terms) {
    Polynomial p(std::move(ring), order);
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial term(RingPtr<F> ring, TermOrder order, Elem coef, Monomial mono) {
    std::vector<TermT> t;
    t.push_back({std::move(coef), std::move(mono)});
    return from_terms(std::move(ring), order, std::move(t));
  }

  static Polynomial variable(RingPtr<F> ring, std::size_t index, TermOrder order = TermOrder::GradedLex) {
    auto one = ring->field.one();
    auto n = ring->nvars();
    return term(std::move(ring), order, one, Monomial::variable(n, index));
  }

  static Polynomial constant(RingPtr<F> ring, Elem value, TermOrder order = TermOrder::GradedLex) {
    auto n = ring->nvars();
    return term(std::move(ring), order, std::move(value), Monomial(n));
  }

  const Ring<F>& ring() const { return *ring_; }
  const RingPtr<F>& ring_ptr() const { return ring_; }
  const F& field() const { return ring_->field; }
  std::size_t nvars() const { return ring_->nvars(); }
  TermOrder order() const { return order_; }
  const std::vector<TermT>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const TermT& leading() const {
    if (terms_.empty()) throw Error(ErrorKind::EmptyPolynomial, "zero polynomial has no leading term");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading().mono; }
  const Elem& leading_coefficient() const { return leading().coef; }

  Exponent degree() const {
    Exponent d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const TermT& t) { return t.mono.degree() == terms_.front().mono.degree(); });
  }

  Polynomial in_order(TermOrder order) const {
    if (order == order_) return *this;
    auto terms = terms_;
    std::sort(terms.begin(), terms.end(),
              [order](const TermT& a, const TermT& b) { return detail::compare(order, a.mono, b.mono) > 0; });
    return adopt(ring_, order, std::move(terms));
  }

  Polynomial monic() const {
    if (terms_.empty()) return *this;
    auto inv = field().inv(terms_.front().coef);
    return scaled(inv);
  }

  Polynomial scaled(const Elem& c) const {
    if (field().is_zero(c)) return Polynomial(ring_, order_);
    auto terms = terms_;
    for (auto& t : terms) t.coef = field().mul(t.coef, c);
    return adopt(ring_, order_, std::move(terms));
  }

  /// c * m * this
  Polynomial mul_term(const Elem& c, const Monomial& m) const {
    if (field().is_zero(c)) return Polynomial(ring_, order_);
    auto terms = terms_;
    for (auto& t : terms) {
      t.coef = field().mul(t.coef, c);
      t.mono = t.mono * m;
    }
    return adopt(ring_, order_, std::move(terms));
  }

  Polynomial operator-() const { return scaled(field().neg(field().one())); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.require_compatible(b);
    auto bb = b.in_order(a.order_);
    std::vector<TermT> out;
    detail::sub_scaled<F>(a.field(), a.order_, a.terms_, a.field().neg(a.field().one()), Monomial(a.nvars()),
                          bb.terms_, out);
    return adopt(a.ring_, a.order_, std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.require_compatible(b);
    auto bb = b.in_order(a.order_);
    std::vector<TermT> out;
    detail::sub_scaled<F>(a.field(), a.order_, a.terms_, a.field().one(), Monomial(a.nvars()), bb.terms_, out);
    return adopt(a.ring_, a.order_, std::move(out));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_compatible(b);
    auto bb = b.in_order(a.order_);
    const F& field = a.field();
    std::vector<TermT> acc;
    std::vector<TermT> scratch;
    for (const auto& t : a.terms_) {
      detail::sub_scaled<F>(field, a.order_, acc, field.neg(t.coef), t.mono, bb.terms_, scratch);
      acc.swap(scratch);
    }
    return adopt(a.ring_, a.order_, std::move(acc));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    auto bb = b.in_order(a.order_);
    if (a.terms_.size() != bb.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == bb.terms_[i].mono) || !a.field().equal(a.terms_[i].coef, bb.terms_[i].coef)) {
        return false;
      }
    }
    return true;
  }

  Elem evaluate(std::span<const Elem> point) const {
    if (point.size() != nvars()) throw Error(ErrorKind::RingMismatch, "point has wrong number of coordinates");
    const F& f = field();
    Elem sum = f.zero();
    for (const auto& t : terms_) {
      Elem v = t.coef;
      for (std::size_t i = 0; i < nvars(); ++i) {
        for (Exponent e = 0; e < t.mono[i]; ++e) v = f.mul(v, point[i]);
      }
      sum = f.add(sum, v);
    }
    return sum;
  }

  Polynomial derivative(std::size_t var) const {
    std::vector<TermT> out;
    for (const auto& t : terms_) {
      if (t.mono[var] == 0) continue;
      Monomial m = t.mono;
      m.set(var, t.mono[var] - 1);
      out.push_back({field().mul(t.coef, field().from_int(t.mono[var])), m});
    }
    return from_terms(ring_, order_, std::move(out));
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& t = terms_[i];
      bool negative = field().is_negative(t.coef);
      Elem magnitude = negative ? field().neg(t.coef) : t.coef;
      if (i == 0) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      bool unit = field().is_one(magnitude);
      if (!unit || t.mono.is_one()) out += field().format(magnitude);
      if (!t.mono.is_one()) {
        if (!unit) out += '*';
        out += t.mono.to_string(ring_->names);
      }
    }
    return out;
  }

  void require_compatible(const Polynomial& other) const {
    if (!same_ring(ring_, other.ring_)) throw Error(ErrorKind::RingMismatch, "polynomials from different rings");
  }

 private:
  RingPtr<F> ring_;
  TermOrder order_;
  std::vector<TermT> terms_;
};

template <CoefficientField F>
std::pair<typename F::Elem, Monomial> leading_term(const Polynomial<F>& f, TermOrder order) {
  if (f.is_zero()) throw Error(ErrorKind::EmptyPolynomial, "zero polynomial has no leading term");
  if (f.order() == order) return {f.terms().front().coef, f.terms().front().mono};
  const auto* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (detail::compare(order, t.mono, best->mono) > 0) best = &t;
  }
  return {best->coef, best->mono};
}

/// f = x0^level * fbar + rest with fbar free of x0 and rest of x0-degree < level.
template <CoefficientField F>
struct D0Split {
  Exponent level;
  Polynomial<F> fbar;
  Polynomial<F> rest;
};

/// Splits off the x_0^{d0(f)} slice of a homogeneous f under GradedLex, where
/// d0(f) is the exponent of x_0 in the leading monomial.
template <CoefficientField F>
D0Split<F> d0_split(const Polynomial<F>& f, TermOrder order = TermOrder::GradedLex) {
  if (f.is_zero()) throw Error(ErrorKind::EmptyPolynomial, "d0 of the zero polynomial");
  if (order != TermOrder::GradedLex) throw Error(ErrorKind::InvalidArgument, "d0 splitting needs GradedLex");
  if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, f.to_string());
  auto g = f.in_order(order);
  Exponent level = g.leading_monomial()[0];
  Monomial divisor = Monomial::variable(f.nvars(), 0, level);
  std::vector<Term<F>> top;
  std::vector<Term<F>> rest;
  for (const auto& t : g.terms()) {
    if (t.mono[0] == level) {
      top.push_back({t.coef, t.mono / divisor});
    } else {
      rest.push_back(t);
    }
  }
  return {level, Polynomial<F>::adopt(g.ring_ptr(), order, std::move(top)),
          Polynomial<F>::adopt(g.ring_ptr(), order, std::move(rest))};
}

/// Re-expresses an x0-free polynomial in the ring without x0.
template <CoefficientField F>
Polynomial<F> restrict_to_tail(const Polynomial<F>& f, const RingPtr<F>& ring_bar) {
  if (ring_bar->nvars() + 1 != f.nvars()) throw Error(ErrorKind::RingMismatch, "tail ring has wrong size");
  std::vector<Term<F>> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    if (t.mono[0] != 0) throw Error(ErrorKind::InvalidArgument, "polynomial involves x0: " + f.to_string());
    out.push_back({t.coef, Monomial(t.mono.exponents().subspan(1))});
  }
  return Polynomial<F>::from_terms(ring_bar, f.order(), std::move(out));
}

/// Inverse of restrict_to_tail: embeds a polynomial of R-bar into R.
template <CoefficientField F>
Polynomial<F> extend_with_head(const Polynomial<F>& f, const RingPtr<F>& ring) {
  if (f.nvars() + 1 != ring->nvars()) throw Error(ErrorKind::RingMismatch, "head ring has wrong size");
  std::vector<Term<F>> out;
  out.reserve(f.size());
  std::vector<Exponent> exps(ring->nvars(), 0);
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < f.nvars(); ++i) exps[i + 1] = t.mono[i];
    out.push_back({t.coef, Monomial(std::span<const Exponent>(exps))});
  }
  return Polynomial<F>::from_terms(ring, f.order(), std::move(out));
}

/// Same polynomial in another ring with the same variable count (renaming).
template <CoefficientField F>
Polynomial<F> rebase(const Polynomial<F>& f, const RingPtr<F>& ring) {
  if (f.nvars() != ring->nvars()) throw Error(ErrorKind::RingMismatch, "rebase needs equal variable counts");
  return Polynomial<F>::adopt(ring, f.order(), f.terms());
}

}  // namespace ginlex
