#pragma once

#include <string>
#include <vector>

#include "ginlex/groebner.hpp"

namespace ginlex {

/// The irrelevant ideal <x_0, ..., x_n>.
template <CoefficientField F>
Ideal<F> irrelevant_ideal(const RingPtr<F>& ring) {
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial<F>::variable(ring, i));
  return Ideal<F>(ring, std::move(gens));
}

/// Exact quotient p / f; throws if f does not divide p.
template <CoefficientField F>
Polynomial<F> exact_divide(const Polynomial<F>& p, const Polynomial<F>& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero polynomial");
  const TermOrder order = TermOrder::GradedLex;
  auto divisor = f.in_order(order);
  const F& field = f.field();
  auto lead_inv = field.inv(divisor.leading_coefficient());
  std::vector<Term<F>> quotient;
  detail::TermList<F> rest = p.in_order(order).terms();
  detail::TermList<F> scratch;
  while (!rest.empty()) {
    if (!divisor.leading_monomial().divides(rest.front().mono)) {
      throw Error(ErrorKind::InvalidArgument, "division is not exact");
    }
    Monomial m = rest.front().mono / divisor.leading_monomial();
    auto c = field.mul(rest.front().coef, lead_inv);
    quotient.push_back({c, m});
    detail::cancel_at<F>(field, order, rest, 0, c, m, divisor.terms(), scratch);
  }
  return Polynomial<F>::from_terms(p.ring_ptr(), p.order(), std::move(quotient));
}

/// I ∩ J via elimination of a tag variable t from t*I + (1-t)*J, using an
/// order that compares the t-exponent first.
template <CoefficientField F>
Ideal<F> intersect(const Ideal<F>& a, const Ideal<F>& b, EngineLimits limits = {}) {
  if (!same_ring(a.ring_ptr(), b.ring_ptr())) throw Error(ErrorKind::RingMismatch, "intersecting ideals of different rings");
  const auto& ring = a.ring_ptr();
  if (a.is_zero() || b.is_zero()) return Ideal<F>(ring);
  std::vector<std::string> names{"_t"};
  names.insert(names.end(), ring->names.begin(), ring->names.end());
  auto tagged = make_ring(ring->field, std::move(names));
  const TermOrder order = TermOrder::EliminateFirst;
  auto t = Polynomial<F>::variable(tagged, 0, order);
  auto one_minus_t = Polynomial<F>::constant(tagged, ring->field.one(), order) - t;
  std::vector<Polynomial<F>> gens;
  for (const auto& g : a.generators()) gens.push_back(t * extend_with_head(g.in_order(order), tagged));
  for (const auto& h : b.generators()) gens.push_back(one_minus_t * extend_with_head(h.in_order(order), tagged));
  auto gb = detail::buchberger_any(tagged, gens, order, limits);
  std::vector<Polynomial<F>> out;
  for (const auto& g : gb.basis) {
    if (g.leading_monomial()[0] == 0) out.push_back(restrict_to_tail(g, ring).in_order(TermOrder::GradedLex));
  }
  return Ideal<F>(ring, std::move(out));
}

/// (I : f) = (I ∩ <f>) / f.
template <CoefficientField F>
Ideal<F> ideal_quotient(const Ideal<F>& ideal, const Polynomial<F>& f, EngineLimits limits = {}) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "quotient by the zero polynomial");
  if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, f.to_string());
  Ideal<F> principal(ideal.ring_ptr(), {f});
  auto meet = intersect(ideal, principal, limits);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : meet.generators()) gens.push_back(exact_divide(g, f));
  return Ideal<F>(ideal.ring_ptr(), std::move(gens));
}

/// (I : J) = intersection of (I : g) over the generators g of J.
template <CoefficientField F>
Ideal<F> ideal_quotient(const Ideal<F>& ideal, const Ideal<F>& by, EngineLimits limits = {}) {
  const auto& ring = ideal.ring_ptr();
  if (by.is_zero()) return Ideal<F>(ring, {Polynomial<F>::constant(ring, ring->field.one())});
  std::optional<Ideal<F>> acc;
  for (const auto& g : by.generators()) {
    auto q = ideal_quotient(ideal, g, limits);
    acc = acc ? intersect(*acc, q, limits) : q;
  }
  return *acc;
}

/// I : J^infinity, iterating quotients until they stop growing.
template <CoefficientField F>
Ideal<F> saturate(const Ideal<F>& ideal, const Ideal<F>& by, EngineLimits limits = {}, std::size_t max_rounds = 64) {
  Ideal<F> current = ideal;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    auto next = ideal_quotient(current, by, limits);
    auto gb = buchberger(current, TermOrder::GradedRevLex, limits);
    bool grew = false;
    for (const auto& g : next.generators()) {
      if (!contains(gb, g)) {
        grew = true;
        break;
      }
    }
    if (!grew) return current;
    current = next;
  }
  throw Error(ErrorKind::ResourceCap, "saturation did not stabilize");
}

template <CoefficientField F>
bool is_saturated(const Ideal<F>& ideal, EngineLimits limits = {}) {
  auto q = ideal_quotient(ideal, irrelevant_ideal(ideal.ring_ptr()), limits);
  auto gb = buchberger(ideal, TermOrder::GradedRevLex, limits);
  for (const auto& g : q.generators()) {
    if (!contains(gb, g)) return false;
  }
  return true;
}

extern template Ideal<PrimeField> saturate<PrimeField>(const Ideal<PrimeField>&, const Ideal<PrimeField>&, EngineLimits, std::size_t);
extern template Ideal<RationalField> saturate<RationalField>(const Ideal<RationalField>&, const Ideal<RationalField>&, EngineLimits, std::size_t);

}  // namespace ginlex
