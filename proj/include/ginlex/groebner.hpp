#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ginlex/polynomial.hpp"

namespace ginlex {

/// Homogeneous ideal given by generators. The zero ideal has no generators.
template <CoefficientField F>
class Ideal {
 public:
  explicit Ideal(RingPtr<F> ring) : ring_(std::move(ring)) {}

  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> generators) : ring_(std::move(ring)) {
    for (auto& g : generators) {
      if (!same_ring(g.ring_ptr(), ring_)) throw Error(ErrorKind::RingMismatch, "generator from another ring");
      if (g.is_zero()) continue;
      if (!g.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, g.to_string());
      generators_.push_back(std::move(g));
    }
  }

  const Ring<F>& ring() const { return *ring_; }
  const RingPtr<F>& ring_ptr() const { return ring_; }
  std::size_t nvars() const { return ring_->nvars(); }
  const std::vector<Polynomial<F>>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

  std::string to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (i) out += ", ";
      out += generators_[i].to_string();
    }
    return out + ">";
  }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> generators_;
};

/// Caps that turn runaway computations into a ResourceCap error.
struct EngineLimits {
  std::size_t max_basis_size = 10000;
  Exponent max_degree = 60;
};

template <CoefficientField F>
struct GroebnerBasis {
  RingPtr<F> ring;
  TermOrder order = TermOrder::GradedLex;
  std::vector<Polynomial<F>> basis;
  bool reduced = false;

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(basis.size());
    for (const auto& g : basis) out.push_back(g.leading_monomial());
    return out;
  }

  /// beta: the smallest degree in which the ideal is nonzero.
  std::optional<Exponent> initial_degree() const {
    std::optional<Exponent> best;
    for (const auto& g : basis) {
      Exponent d = g.leading_monomial().degree();
      if (!best || d < *best) best = d;
    }
    return best;
  }

  bool operator==(const GroebnerBasis& other) const {
    return order == other.order && basis == other.basis;
  }
};

namespace detail {

template <CoefficientField F>
using TermList = std::vector<Term<F>>;

/// f <- f - c * mult * g where f[pos] is cancelled by c * mult * lead(g).
/// Terms before pos are untouched.
template <CoefficientField F>
void cancel_at(const F& field, TermOrder order, TermList<F>& f, std::size_t pos, const typename F::Elem& c,
               const Monomial& mult, std::span<const Term<F>> g, TermList<F>& scratch) {
  sub_scaled<F>(field, order, std::span<const Term<F>>(f).subspan(pos + 1), c, mult, g.subspan(1), scratch);
  f.resize(pos);
  f.insert(f.end(), std::make_move_iterator(scratch.begin()), std::make_move_iterator(scratch.end()));
}

struct LeadEntry {
  Monomial lead;
  std::uint32_t mask;
};

inline std::optional<std::size_t> find_divisor(const std::vector<LeadEntry>& leads, const std::vector<bool>* active,
                                               const Monomial& m) {
  std::uint32_t mask = m.support_mask();
  for (std::size_t i = 0; i < leads.size(); ++i) {
    if (active && !(*active)[i]) continue;
    if ((leads[i].mask & ~mask) != 0) continue;
    if (leads[i].lead.divides(m)) return i;
  }
  return std::nullopt;
}

/// Full reduction of f by the given polynomials; always the largest reducible
/// term first, using the first divisor in list order.
template <CoefficientField F>
TermList<F> reduce_full(const F& field, TermOrder order, TermList<F> f, const std::vector<const TermList<F>*>& divisors,
                        const std::vector<LeadEntry>& leads, std::size_t start = 0) {
  TermList<F> scratch;
  std::size_t pos = start;
  while (pos < f.size()) {
    auto hit = find_divisor(leads, nullptr, f[pos].mono);
    if (!hit) {
      ++pos;
      continue;
    }
    const auto& g = *divisors[*hit];
    auto c = field.div(f[pos].coef, g.front().coef);
    Monomial mult = f[pos].mono / g.front().mono;
    cancel_at<F>(field, order, f, pos, c, mult, g, scratch);
  }
  return f;
}

template <CoefficientField F>
TermList<F> make_monic(const F& field, TermList<F> f) {
  if (f.empty() || field.is_one(f.front().coef)) return f;
  auto inv = field.inv(f.front().coef);
  for (auto& t : f) t.coef = field.mul(t.coef, inv);
  return f;
}

/// Buchberger with the normal selection strategy and Gebauer-Moeller pair
/// management. Input generators enter the queue at their own degree, so for
/// homogeneous input the basis is complete degree by degree.
template <CoefficientField F>
class BuchbergerEngine {
 public:
  BuchbergerEngine(const F& field, TermOrder order, std::size_t nvars, EngineLimits limits)
      : field_(field), order_(order), nvars_(nvars), limits_(limits) {}

  void add_input(TermList<F> g) {
    if (g.empty()) return;
    inputs_.push_back(std::move(g));
  }

  /// Returns the reduced basis, monic, sorted ascending by leading monomial.
  std::vector<TermList<F>> run() {
    std::vector<std::size_t> input_order(inputs_.size());
    for (std::size_t i = 0; i < inputs_.size(); ++i) input_order[i] = i;
    // deterministic input schedule: by leading monomial, ascending
    std::stable_sort(input_order.begin(), input_order.end(), [&](std::size_t a, std::size_t b) {
      return compare(order_, inputs_[a].front().mono, inputs_[b].front().mono) < 0;
    });
    std::size_t next_input = 0;
    TermList<F> scratch;
    while (next_input < input_order.size() || !pairs_.empty()) {
      std::optional<std::size_t> best_pair = select_pair();
      bool take_input = false;
      if (next_input < input_order.size()) {
        const auto& g = inputs_[input_order[next_input]];
        Exponent gdeg = g.front().mono.degree();
        take_input = !best_pair || gdeg <= pairs_[*best_pair].lcm.degree();
      }
      TermList<F> h;
      if (take_input) {
        h = std::move(inputs_[input_order[next_input++]]);
      } else {
        Pair p = pairs_[*best_pair];
        pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(*best_pair));
        if (p.lcm.degree() > limits_.max_degree) {
          throw Error(ErrorKind::ResourceCap, "S-pair degree " + std::to_string(p.lcm.degree()) +
                                                  " exceeds cap " + std::to_string(limits_.max_degree));
        }
        h = s_poly(p);
      }
      top_reduce(h, scratch);
      if (h.empty()) continue;
      insert(make_monic(field_, std::move(h)));
    }
    return finalize();
  }

 private:
  struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
  };

  std::optional<std::size_t> select_pair() const {
    if (pairs_.empty()) return std::nullopt;
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.lcm.degree() != b.lcm.degree()) {
        if (a.lcm.degree() < b.lcm.degree()) best = k;
        continue;
      }
      auto c = compare(order_, a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::pair(a.j, a.i) < std::pair(b.j, b.i))) best = k;
    }
    return best;
  }

  TermList<F> s_poly(const Pair& p) const {
    const auto& f = basis_[p.i];
    const auto& g = basis_[p.j];
    Monomial mf = p.lcm / f.front().mono;
    Monomial mg = p.lcm / g.front().mono;
    TermList<F> a;
    a.reserve(f.size());
    for (std::size_t k = 1; k < f.size(); ++k) a.push_back({f[k].coef, f[k].mono * mf});
    TermList<F> out;
    sub_scaled<F>(field_, order_, a, field_.one(), mg, std::span<const Term<F>>(g).subspan(1), out);
    return out;
  }

  void top_reduce(TermList<F>& h, TermList<F>& scratch) const {
    while (!h.empty()) {
      auto hit = find_divisor(leads_, &active_, h.front().mono);
      if (!hit) return;
      const auto& g = basis_[*hit];
      Monomial mult = h.front().mono / g.front().mono;
      auto c = h.front().coef;  // g is monic
      cancel_at<F>(field_, order_, h, 0, c, mult, g, scratch);
    }
  }

  void insert(TermList<F> h) {
    if (basis_.size() >= limits_.max_basis_size) {
      throw Error(ErrorKind::ResourceCap, "basis size exceeds cap " + std::to_string(limits_.max_basis_size));
    }
    const Monomial lead_h = h.front().mono;
    std::size_t t = basis_.size();

    // Gebauer-Moeller update
    std::vector<Pair> fresh;
    for (std::size_t k = 0; k < t; ++k) {
      if (active_[k]) fresh.push_back({k, t, lcm(basis_[k].front().mono, lead_h)});
    }
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Monomial& lead_a = basis_[fresh[a].i].front().mono;
      if (lead_a.coprime(lead_h)) continue;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (b == a || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && (!(fresh[b].lcm == fresh[a].lcm) || b < a)) {
          keep[a] = false;
          break;
        }
      }
    }
    std::vector<Pair> survivors;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      if (basis_[fresh[a].i].front().mono.coprime(lead_h)) continue;
      survivors.push_back(fresh[a]);
    }
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lead_h.divides(p.lcm)) return false;
      Monomial li = lcm(basis_[p.i].front().mono, lead_h);
      Monomial lj = lcm(basis_[p.j].front().mono, lead_h);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    for (auto& p : survivors) pairs_.push_back(std::move(p));
    for (std::size_t k = 0; k < t; ++k) {
      if (active_[k] && lead_h.divides(basis_[k].front().mono)) active_[k] = false;
    }
    leads_.push_back({lead_h, lead_h.support_mask()});
    basis_.push_back(std::move(h));
    active_.push_back(true);
  }

  std::vector<TermList<F>> finalize() {
    std::vector<std::size_t> minimal;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (!active_[k]) continue;
      bool redundant = false;
      for (std::size_t l = 0; l < basis_.size() && !redundant; ++l) {
        if (l == k || !active_[l]) continue;
        const auto& ml = basis_[l].front().mono;
        const auto& mk = basis_[k].front().mono;
        redundant = ml.divides(mk) && (!(ml == mk) || l < k);
      }
      if (!redundant) minimal.push_back(k);
    }
    std::vector<const TermList<F>*> divisors;
    std::vector<LeadEntry> leads;
    for (std::size_t k : minimal) {
      divisors.push_back(&basis_[k]);
      leads.push_back(leads_[k]);
    }
    std::vector<TermList<F>> out;
    out.reserve(minimal.size());
    for (std::size_t k : minimal) out.push_back(reduce_full<F>(field_, order_, basis_[k], divisors, leads, 1));
    std::sort(out.begin(), out.end(),
              [&](const TermList<F>& a, const TermList<F>& b) { return compare(order_, a.front().mono, b.front().mono) < 0; });
    return out;
  }

  const F& field_;
  TermOrder order_;
  std::size_t nvars_;
  EngineLimits limits_;
  std::vector<TermList<F>> inputs_;
  std::vector<TermList<F>> basis_;
  std::vector<LeadEntry> leads_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

/// Engine entry point without the homogeneity requirement; internal callers
/// (intersections with a tag variable) rely on it.
template <CoefficientField F>
GroebnerBasis<F> buchberger_any(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens, TermOrder order,
                                EngineLimits limits) {
  BuchbergerEngine<F> engine(ring->field, order, ring->nvars(), limits);
  for (const auto& g : gens) {
    if (!same_ring(g.ring_ptr(), ring)) throw Error(ErrorKind::RingMismatch, "generator from another ring");
    if (!g.is_zero()) engine.add_input(g.in_order(order).terms());
  }
  GroebnerBasis<F> gb{ring, order, {}, true};
  for (auto& t : engine.run()) gb.basis.push_back(Polynomial<F>::adopt(ring, order, std::move(t)));
  return gb;
}

}  // namespace detail

/// Reduced Groebner basis of a homogeneous ideal.
template <CoefficientField F>
GroebnerBasis<F> buchberger(const Ideal<F>& ideal, TermOrder order = TermOrder::GradedLex, EngineLimits limits = {}) {
  return detail::buchberger_any(ideal.ring_ptr(), ideal.generators(), order, limits);
}

/// Remainder of f on division by `divisors` (full reduction, largest reducible
/// term first, first divisor in list order).
template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const std::vector<Polynomial<F>>& divisors, TermOrder order) {
  std::vector<Polynomial<F>> ordered;
  ordered.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (!same_ring(g.ring_ptr(), f.ring_ptr())) throw Error(ErrorKind::RingMismatch, "divisor from another ring");
    if (!g.is_zero()) ordered.push_back(g.in_order(order));
  }
  std::vector<const detail::TermList<F>*> ptrs;
  std::vector<detail::LeadEntry> leads;
  for (const auto& g : ordered) {
    ptrs.push_back(&g.terms());
    leads.push_back({g.leading_monomial(), g.leading_monomial().support_mask()});
  }
  auto rest = detail::reduce_full<F>(f.field(), order, f.in_order(order).terms(), ptrs, leads);
  return Polynomial<F>::adopt(f.ring_ptr(), order, std::move(rest));
}

template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& gb) {
  return normal_form(f, gb.basis, gb.order);
}

template <CoefficientField F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g, TermOrder order) {
  f.require_compatible(g);
  auto [cf, mf] = leading_term(f, order);
  auto [cg, mg] = leading_term(g, order);
  Monomial l = lcm(mf, mg);
  const F& field = f.field();
  auto a = f.in_order(order).mul_term(field.inv(cf), l / mf);
  auto b = g.in_order(order).mul_term(field.inv(cg), l / mg);
  return a - b;
}

/// Buchberger's criterion on every pair.
template <CoefficientField F>
bool is_groebner_basis(const std::vector<Polynomial<F>>& polys, TermOrder order) {
  std::vector<Polynomial<F>> nonzero;
  for (const auto& p : polys) {
    if (!p.is_zero()) nonzero.push_back(p.in_order(order));
  }
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
      if (nonzero[i].leading_monomial().coprime(nonzero[j].leading_monomial())) continue;
      if (!normal_form(s_polynomial(nonzero[i], nonzero[j], order), nonzero, order).is_zero()) return false;
    }
  }
  return true;
}

/// Turns a Groebner basis into the reduced one (minimal, monic, tail-reduced,
/// sorted ascending by leading monomial).
template <CoefficientField F>
GroebnerBasis<F> interreduce(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gb, TermOrder order) {
  std::vector<Polynomial<F>> polys;
  for (const auto& p : gb) {
    if (!p.is_zero()) polys.push_back(p.in_order(order).monic());
  }
  std::vector<Polynomial<F>> minimal;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < polys.size() && !redundant; ++l) {
      if (l == k) continue;
      const auto& ml = polys[l].leading_monomial();
      const auto& mk = polys[k].leading_monomial();
      redundant = ml.divides(mk) && (!(ml == mk) || l < k);
    }
    if (!redundant) minimal.push_back(polys[k]);
  }
  std::vector<const detail::TermList<F>*> ptrs;
  std::vector<detail::LeadEntry> leads;
  for (const auto& g : minimal) {
    ptrs.push_back(&g.terms());
    leads.push_back({g.leading_monomial(), g.leading_monomial().support_mask()});
  }
  GroebnerBasis<F> out{ring, order, {}, true};
  for (const auto& g : minimal) {
    out.basis.push_back(Polynomial<F>::adopt(ring, order, detail::reduce_full<F>(ring->field, order, g.terms(), ptrs, leads, 1)));
  }
  std::sort(out.basis.begin(), out.basis.end(), [order](const Polynomial<F>& a, const Polynomial<F>& b) {
    return detail::compare(order, a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return out;
}

template <CoefficientField F>
bool contains(const GroebnerBasis<F>& gb, const Polynomial<F>& f) {
  return normal_form(f, gb).is_zero();
}

/// Ideal equality through reduced GradedRevLex bases.
template <CoefficientField F>
bool same_ideal(const Ideal<F>& a, const Ideal<F>& b, EngineLimits limits = {}) {
  if (!same_ring(a.ring_ptr(), b.ring_ptr())) return false;
  return buchberger(a, TermOrder::GradedRevLex, limits).basis == buchberger(b, TermOrder::GradedRevLex, limits).basis;
}

/// I intersected with k[x_1..x_n], expressed in the ring without x_0. Uses the
/// GradedLex basis: for homogeneous input its x0-free elements generate the
/// elimination ideal.
template <CoefficientField F>
Ideal<F> elimination_ideal_x0(const Ideal<F>& ideal, EngineLimits limits = {}) {
  auto gb = buchberger(ideal, TermOrder::GradedLex, limits);
  return elimination_ideal_x0(gb);
}

template <CoefficientField F>
Ideal<F> elimination_ideal_x0(const GroebnerBasis<F>& gb) {
  if (gb.order != TermOrder::GradedLex) throw Error(ErrorKind::InvalidArgument, "x0 elimination needs a GradedLex basis");
  auto ring_bar = drop_first_variable(gb.ring);
  std::vector<Polynomial<F>> gens;
  for (const auto& g : gb.basis) {
    if (g.leading_monomial()[0] == 0) gens.push_back(restrict_to_tail(g, ring_bar));
  }
  return Ideal<F>(ring_bar, std::move(gens));
}

extern template GroebnerBasis<PrimeField> buchberger<PrimeField>(const Ideal<PrimeField>&, TermOrder, EngineLimits);
extern template GroebnerBasis<RationalField> buchberger<RationalField>(const Ideal<RationalField>&, TermOrder, EngineLimits);

}  // namespace ginlex
