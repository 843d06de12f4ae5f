#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ginlex/gin.hpp"
#include "ginlex/groebner.hpp"
#include "ginlex/monomial_ideal.hpp"

namespace ginlex {

namespace pei_detail {

/// fbar for every basis element passing `keep(d0)`, in the ring without x0.
template <CoefficientField F, class Keep>
std::vector<Polynomial<F>> slices(const GroebnerBasis<F>& gb, const RingPtr<F>& ring_bar, Keep keep) {
  std::vector<Polynomial<F>> out;
  for (const auto& g : gb.basis) {
    auto split = d0_split(g, TermOrder::GradedLex);
    if (keep(split.level)) out.push_back(restrict_to_tail(split.fbar, ring_bar));
  }
  return out;
}

template <CoefficientField F>
void require_glex(const GroebnerBasis<F>& gb) {
  if (gb.order != TermOrder::GradedLex) throw Error(ErrorKind::InvalidArgument, "partial elimination needs a GradedLex basis");
}

}  // namespace pei_detail

/// K_i = < fbar : f in G, d0(f) <= i > for the reduced GradedLex basis G.
/// The generating set is checked to be a Groebner basis of K_i.
template <CoefficientField F>
Ideal<F> partial_elim_general(const GroebnerBasis<F>& gb, Exponent level) {
  pei_detail::require_glex(gb);
  auto ring_bar = drop_first_variable(gb.ring);
  auto gens = pei_detail::slices(gb, ring_bar, [level](Exponent d0) { return d0 <= level; });
  if (!is_groebner_basis(gens, TermOrder::GradedLex)) {
    throw Error(ErrorKind::InvalidArgument, "slices with d0 <= " + std::to_string(level) + " are not a Groebner basis");
  }
  return Ideal<F>(ring_bar, std::move(gens));
}

template <CoefficientField F>
Ideal<F> partial_elim_general(const Ideal<F>& ideal, Exponent level, EngineLimits limits = {}) {
  return partial_elim_general(buchberger(ideal, TermOrder::GradedLex, limits), level);
}

/// K_i from the slice d0(f) = i alone. Only valid in generic coordinates; the
/// result is compared against partial_elim_general and a mismatch throws
/// RecipeMismatch.
template <CoefficientField F>
Ideal<F> partial_elim_generic(const GroebnerBasis<F>& gb, Exponent level, EngineLimits limits = {}) {
  pei_detail::require_glex(gb);
  auto ring_bar = drop_first_variable(gb.ring);
  Ideal<F> exact(ring_bar, pei_detail::slices(gb, ring_bar, [level](Exponent d0) { return d0 == level; }));
  if (!same_ideal(exact, partial_elim_general(gb, level), limits)) {
    throw Error(ErrorKind::RecipeMismatch, "d0 = " + std::to_string(level) + " slice does not generate K_" +
                                               std::to_string(level) + "; coordinates are not generic");
  }
  return exact;
}

template <CoefficientField F>
Ideal<F> partial_elim_generic(const Ideal<F>& ideal, Exponent level, EngineLimits limits = {}) {
  return partial_elim_generic(buchberger(ideal, TermOrder::GradedLex, limits), level, limits);
}

template <CoefficientField F>
struct LadderLevel {
  Exponent level;
  Ideal<F> ideal;
  GroebnerBasis<F> basis;
  MonomialIdeal initial;
  HilbertData hilbert;
  bool recipes_agree = false;
  bool initial_borel_fixed = false;
  /// Gin of K_i from its own two-seed run; empty for the zero ideal.
  std::optional<MonomialIdeal> gin;

  bool is_unit() const { return initial.is_unit(); }
  bool is_zero() const { return initial.is_zero(); }
  std::optional<Exponent> M() const {
    if (!gin) return std::nullopt;
    return gin->max_degree().value_or(0);
  }
};

template <CoefficientField F>
struct PartialElimLadder {
  Ideal<F> source;
  /// The accepted gin frame: source moved by the gin change, with its basis.
  GinResult<F> frame;
  /// Smallest degree of an element of I.
  Exponent beta = 0;
  std::vector<LadderLevel<F>> levels;

  /// First level whose K_i is the unit ideal, if reached.
  std::optional<Exponent> stable_level() const {
    for (const auto& l : levels) {
      if (l.is_unit()) return l.level;
    }
    return std::nullopt;
  }

  /// K_i for any i; past the last computed level the chain is constant.
  const LadderLevel<F>& at(Exponent i) const {
    return levels[std::min<std::size_t>(i, levels.size() - 1)];
  }
};

/// Seeds for the independent gin of K_i, disjoint from the frame's seeds.
inline GinOptions level_gin_options(const GinOptions& base, Exponent level) {
  GinOptions out = base;
  out.seed1 = base.seed1 + 7'777ull * (level + 1);
  out.seed2 = base.seed2 + 7'777ull * (level + 1);
  return out;
}

/// All partial elimination ideals of I in the coordinate frame accepted by the
/// gin protocol, from K_0 up to the first unit level.
template <CoefficientField F>
PartialElimLadder<F> partial_elim_ladder(const Ideal<F>& ideal, const GinOptions& options = {}) {
  if (ideal.is_zero()) throw Error(ErrorKind::InvalidArgument, "partial elimination of the zero ideal");
  auto frame = gin(ideal, TermOrder::GradedLex, options);
  const auto& gb = frame.frame.basis;
  Exponent beta = gb.initial_degree().value_or(0);
  Exponent top_d0 = 0;
  for (const auto& g : gb.basis) top_d0 = std::max(top_d0, g.leading_monomial()[0]);

  PartialElimLadder<F> ladder{ideal, std::move(frame), beta, {}};
  const auto& basis = ladder.frame.frame.basis;
  for (Exponent i = 0; i <= std::max(beta, top_d0); ++i) {
    auto k = partial_elim_general(basis, i);
    bool agree = true;
    try {
      partial_elim_generic(basis, i, options.limits);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::RecipeMismatch) throw;
      agree = false;
    }
    auto kb = interreduce(k.ring_ptr(), k.generators(), TermOrder::GradedLex);
    MonomialIdeal initial(k.nvars(), kb.leading_monomials());
    auto hilbert = hilbert_polynomial(initial);
    bool borel = is_borel_fixed(initial);
    std::optional<MonomialIdeal> level_gin;
    if (initial.is_unit()) {
      level_gin = initial;
    } else if (!initial.is_zero()) {
      level_gin = gin(k, TermOrder::GradedLex, level_gin_options(options, i)).ideal;
    }
    bool unit = initial.is_unit();
    ladder.levels.push_back(LadderLevel<F>{i, std::move(k), std::move(kb), std::move(initial), std::move(hilbert), agree,
                                           borel, std::move(level_gin)});
    if (unit) break;
  }
  return ladder;
}

/// Outcome of H(R/I, m) = sum_i H(Rbar/K_i, m - i).
struct DecompositionCheck {
  Exponent m;
  std::uint64_t lhs;
  std::uint64_t rhs;
  bool holds() const { return lhs == rhs; }
  std::string diagnostic() const {
    return "m=" + std::to_string(m) + ": H(R/I)=" + std::to_string(lhs) + " sum H(Rbar/K_i)=" + std::to_string(rhs);
  }
};

/// Left side from the gin of I, right side from the initial ideals of the K_i.
template <CoefficientField F>
DecompositionCheck decomposition_check(const PartialElimLadder<F>& ladder, Exponent m) {
  std::uint64_t lhs = hilbert_function(ladder.frame.ideal, m);
  std::uint64_t rhs = 0;
  for (Exponent i = 0; i <= m; ++i) {
    const auto& level = ladder.at(i);
    if (level.is_unit()) break;
    rhs += hilbert_function(level.initial, m - i);
  }
  return {m, lhs, rhs};
}

/// Degree of the projective scheme cut out by K_i; 0 once K_i is irrelevant
/// or the unit ideal.
template <CoefficientField F>
std::uint64_t locus_degree(const PartialElimLadder<F>& ladder, Exponent i) {
  return ladder.at(i).hilbert.projective_degree();
}

/// max over nonzero levels of M(K_i) + i.
template <CoefficientField F>
Exponent M_via_ladder(const PartialElimLadder<F>& ladder) {
  Exponent best = 0;
  for (const auto& level : ladder.levels) {
    if (auto m = level.M()) best = std::max<Exponent>(best, *m + level.level);
  }
  return best;
}

/// K_0 in K_1 in ...: every generator of K_i reduces to 0 modulo K_{i+1}.
template <CoefficientField F>
bool chain_holds(const PartialElimLadder<F>& ladder) {
  for (std::size_t i = 0; i + 1 < ladder.levels.size(); ++i) {
    const auto& next = ladder.levels[i + 1].basis;
    for (const auto& g : ladder.levels[i].ideal.generators()) {
      if (!contains(next, g)) return false;
    }
  }
  return true;
}

/// Initial ideal of K_i read off the gin of I: { m : x0^i m minimal in Gin(I) }.
inline MonomialIdeal initial_slice(const MonomialIdeal& gin_ideal, Exponent level) {
  std::vector<Monomial> out;
  const std::size_t n = gin_ideal.nvars();
  for (Exponent j = 0; j <= level; ++j) {
    for (const auto& g : gin_ideal.generators()) {
      if (g[0] != j) continue;
      out.emplace_back(g.exponents().subspan(1));
    }
  }
  return minimal_generators(n - 1, std::move(out));
}

extern template PartialElimLadder<PrimeField> partial_elim_ladder<PrimeField>(const Ideal<PrimeField>&, const GinOptions&);
extern template PartialElimLadder<RationalField> partial_elim_ladder<RationalField>(const Ideal<RationalField>&, const GinOptions&);

}  // namespace ginlex
