#pragma once

#include <cstdint>
#include <future>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "ginlex/groebner.hpp"
#include "ginlex/linear_change.hpp"
#include "ginlex/monomial_ideal.hpp"

namespace ginlex {

/// Dense change with entries uniform in [1, bound] drawn from mt19937_64(seed);
/// resampled from the same stream until invertible.
template <CoefficientField F>
LinearChange<F> random_change(const F& field, std::uint64_t seed, std::size_t nvars, std::uint64_t bound) {
  if (bound < 2) throw Error(ErrorKind::InvalidArgument, "entry bound must be at least 2");
  std::mt19937_64 gen(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::vector<typename F::Elem>> rows(nvars);
    for (auto& row : rows) {
      row.reserve(nvars);
      for (std::size_t k = 0; k < nvars; ++k) row.push_back(field.from_int(static_cast<std::int64_t>(1 + gen() % bound)));
    }
    try {
      return LinearChange<F>::from_rows(field, std::move(rows));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SingularMatrix) throw;
    }
  }
  throw Error(ErrorKind::ResourceCap, "no invertible change found for seed " + std::to_string(seed));
}

template <CoefficientField F>
Ideal<F> apply_change(const Ideal<F>& ideal, const LinearChange<F>& change) {
  std::vector<Polynomial<F>> gens;
  for (const auto& g : ideal.generators()) gens.push_back(apply_change(g, change));
  return Ideal<F>(ideal.ring_ptr(), std::move(gens));
}

struct GinOptions {
  std::uint64_t seed1 = 1;
  std::uint64_t seed2 = 2;
  /// 0 selects the field default (99 for GF(p), 9 for the rationals).
  std::uint64_t bound = 0;
  std::size_t rounds = 3;
  bool parallel = true;
  EngineLimits limits{};
};

/// One sampled coordinate frame: the change, the moved ideal and its basis.
template <CoefficientField F>
struct GinSample {
  std::uint64_t seed;
  LinearChange<F> change;
  Ideal<F> transformed;
  GroebnerBasis<F> basis;
  MonomialIdeal initial;
};

template <CoefficientField F>
struct GinResult {
  MonomialIdeal ideal;
  TermOrder order;
  std::pair<std::uint64_t, std::uint64_t> seeds;
  std::uint64_t bound;
  std::size_t agreement;
  bool borel_fixed;
  /// The accepted frame (first seed of the agreeing pair).
  GinSample<F> frame;
};

template <CoefficientField F>
GinSample<F> sample_initial_ideal(const Ideal<F>& ideal, TermOrder order, const LinearChange<F>& change,
                                  std::uint64_t seed, EngineLimits limits) {
  auto moved = apply_change(ideal, change);
  auto gb = buchberger(moved, order, limits);
  MonomialIdeal initial(ideal.nvars(), gb.leading_monomials());
  return GinSample<F>{seed, change, std::move(moved), std::move(gb), std::move(initial)};
}

/// Generic initial ideal by two-sample agreement: in(g1 I) and in(g2 I) must
/// coincide and be Borel-fixed. Disagreement retries with fresh seeds and a
/// doubled entry bound.
template <CoefficientField F>
GinResult<F> gin(const Ideal<F>& ideal, TermOrder order = TermOrder::GradedLex, const GinOptions& options = {}) {
  const F& field = ideal.ring().field;
  const std::size_t n = ideal.nvars();
  std::uint64_t bound = options.bound ? options.bound : field.default_entry_bound();
  for (std::size_t round = 0; round < options.rounds; ++round) {
    std::uint64_t s1 = options.seed1 + round * 1'000'003ull;
    std::uint64_t s2 = options.seed2 + round * 1'000'003ull;
    auto c1 = random_change(field, s1, n, bound);
    auto c2 = random_change(field, s2, n, bound);
    while (c1 == c2) {
      s2 += 7919;
      c2 = random_change(field, s2, n, bound);
    }
    auto run = [&](const LinearChange<F>& c, std::uint64_t s) {
      return sample_initial_ideal(ideal, order, c, s, options.limits);
    };
    std::optional<GinSample<F>> a;
    std::optional<GinSample<F>> b;
    if (options.parallel) {
      auto future = std::async(std::launch::async, run, std::cref(c2), s2);
      a.emplace(run(c1, s1));
      b.emplace(future.get());
    } else {
      a.emplace(run(c1, s1));
      b.emplace(run(c2, s2));
    }
    bool borel = is_borel_fixed(a->initial);
    if (a->initial == b->initial && borel) {
      MonomialIdeal accepted = a->initial;
      return GinResult<F>{std::move(accepted), order, {s1, s2}, bound, 2, true, std::move(*a)};
    }
    bound *= 2;
  }
  throw Error(ErrorKind::GinInstability,
              "initial ideals disagreed or were not Borel-fixed after " + std::to_string(options.rounds) + " rounds");
}

/// M(I): the largest degree of a minimal generator of the GradedLex gin.
template <CoefficientField F>
Exponent M_invariant(const Ideal<F>& ideal, const GinOptions& options = {}) {
  return gin(ideal, TermOrder::GradedLex, options).ideal.max_degree().value_or(0);
}

extern template GinResult<PrimeField> gin<PrimeField>(const Ideal<PrimeField>&, TermOrder, const GinOptions&);
extern template GinResult<RationalField> gin<RationalField>(const Ideal<RationalField>&, TermOrder, const GinOptions&);

}  // namespace ginlex
