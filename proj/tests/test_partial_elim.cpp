#include <gtest/gtest.h>

#include "support.hpp"

using namespace ginlex;
using namespace test_support;

namespace {

// The 17 printed generators of Gin(K_1) for the Conca-Sidman curve, with
// y, z, t stored on indices 0, 1, 2 of Rbar.
MonomialIdeal printed_conca_sidman_k1_gin() {
  return monomials(3, {{4, 0, 0},  {3, 2, 0}, {2, 5, 0}, {1, 8, 0}, {0, 15, 0}, {2, 4, 1},
                       {3, 1, 2},  {2, 3, 2}, {1, 7, 2}, {3, 0, 3}, {2, 2, 4},  {1, 6, 4},
                       {2, 1, 5},  {1, 5, 6}, {2, 0, 7}, {1, 4, 8}, {1, 3, 10}});
}

// Minimal generators of Gin(I) with x0-degree exactly i, with x0 stripped.
MonomialIdeal exact_slice(const MonomialIdeal& g, Exponent i) {
  std::vector<Monomial> out;
  for (const auto& m : g.generators()) {
    if (m[0] == i) out.emplace_back(m.exponents().subspan(1));
  }
  return MonomialIdeal(g.nvars() - 1, std::move(out));
}

}  // namespace

TEST(PartialElim, LargeLevelIsUnit) {
  for (const auto& name : {"twisted_cubic.id", "conca_sidman.id"}) {
    auto gb = gin(load(name)).frame.basis;
    Exponent beta = *gb.initial_degree();
    for (Exponent i = beta; i < beta + 3; ++i) {
      auto k = partial_elim_general(gb, i);
      auto kb = buchberger(k, TermOrder::GradedLex);
      EXPECT_TRUE(MonomialIdeal(3, kb.leading_monomials()).is_unit()) << name << " i=" << i;
    }
  }
}

TEST(PartialElim, PureSquare) {
  auto I = ideal_of(ring4(), {"x0^2"});
  EXPECT_TRUE(partial_elim_general(I, 0).is_zero());
  EXPECT_TRUE(partial_elim_general(I, 1).is_zero());
  auto k2 = partial_elim_general(I, 2);
  ASSERT_EQ(k2.generators().size(), 1u);
  EXPECT_TRUE(k2.generators()[0].leading_monomial().is_one());

  auto ladder = partial_elim_ladder(I);
  ASSERT_EQ(ladder.levels.size(), 3u);
  EXPECT_TRUE(ladder.levels[0].is_zero());
  EXPECT_TRUE(ladder.levels[1].is_zero());
  EXPECT_TRUE(ladder.levels[2].is_unit());
  EXPECT_EQ(ladder.stable_level(), Exponent{2});
}

TEST(PartialElim, TwistedCubicFirstLevelIsOnePoint) {
  auto ladder = partial_elim_ladder(load("twisted_cubic.id"));
  const auto& k1 = ladder.at(1);
  EXPECT_EQ(k1.hilbert.dimension, 1u);
  EXPECT_EQ(locus_degree(ladder, 1), 1u);
  for (Exponent m = 0; m <= 6; ++m) EXPECT_EQ(hilbert_value_oracle(k1.ideal, m), 1u);
}

TEST(PartialElim, GeneralRecipeNeedsGradedLexBasis) {
  auto I = load("twisted_cubic.id");
  auto gb = buchberger(I, TermOrder::GradedRevLex);
  EXPECT_THROW(partial_elim_general(gb, 1), Error);
}

TEST(PartialElim, LevelZeroIsTheEliminationIdeal) {
  for (const auto& name : shipped_files()) {
    auto frame = gin(load(name)).frame;
    auto generic = partial_elim_generic(frame.basis, 0);
    EXPECT_TRUE(same_ideal(generic, elimination_ideal_x0(frame.transformed))) << name;
  }
}

TEST(PartialElim, GenericRecipeAgreesInGinFrame) {
  for (const auto& name : shipped_files()) {
    auto frame = gin(load(name)).frame;
    Exponent beta = *frame.basis.initial_degree();
    for (Exponent i = 0; i <= beta; ++i) {
      EXPECT_TRUE(same_ideal(partial_elim_generic(frame.basis, i), partial_elim_general(frame.basis, i)))
          << name << " i=" << i;
    }
  }
}

TEST(PartialElim, GeneralRecipeInSpecialCoordinates) {
  // The twisted cubic passes through [1,0,0,0], so no K_i is the unit ideal.
  auto gb = buchberger(load("twisted_cubic.id"), TermOrder::GradedLex);
  for (Exponent i = 0; i < 4; ++i) {
    auto kb = buchberger(partial_elim_general(gb, i), TermOrder::GradedLex);
    EXPECT_FALSE(MonomialIdeal(3, kb.leading_monomials()).is_unit()) << i;
  }
}

TEST(PartialElim, GenericRecipeFailsInSpecialCoordinates) {
  // <x1^2, x0*x2>: K_1 = <x1^2, x2>, but the d0 = 1 slice only gives <x2>.
  auto gb = buchberger(ideal_of(make_ring(PrimeField(), 3), {"x1^2", "x0*x2"}), TermOrder::GradedLex);
  try {
    partial_elim_generic(gb, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RecipeMismatch);
  }
}

TEST(PartialElim, InitialIdealsCommuteWithGin) {
  auto ladder = partial_elim_ladder(load("ex_quartic_quadric.id"));
  const auto& g = ladder.frame.ideal;
  for (const auto& level : ladder.levels) {
    EXPECT_EQ(level.initial, exact_slice(g, level.level)) << "i=" << level.level;
    EXPECT_EQ(level.initial, initial_slice(g, level.level)) << "i=" << level.level;
  }
}

TEST(PartialElim, ConcaSidmanFirstLevelGin) {
  auto ladder = partial_elim_ladder(load("conca_sidman.id"));
  ASSERT_TRUE(ladder.at(1).gin.has_value());
  EXPECT_EQ(*ladder.at(1).gin, printed_conca_sidman_k1_gin()) << ladder.at(1).gin->to_string();
  EXPECT_EQ(ladder.at(0).M(), Exponent{9});
  EXPECT_EQ(ladder.at(1).M(), Exponent{15});
  EXPECT_EQ(M_via_ladder(ladder), 16u);
}

TEST(Decomposition, PureSquare) {
  auto ladder = partial_elim_ladder(ideal_of(ring4(), {"x0^2"}));
  for (Exponent m = 0; m <= 10; ++m) {
    auto check = decomposition_check(ladder, m);
    EXPECT_TRUE(check.holds()) << check.diagnostic();
    std::uint64_t expected = binomial(m + 2, 2) + (m >= 1 ? binomial(m + 1, 2) : 0);
    EXPECT_EQ(check.lhs, expected);
  }
}

TEST(Decomposition, OracleBothSides) {
  for (const auto& [name, top] : std::vector<std::pair<std::string, Exponent>>{{"twisted_cubic.id", 6},
                                                                               {"conca_sidman.id", 16}}) {
    auto I = load(name);
    auto ladder = partial_elim_ladder(I);
    for (Exponent m = 1; m <= top; ++m) {
      std::uint64_t rhs = 0;
      for (Exponent i = 0; i <= m; ++i) {
        if (ladder.at(i).is_unit()) break;
        rhs += hilbert_value_oracle(ladder.at(i).ideal, m - i);
      }
      auto check = decomposition_check(ladder, m);
      EXPECT_EQ(hilbert_value_oracle(I, m), rhs) << name << " m=" << m;
      EXPECT_EQ(check.lhs, hilbert_value_oracle(I, m)) << name;
      EXPECT_EQ(check.rhs, rhs) << name;
      EXPECT_TRUE(check.holds()) << check.diagnostic();
    }
  }
}

TEST(Decomposition, ShippedCurvesUpToMPlusTwo) {
  for (const auto& name : shipped_files()) {
    auto ladder = partial_elim_ladder(load(name));
    Exponent top = *ladder.frame.ideal.max_degree() + 2;
    for (Exponent m = 0; m <= top; ++m) {
      auto check = decomposition_check(ladder, m);
      EXPECT_TRUE(check.holds()) << name << ' ' << check.diagnostic();
    }
  }
}

TEST(LocusDegree, Examples) {
  auto quartic = partial_elim_ladder(load("elliptic_quartic.id"));
  EXPECT_EQ(locus_degree(quartic, 1), 2u);
  auto cs = partial_elim_ladder(load("conca_sidman.id"));
  EXPECT_EQ(locus_degree(cs, 1), 18u);
  for (const auto& name : shipped_files()) EXPECT_EQ(locus_degree(partial_elim_ladder(load(name)), 2), 0u) << name;
}

TEST(LocusDegree, FirstLevelStabilizes) {
  // The quotient by K_1 is one-dimensional and its Hilbert function settles
  // at the locus degree.
  auto ladder = partial_elim_ladder(load("conca_sidman.id"));
  const auto& k1 = ladder.at(1);
  EXPECT_EQ(k1.hilbert.dimension, 1u);
  for (Exponent m = k1.hilbert.regularity; m < k1.hilbert.regularity + 2; ++m) {
    EXPECT_EQ(hilbert_value_oracle(k1.ideal, m), 18u);
  }
}

TEST(Ladder, MViaLadderExamples) {
  auto cs = partial_elim_ladder(load("conca_sidman.id"));
  EXPECT_EQ(M_via_ladder(cs), 16u);

  auto tc = partial_elim_ladder(load("twisted_cubic.id"));
  EXPECT_EQ(tc.at(0).M(), Exponent{3});
  EXPECT_EQ(tc.at(1).M(), Exponent{1});
  EXPECT_EQ(M_via_ladder(tc), 3u);

  auto R = ring4();
  for (Exponent d = 1; d <= 4; ++d) {
    std::mt19937_64 gen(100 + d);
    auto ladder = partial_elim_ladder(Ideal<PrimeField>(R, {random_form(R, gen, d, 10)}));
    EXPECT_EQ(ladder.levels.size(), d + 1u);
    EXPECT_EQ(M_via_ladder(ladder), d);
  }
}

TEST(Ladder, ShippedProperties) {
  for (const auto& name : shipped_files()) {
    auto I = load(name);
    auto ladder = partial_elim_ladder(I);
    EXPECT_TRUE(chain_holds(ladder)) << name;
    EXPECT_LE(ladder.levels.size(), ladder.beta + 1) << name;
    ASSERT_TRUE(ladder.stable_level().has_value()) << name;
    EXPECT_TRUE(ladder.levels.back().is_unit()) << name;
    for (const auto& level : ladder.levels) {
      EXPECT_TRUE(level.recipes_agree) << name << " i=" << level.level;
      EXPECT_TRUE(level.initial_borel_fixed) << name << " i=" << level.level;
    }
    EXPECT_EQ(M_via_ladder(ladder), M_invariant(I)) << name;
    EXPECT_EQ(M_via_ladder(ladder), *ladder.frame.ideal.max_degree()) << name;
  }
}

TEST(Ladder, FirstLevelIsSaturated) {
  for (const auto& name : shipped_files()) {
    auto ladder = partial_elim_ladder(load(name));
    EXPECT_TRUE(is_saturated(ladder.at(1).ideal)) << name;
  }
}

TEST(Ladder, RationalModeMatches) {
  for (const auto& name : {"twisted_cubic.id", "ex_quartic_quadric.id"}) {
    auto a = partial_elim_ladder(load(name));
    auto b = partial_elim_ladder(load(name, RationalField()));
    ASSERT_EQ(a.levels.size(), b.levels.size()) << name;
    for (std::size_t i = 0; i < a.levels.size(); ++i) {
      EXPECT_EQ(a.levels[i].initial, b.levels[i].initial) << name << " i=" << i;
      EXPECT_EQ(a.levels[i].gin, b.levels[i].gin) << name << " i=" << i;
    }
  }
}
