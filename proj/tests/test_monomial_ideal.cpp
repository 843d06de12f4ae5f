#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace ginlex;
using namespace test_support;

namespace {

MonomialIdeal twisted_cubic_gin() { return monomials(4, {{2, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {0, 3, 0, 0}}); }

MonomialIdeal random_monomial_ideal(std::mt19937_64& gen, std::size_t nvars) {
  std::vector<Monomial> gens;
  std::size_t count = 1 + gen() % 6;
  for (std::size_t i = 0; i < count; ++i) {
    auto m = random_monomial(gen, nvars, 3);
    if (m.is_one()) m = Monomial::variable(nvars, gen() % nvars, 2);
    gens.push_back(m);
  }
  return MonomialIdeal(nvars, std::move(gens));
}

}  // namespace

TEST(MinimalGenerators, Examples) {
  auto j = minimal_generators(3, {Monomial{0, 2, 0}, Monomial{0, 1, 1}, Monomial{0, 2, 1}});
  EXPECT_EQ(j, monomials(3, {{0, 2, 0}, {0, 1, 1}}));
  EXPECT_EQ(j.generators().size(), 2u);

  auto unit = minimal_generators(3, {Monomial(3), Monomial{1, 0, 0}});
  EXPECT_TRUE(unit.is_unit());
  EXPECT_EQ(unit.generators().size(), 1u);
}

TEST(MinimalGenerators, ReducedBasisLeadsAreAlreadyMinimal) {
  auto gb = buchberger(load("conca_sidman.id"), TermOrder::GradedLex);
  auto leads = gb.leading_monomials();
  MonomialIdeal j(4, leads);
  EXPECT_EQ(j.generators().size(), leads.size());
  for (const auto& m : leads) {
    EXPECT_NE(std::find(j.generators().begin(), j.generators().end(), m), j.generators().end());
  }
}

TEST(MinimalGenerators, NoGeneratorDividesAnother) {
  std::mt19937_64 gen(1);
  for (int trial = 0; trial < 200; ++trial) {
    auto j = random_monomial_ideal(gen, 4);
    const auto& g = j.generators();
    for (std::size_t a = 0; a < g.size(); ++a) {
      for (std::size_t b = 0; b < g.size(); ++b) {
        if (a != b) {
          EXPECT_FALSE(g[a].divides(g[b]));
        }
      }
    }
  }
}

TEST(Borel, Examples) {
  // <x1^2, x1x2, x2^4, x1x3^2> in the ring x1..x4, stored on indices 0..3.
  EXPECT_TRUE(is_borel_fixed(monomials(4, {{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 4, 0, 0}, {1, 0, 2, 0}})));
  EXPECT_FALSE(is_borel_fixed(monomials(2, {{0, 1}})));
  EXPECT_TRUE(is_borel_fixed(monomials(4, {{1, 0, 0, 0}})));
  EXPECT_TRUE(is_borel_fixed(twisted_cubic_gin()));
}

TEST(Borel, InvariantUnderRedundantGenerators) {
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 200; ++trial) {
    auto j = random_monomial_ideal(gen, 4);
    auto gens = j.generators();
    for (int k = 0; k < 3; ++k) gens.push_back(gens[gen() % gens.size()] * random_monomial(gen, 4, 2));
    EXPECT_EQ(is_borel_fixed(MonomialIdeal(4, gens)), is_borel_fixed(j));
  }
}

TEST(Borel, BruteForceExchangeCriterion) {
  // Reference: check m * x_i / x_j for every monomial in J up to the top
  // generator degree.
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 150; ++trial) {
    auto j = random_monomial_ideal(gen, 3);
    bool reference = true;
    for (Exponent d = 0; d <= j.max_degree().value_or(0) && reference; ++d) {
      for (const auto& m : monomials_of_degree(3, d)) {
        if (!j.contains(m)) continue;
        for (std::size_t jv = 1; jv < 3; ++jv) {
          if (m[jv] == 0) continue;
          for (std::size_t iv = 0; iv < jv; ++iv) {
            Monomial moved = m / Monomial::variable(3, jv) * Monomial::variable(3, iv);
            if (!j.contains(moved)) reference = false;
          }
        }
      }
    }
    EXPECT_EQ(is_borel_fixed(j), reference) << j.to_string();
  }
}

TEST(HilbertFunction, Examples) {
  EXPECT_EQ(hilbert_function(MonomialIdeal(4), 3), 20u);
  auto x0 = monomials(4, {{1, 0, 0, 0}});
  for (Exponent m = 0; m < 10; ++m) EXPECT_EQ(hilbert_function(x0, m), binomial(m + 2, 2));
  auto tc = twisted_cubic_gin();
  auto I = load("twisted_cubic.id");
  for (Exponent m = 1; m <= 8; ++m) {
    EXPECT_EQ(hilbert_function(tc, m), 3u * m + 1);
    EXPECT_EQ(hilbert_function(tc, m), hilbert_value_oracle(I, m));
  }
}

TEST(HilbertFunction, AgreesWithDirectCounting) {
  std::mt19937_64 gen(4);
  for (std::size_t n : {2u, 3u, 4u, 5u}) {
    for (int trial = 0; trial < 60; ++trial) {
      auto j = random_monomial_ideal(gen, n);
      for (Exponent m = 0; m <= 8; ++m) EXPECT_EQ(hilbert_function(j, m), count_standard(j, m)) << j.to_string();
    }
  }
  auto unit = minimal_generators(4, {Monomial(4)});
  for (Exponent m = 0; m < 4; ++m) EXPECT_EQ(hilbert_function(unit, m), 0u);
}

TEST(HilbertFunction, ShippedGinsAgreeWithCounting) {
  for (const auto& name : shipped_files()) {
    auto g = gin(load(name)).ideal;
    for (Exponent m = 0; m <= 8; ++m) EXPECT_EQ(hilbert_function(g, m), count_standard(g, m)) << name;
  }
}

TEST(HilbertPolynomial, Examples) {
  auto tc = hilbert_polynomial(twisted_cubic_gin());
  EXPECT_EQ(tc.polynomial.to_string(), "3*z + 1");
  EXPECT_EQ(tc.degree, 3u);
  EXPECT_EQ(tc.dimension, 2u);

  auto point = hilbert_polynomial(monomials(4, {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(point.polynomial.to_string(), "1");
  EXPECT_EQ(point.degree, 1u);
  EXPECT_EQ(point.dimension, 1u);

  auto plane = hilbert_polynomial(monomials(4, {{1, 0, 0, 0}}));
  EXPECT_EQ(plane.polynomial, interpolate(0, {1, 3, 6}));
  EXPECT_EQ(plane.degree, 1u);
  EXPECT_EQ(plane.dimension, 3u);
}

TEST(HilbertPolynomial, UnitAndArtinian) {
  auto unit = hilbert_polynomial(minimal_generators(4, {Monomial(4)}));
  EXPECT_TRUE(unit.polynomial.is_zero());
  EXPECT_EQ(unit.degree, 0u);
  EXPECT_EQ(unit.projective_degree(), 0u);

  // R/<x0^2, x1^2, x2^2> in three variables has length 8 and empty support.
  auto artinian = hilbert_polynomial(monomials(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
  EXPECT_TRUE(artinian.polynomial.is_zero());
  EXPECT_EQ(artinian.dimension, 0u);
  EXPECT_EQ(artinian.degree, 8u);
  EXPECT_EQ(artinian.projective_degree(), 0u);
  EXPECT_EQ(artinian.regularity, 4u);
}

TEST(HilbertPolynomial, ValidatesBeyondWindow) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto j = random_monomial_ideal(gen, 4);
    auto data = hilbert_polynomial(j);
    for (Exponent m = data.regularity; m < data.regularity + 12; ++m) {
      EXPECT_EQ(data.polynomial(mpq_class(m)), mpq_class(static_cast<unsigned long>(hilbert_function(j, m))))
          << j.to_string() << " m=" << m;
    }
    if (data.regularity > 0) {
      Exponent m = data.regularity - 1;
      EXPECT_NE(data.polynomial(mpq_class(m)), mpq_class(static_cast<unsigned long>(hilbert_function(j, m))));
    }
    if (!data.polynomial.is_zero()) {
      EXPECT_EQ(static_cast<std::size_t>(data.polynomial.degree()) + 1, data.dimension);
    }
  }
}

TEST(Regularity, Examples) {
  EXPECT_EQ(regularity_borel(twisted_cubic_gin()), 3u);
  EXPECT_EQ(regularity_borel(monomials(4, {{1, 0, 0, 0}})), 1u);
  try {
    regularity_borel(monomials(2, {{0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotBorelFixed);
  }
}

TEST(Regularity, ConcaSidmanFirstLevelGin) {
  auto ladder = partial_elim_ladder(load("conca_sidman.id"));
  ASSERT_GE(ladder.levels.size(), 2u);
  ASSERT_TRUE(ladder.levels[1].gin.has_value());
  EXPECT_EQ(regularity_borel(*ladder.levels[1].gin), 15u);
}

TEST(Interpolate, ExactRationalCoefficients) {
  // C(z+2, 2) = z^2/2 + 3z/2 + 1
  auto p = interpolate(3, {10, 15, 21});
  ASSERT_EQ(p.coeffs.size(), 3u);
  EXPECT_EQ(p.coeffs[2], mpq_class(1, 2));
  EXPECT_EQ(p.coeffs[1], mpq_class(3, 2));
  EXPECT_EQ(p.coeffs[0], mpq_class(1));
}
