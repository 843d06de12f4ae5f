#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ginlex.hpp"

namespace test_support {

using namespace ginlex;

inline std::string data_path(const std::string& name) { return std::string(GINLEX_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <CoefficientField F = PrimeField>
Ideal<F> load(const std::string& name, const F& field = F()) {
  return build_ideal(parse_ideal_file(slurp(data_path(name))), field);
}

inline const std::vector<std::string>& shipped_files() {
  static const std::vector<std::string> files{"twisted_cubic.id", "elliptic_quartic.id", "conca_sidman.id",
                                              "ex_quartic_quadric.id", "reconstructed.id"};
  return files;
}

template <CoefficientField F>
Ideal<F> ideal_of(const RingPtr<F>& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial<F>> polys;
  for (const char* g : gens) polys.push_back(parse_polynomial(ring, g));
  return Ideal<F>(ring, std::move(polys));
}

inline RingPtr<PrimeField> ring4() { return make_ring(PrimeField(), 4); }

inline Monomial random_monomial(std::mt19937_64& gen, std::size_t nvars, Exponent max_exp) {
  std::vector<Exponent> e(nvars);
  for (auto& x : e) x = static_cast<Exponent>(gen() % (max_exp + 1));
  return Monomial(std::span<const Exponent>(e));
}

/// Random homogeneous polynomial of the given degree with up to `terms` terms.
template <CoefficientField F>
Polynomial<F> random_form(const RingPtr<F>& ring, std::mt19937_64& gen, Exponent degree, std::size_t terms,
                          TermOrder order = TermOrder::GradedLex) {
  auto monos = monomials_of_degree(ring->nvars(), degree);
  std::vector<Term<F>> out;
  for (std::size_t k = 0; k < terms; ++k) {
    auto c = ring->field.from_int(static_cast<std::int64_t>(gen() % 19) - 9);
    out.push_back({c, monos[gen() % monos.size()]});
  }
  return Polynomial<F>::from_terms(ring, order, std::move(out));
}

/// Standard monomials of degree m, counted by brute force.
inline std::uint64_t count_standard(const MonomialIdeal& ideal, Exponent m) {
  std::uint64_t count = 0;
  for (const auto& mono : monomials_of_degree(ideal.nvars(), m)) {
    if (!ideal.contains(mono)) ++count;
  }
  return count;
}

/// Checks the structural invariants of a polynomial: strictly descending,
/// nonzero coefficients.
template <CoefficientField F>
bool well_formed(const Polynomial<F>& f) {
  const auto& t = f.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (f.field().is_zero(t[i].coef)) return false;
    if (i > 0 && detail::compare(f.order(), t[i - 1].mono, t[i].mono) <= 0) return false;
  }
  return true;
}

inline MonomialIdeal monomials(std::size_t nvars, std::initializer_list<std::initializer_list<Exponent>> gens) {
  std::vector<Monomial> out;
  for (auto g : gens) out.emplace_back(g);
  return MonomialIdeal(nvars, std::move(out));
}

}  // namespace test_support
