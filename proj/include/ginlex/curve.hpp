#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ginlex/gin.hpp"
#include "ginlex/partial_elim.hpp"
#include "ginlex/quotient.hpp"

namespace ginlex {

template <CoefficientField F>
using Point = std::vector<typename F::Elem>;

struct CurveInvariants {
  std::uint64_t degree;
  std::int64_t genus;
  bool operator==(const CurveInvariants&) const = default;
};

/// Degree and arithmetic genus from P(m) = d m + 1 - genus.
template <CoefficientField F>
CurveInvariants curve_invariants(const Ideal<F>& ideal, EngineLimits limits = {}) {
  auto gb = buchberger(ideal, TermOrder::GradedRevLex, limits);
  auto data = hilbert_polynomial(MonomialIdeal(ideal.nvars(), gb.leading_monomials()));
  if (data.polynomial.degree() != 1) {
    throw Error(ErrorKind::NotACurve, "Hilbert polynomial " + data.polynomial.to_string() + " is not linear");
  }
  const auto& c = data.polynomial.coeffs;
  if (c[1] <= 0 || c[1].get_den() != 1 || c[0].get_den() != 1) {
    throw Error(ErrorKind::NotACurve, "Hilbert polynomial " + data.polynomial.to_string());
  }
  mpz_class genus = 1 - c[0].get_num();
  return {c[1].get_num().get_ui(), genus.get_si()};
}

/// max{ d, 1 + C(d-1, 2) - genus }.
inline std::int64_t predicted_M(std::uint64_t degree, std::int64_t genus) {
  if (degree < 1) throw Error(ErrorKind::InvalidArgument, "curve degree must be positive");
  std::int64_t second = 1 + static_cast<std::int64_t>(binomial(degree - 1, 2)) - genus;
  return std::max<std::int64_t>(static_cast<std::int64_t>(degree), second);
}

/// Castelnuovo's bound for the genus of a nondegenerate space curve of degree d.
inline std::uint64_t genus_bound_pi3(std::uint64_t degree) {
  if (degree < 3) throw Error(ErrorKind::InvalidArgument, "Castelnuovo bound needs d >= 3");
  if (degree % 2 == 0) return (degree / 2 - 1) * (degree / 2 - 1);
  return ((degree - 1) / 2) * ((degree - 3) / 2);
}

/// pi(d, 3) <= 1 + C(d-1, 2) - d; meaningful for d >= 5.
inline bool castelnuovo_below_formula(std::uint64_t degree) {
  return static_cast<std::int64_t>(genus_bound_pi3(degree)) <=
         1 + static_cast<std::int64_t>(binomial(degree - 1, 2)) - static_cast<std::int64_t>(degree);
}

template <CoefficientField F>
bool is_zero_point(const F& field, const Point<F>& p) {
  return std::all_of(p.begin(), p.end(), [&](const auto& c) { return field.is_zero(c); });
}

template <CoefficientField F>
bool vanishes_at(const Ideal<F>& ideal, const Point<F>& p) {
  if (p.size() != ideal.nvars()) throw Error(ErrorKind::RingMismatch, "point has the wrong number of coordinates");
  const F& field = ideal.ring().field;
  for (const auto& g : ideal.generators()) {
    if (!field.is_zero(g.evaluate(p))) return false;
  }
  return true;
}

template <CoefficientField F>
std::string point_to_string(const F& field, const Point<F>& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + field.format(p[i]);
  return out + "]";
}

/// r - rank J(p): dimension of the projective tangent space at p of the
/// scheme cut out by the given generators.
template <CoefficientField F>
std::size_t tangent_dim_at(const Ideal<F>& ideal, const Point<F>& p) {
  const F& field = ideal.ring().field;
  if (p.size() != ideal.nvars() || is_zero_point(field, p) || !vanishes_at(ideal, p)) {
    throw Error(ErrorKind::PointNotOnScheme, point_to_string(field, p));
  }
  std::vector<std::vector<typename F::Elem>> jacobian;
  for (const auto& g : ideal.generators()) {
    std::vector<typename F::Elem> row;
    for (std::size_t v = 0; v < ideal.nvars(); ++v) row.push_back(g.derivative(v).evaluate(p));
    jacobian.push_back(std::move(row));
  }
  return ideal.nvars() - 1 - detail::dense_rank(field, std::move(jacobian));
}

/// 2x2 minors of [[x0 .. x_{r-1}], [x1 .. x_r]].
template <CoefficientField F>
Ideal<F> rational_normal_curve(const F& field, std::size_t r) {
  if (r < 2) throw Error(ErrorKind::InvalidArgument, "rational normal curve needs r >= 2");
  auto ring = make_ring(field, r + 1);
  auto x = [&](std::size_t i) { return Polynomial<F>::variable(ring, i); };
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) gens.push_back(x(i) * x(j + 1) - x(i + 1) * x(j));
  }
  return Ideal<F>(ring, std::move(gens));
}

/// The point [1, s, ..., s^r] of the rational normal curve; nullopt for s = infinity.
template <CoefficientField F>
Point<F> rnc_point(const F& field, std::size_t r, std::optional<typename F::Elem> s) {
  Point<F> p(r + 1, field.zero());
  if (!s) {
    p[r] = field.one();
    return p;
  }
  p[0] = field.one();
  for (std::size_t i = 1; i <= r; ++i) p[i] = field.mul(p[i - 1], *s);
  return p;
}

/// p1 + t p2 for two distinct points of V(I); refuses results on V(I).
template <CoefficientField F>
Point<F> secant_point(const Ideal<F>& ideal, const Point<F>& p1, const Point<F>& p2, const typename F::Elem& t) {
  const F& field = ideal.ring().field;
  for (const auto* p : {&p1, &p2}) {
    if (p->size() != ideal.nvars() || is_zero_point(field, *p) || !vanishes_at(ideal, *p)) {
      throw Error(ErrorKind::PointNotOnScheme, point_to_string(field, *p));
    }
  }
  if (detail::dense_rank(field, {p1, p2}) < 2) throw Error(ErrorKind::InvalidArgument, "secant needs two distinct points");
  Point<F> q(p1.size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = field.add(p1[i], field.mul(t, p2[i]));
  if (vanishes_at(ideal, q)) throw Error(ErrorKind::LandedOnCurve, point_to_string(field, q));
  return q;
}

template <CoefficientField F>
struct Projection {
  Ideal<F> image;
  /// Change with column 0 equal to the center.
  LinearChange<F> change;
  LinearChange<F> inverse;

  /// Image of a point of the source space (not the center).
  Point<F> map_point(const Point<F>& p) const {
    auto moved = inverse.apply_to_point(p);
    return Point<F>(moved.begin() + 1, moved.end());
  }
};

/// Projection from q: move q to [1, 0, ..., 0], eliminate x0 and saturate.
template <CoefficientField F>
Projection<F> project_from_point(const Ideal<F>& ideal, const Point<F>& q, EngineLimits limits = {}) {
  const F& field = ideal.ring().field;
  const std::size_t n = ideal.nvars();
  if (q.size() != n || is_zero_point(field, q)) throw Error(ErrorKind::InvalidArgument, "bad projection center");
  if (vanishes_at(ideal, q)) throw Error(ErrorKind::CenterOnVariety, point_to_string(field, q));
  std::size_t pivot = 0;
  while (field.is_zero(q[pivot])) ++pivot;
  std::vector<std::vector<typename F::Elem>> rows(n, std::vector<typename F::Elem>(n, field.zero()));
  std::size_t col = 1;
  for (std::size_t j = 0; j < n; ++j) {
    rows[j][0] = q[j];
    if (j != pivot) rows[j][col++] = field.one();
  }
  auto change = LinearChange<F>::from_rows(field, std::move(rows));
  auto moved = apply_change(ideal, change);
  auto k0 = elimination_ideal_x0(moved, limits);
  auto image = saturate(k0, irrelevant_ideal(k0.ring_ptr()), limits);
  auto inverse = change.inverse();
  return {std::move(image), std::move(change), std::move(inverse)};
}

/// Off-curve center with entries in [1, bound] from mt19937_64(seed).
template <CoefficientField F>
Point<F> random_center(const Ideal<F>& ideal, std::uint64_t seed, std::uint64_t bound) {
  const F& field = ideal.ring().field;
  std::mt19937_64 gen(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Point<F> q;
    for (std::size_t i = 0; i < ideal.nvars(); ++i) q.push_back(field.from_int(static_cast<std::int64_t>(1 + gen() % bound)));
    if (!vanishes_at(ideal, q)) return q;
  }
  throw Error(ErrorKind::ResourceCap, "no center off the variety found");
}

/// Projects from random centers until the ideal lives in P^3.
template <CoefficientField F>
Ideal<F> project_to_space(const Ideal<F>& ideal, std::uint64_t seed, EngineLimits limits = {}) {
  Ideal<F> current = ideal;
  const F& field = ideal.ring().field;
  while (current.nvars() > 4) {
    auto q = random_center(current, seed++, field.default_entry_bound());
    current = project_from_point(current, q, limits).image;
  }
  return current;
}

/// Center p(s1) + t p(s2) on a secant of the original rational normal curve;
/// a missing parameter means s = infinity.
template <CoefficientField F>
struct SecantSpec {
  std::optional<typename F::Elem> s1;
  std::optional<typename F::Elem> s2;
  typename F::Elem t;
};

/// Rational normal curve of degree r projected successively from the given
/// secant centers. Curve points are carried through each projection so later
/// centers lie on secants of the current image.
template <CoefficientField F>
Ideal<F> project_rnc(const F& field, std::size_t r, const std::vector<SecantSpec<F>>& centers, EngineLimits limits = {}) {
  auto ideal = rational_normal_curve(field, r);
  std::vector<Projection<F>> chain;
  auto curve_point = [&](const std::optional<typename F::Elem>& s) {
    auto pt = rnc_point(field, r, s);
    for (const auto& proj : chain) pt = proj.map_point(pt);
    return pt;
  };
  for (const auto& c : centers) {
    auto q = secant_point(ideal, curve_point(c.s1), curve_point(c.s2), c.t);
    chain.push_back(project_from_point(ideal, q, limits));
    ideal = chain.back().image;
  }
  return ideal;
}

struct TangentCheck {
  std::string point;
  std::size_t dimension;
};

template <CoefficientField F>
struct CurveReport {
  /// Ambient dimension of the input and of the frame the gin lives in.
  std::size_t input_ambient;
  std::size_t ambient;
  CurveInvariants invariants;
  Exponent M_actual;
  Exponent M_ladder;
  std::int64_t M_predicted;
  MonomialIdeal gin;
  std::uint64_t k1_degree;
  std::int64_t k1_degree_formula;
  std::optional<bool> k1_saturated;
  bool power_witness;
  bool mixed_witness;
  std::vector<TangentCheck> tangent_checks;
  std::string verdict;
  PartialElimLadder<F> ladder;
};

/// x1^d and x0 x2^e (e = C(d-1,2) - genus) among the minimal generators of a
/// gin in four variables.
inline std::pair<bool, bool> witness_flags(const MonomialIdeal& gin_ideal, const CurveInvariants& inv) {
  if (gin_ideal.nvars() != 4) return {false, false};
  const auto& gens = gin_ideal.generators();
  auto has = [&](const Monomial& m) { return std::find(gens.begin(), gens.end(), m) != gens.end(); };
  bool power = has(Monomial{0, static_cast<Exponent>(inv.degree), 0, 0});
  std::int64_t e = static_cast<std::int64_t>(binomial(inv.degree - 1, 2)) - inv.genus;
  bool mixed = e > 0 && has(Monomial{1, 0, static_cast<Exponent>(e), 0});
  return {power, mixed};
}

struct ReportOptions {
  GinOptions gin{};
  std::uint64_t projection_seed = 101;
  bool check_saturation = true;
};

/// Full comparison of M(I_C) against max{d, 1 + C(d-1,2) - genus}. Tangent
/// points are in the input frame; a tangent dimension above 2 means the
/// formula's hypothesis fails and the verdict says so.
template <CoefficientField F>
CurveReport<F> curve_report(const Ideal<F>& ideal, const std::vector<Point<F>>& tangent_points,
                            const ReportOptions& options = {}) {
  const F& field = ideal.ring().field;
  std::vector<TangentCheck> tangents;
  for (const auto& p : tangent_points) tangents.push_back({point_to_string(field, p), tangent_dim_at(ideal, p)});
  auto invariants = curve_invariants(ideal, options.gin.limits);
  auto frame = project_to_space(ideal, options.projection_seed, options.gin.limits);
  auto ladder = partial_elim_ladder(frame, options.gin);
  auto gin_ideal = ladder.frame.ideal;
  Exponent M_actual = gin_ideal.max_degree().value_or(0);
  auto predicted = predicted_M(invariants.degree, invariants.genus);
  std::optional<bool> saturated;
  if (options.check_saturation && !ladder.at(1).is_unit() && !ladder.at(1).is_zero()) {
    saturated = is_saturated(ladder.at(1).ideal, options.gin.limits);
  }
  auto [power, mixed] = witness_flags(gin_ideal, invariants);
  bool violated = std::any_of(tangents.begin(), tangents.end(), [](const TangentCheck& t) { return t.dimension > 2; });
  std::string verdict = violated ? "hypothesis_violated" : (static_cast<std::int64_t>(M_actual) == predicted ? "agree" : "disagree");
  return CurveReport<F>{ideal.nvars() - 1,
                        frame.nvars() - 1,
                        invariants,
                        M_actual,
                        M_via_ladder(ladder),
                        predicted,
                        std::move(gin_ideal),
                        locus_degree(ladder, 1),
                        static_cast<std::int64_t>(binomial(invariants.degree - 1, 2)) - invariants.genus,
                        saturated,
                        power,
                        mixed,
                        std::move(tangents),
                        std::move(verdict),
                        std::move(ladder)};
}

extern template CurveInvariants curve_invariants<PrimeField>(const Ideal<PrimeField>&, EngineLimits);
extern template CurveInvariants curve_invariants<RationalField>(const Ideal<RationalField>&, EngineLimits);

}  // namespace ginlex
