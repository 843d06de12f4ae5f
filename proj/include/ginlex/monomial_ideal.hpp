#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ginlex/error.hpp"
#include "ginlex/monomial.hpp"

namespace ginlex {

/// Monomial ideal stored by its unique minimal generating set, sorted
/// ascending in GradedLex.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars) : nvars_(nvars) {}

  MonomialIdeal(std::size_t nvars, std::vector<Monomial> monomials) : nvars_(nvars) {
    for (const auto& m : monomials) {
      if (m.size() != nvars) throw Error(ErrorKind::RingMismatch, "monomial has wrong variable count");
    }
    std::sort(monomials.begin(), monomials.end(),
              [](const Monomial& a, const Monomial& b) { return detail::compare(TermOrder::GradedLex, a, b) < 0; });
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
    // a divisor precedes its multiples in a degree-compatible order
    for (const auto& m : monomials) {
      bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
      if (!redundant) gens_.push_back(m);
    }
  }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
  }

  std::optional<Exponent> max_degree() const {
    if (gens_.empty()) return std::nullopt;
    Exponent d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  std::vector<std::string> to_strings(std::span<const std::string> names) const {
    std::vector<std::string> out;
    for (const auto& g : gens_) out.push_back(g.to_string(names));
    return out;
  }
  std::vector<std::string> to_strings() const { return to_strings(canonical_names(nvars_)); }

  std::string to_string(std::span<const std::string> names) const {
    std::string out = "(";
    auto strs = to_strings(names);
    for (std::size_t i = 0; i < strs.size(); ++i) {
      if (i) out += ", ";
      out += strs[i];
    }
    return out + ")";
  }
  std::string to_string() const { return to_string(canonical_names(nvars_)); }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
  }

 private:
  std::size_t nvars_;
  std::vector<Monomial> gens_;
};

inline MonomialIdeal minimal_generators(std::size_t nvars, std::vector<Monomial> monomials) {
  return MonomialIdeal(nvars, std::move(monomials));
}

/// True iff m * x_i / x_j stays in J for every generator m, every x_j | m and
/// every i < j (the characteristic-zero Borel criterion).
inline bool is_borel_fixed(const MonomialIdeal& ideal) {
  for (const auto& m : ideal.generators()) {
    for (std::size_t j = 1; j < m.size(); ++j) {
      if (m[j] == 0) continue;
      for (std::size_t i = 0; i < j; ++i) {
        Monomial moved = m;
        moved.set(j, m[j] - 1);
        moved.set(i, m[i] + 1);
        if (!ideal.contains(moved)) return false;
      }
    }
  }
  return true;
}

/// reg(J) = max generator degree, valid for Borel-fixed J only.
inline Exponent regularity_borel(const MonomialIdeal& ideal) {
  if (!is_borel_fixed(ideal)) throw Error(ErrorKind::NotBorelFixed, ideal.to_string());
  return ideal.max_degree().value_or(0);
}

/// Integer polynomial in t: numerator of the Hilbert series of R/J over
/// (1-t)^n.
using HilbertNumerator = std::vector<std::int64_t>;

namespace hilbert_detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::ResourceCap, "Hilbert numerator overflow");
  return r;
}

inline void add_shifted(HilbertNumerator& acc, const HilbertNumerator& p, std::size_t shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] = checked_add(acc[k + shift], p[k]);
}

inline void trim(HilbertNumerator& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

struct GeneratorsLess {
  bool operator()(const std::vector<Monomial>& a, const std::vector<Monomial>& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto ea = a[i].exponents();
      auto eb = b[i].exponents();
      if (!std::equal(ea.begin(), ea.end(), eb.begin())) {
        return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
      }
    }
    return false;
  }
};

using Memo = std::map<std::vector<Monomial>, HilbertNumerator, GeneratorsLess>;

/// Splitting recursion N(J) = N(J + p) + t^deg(p) N(J : p) on a pivot power p.
inline HilbertNumerator numerator(const MonomialIdeal& ideal, Memo& memo) {
  const auto& gens = ideal.generators();
  if (gens.empty()) return {1};
  if (ideal.is_unit()) return {};
  if (auto it = memo.find(gens); it != memo.end()) return it->second;

  std::size_t n = ideal.nvars();
  std::vector<std::size_t> count(n, 0);
  for (const auto& g : gens) {
    for (std::size_t v = 0; v < n; ++v) count[v] += g[v] != 0;
  }
  std::size_t pivot_var = 0;
  for (std::size_t v = 1; v < n; ++v) {
    if (count[v] > count[pivot_var]) pivot_var = v;
  }

  HilbertNumerator result;
  if (count[pivot_var] <= 1) {
    // pairwise coprime generators
    result = {1};
    for (const auto& g : gens) {
      HilbertNumerator next(result.size() + g.degree(), 0);
      for (std::size_t k = 0; k < result.size(); ++k) {
        next[k] = checked_add(next[k], result[k]);
        next[k + g.degree()] = checked_add(next[k + g.degree()], -result[k]);
      }
      result = std::move(next);
    }
  } else {
    Exponent e = 0;
    for (const auto& g : gens) {
      if (g[pivot_var] != 0 && (e == 0 || g[pivot_var] < e)) e = g[pivot_var];
    }
    Monomial pivot = Monomial::variable(n, pivot_var, e);
    std::vector<Monomial> plus;
    std::vector<Monomial> colon;
    for (const auto& g : gens) {
      if (!pivot.divides(g)) plus.push_back(g);
      Monomial q = g;
      q.set(pivot_var, g[pivot_var] > e ? g[pivot_var] - e : 0);
      colon.push_back(q);
    }
    plus.push_back(pivot);
    result = numerator(MonomialIdeal(n, std::move(plus)), memo);
    add_shifted(result, numerator(MonomialIdeal(n, std::move(colon)), memo), e);
  }
  trim(result);
  memo.emplace(gens, result);
  return result;
}

}  // namespace hilbert_detail

inline HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal) {
  hilbert_detail::Memo memo;
  return hilbert_detail::numerator(ideal, memo);
}

/// H(m) = sum_k N_k * C(m - k + n - 1, n - 1).
inline std::uint64_t hilbert_from_numerator(const HilbertNumerator& num, std::size_t nvars, Exponent m) {
  __int128 acc = 0;
  for (std::size_t k = 0; k < num.size() && k <= m; ++k) {
    acc += static_cast<__int128>(num[k]) * static_cast<__int128>(binomial(m - k + nvars - 1, nvars - 1));
  }
  if (acc < 0) throw Error(ErrorKind::ResourceCap, "negative Hilbert value: numerator overflow");
  return static_cast<std::uint64_t>(acc);
}

/// H(R/J, m).
inline std::uint64_t hilbert_function(const MonomialIdeal& ideal, Exponent m) {
  return hilbert_from_numerator(hilbert_numerator(ideal), ideal.nvars(), m);
}

/// Univariate polynomial with exact rational coefficients, lowest degree first.
struct RationalPolynomial {
  std::vector<mpq_class> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const mpq_class& leading() const { return coeffs.back(); }

  mpq_class operator()(const mpq_class& z) const {
    mpq_class acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  void trim() {
    while (!coeffs.empty() && sgn(coeffs.back()) == 0) coeffs.pop_back();
  }

  bool operator==(const RationalPolynomial& other) const { return coeffs == other.coeffs; }

  std::string to_string(const std::string& var = "z") const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      const auto& c = coeffs[static_cast<std::size_t>(k)];
      if (sgn(c) == 0) continue;
      bool negative = sgn(c) < 0;
      mpq_class mag = abs(c);
      if (out.empty()) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      bool unit = mag == 1 && k > 0;
      if (!unit) out += mag.get_str();
      if (k > 0) {
        if (!unit) out += '*';
        out += var;
        if (k > 1) out += '^' + std::to_string(k);
      }
    }
    return out;
  }
};

/// Newton interpolation through (start + i, values[i]).
inline RationalPolynomial interpolate(std::int64_t start, const std::vector<mpq_class>& values) {
  std::size_t n = values.size();
  std::vector<mpq_class> diffs = values;
  std::vector<mpq_class> newton(n);
  for (std::size_t k = 0; k < n; ++k) {
    newton[k] = diffs[0];
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  // sum_k newton[k] * C(z - start, k), expanded into the power basis
  RationalPolynomial result;
  result.coeffs.assign(n, 0);
  std::vector<mpq_class> basis{1};  // C(z - start, k) in power basis
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < basis.size(); ++j) result.coeffs[j] += newton[k] * basis[j];
    // basis <- basis * (z - start - k) / (k + 1)
    std::vector<mpq_class> next(basis.size() + 1, 0);
    mpq_class shift = mpq_class(start) + mpq_class(static_cast<long>(k));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      next[j + 1] += basis[j];
      next[j] -= basis[j] * shift;
    }
    for (auto& c : next) c /= static_cast<long>(k + 1);
    basis = std::move(next);
  }
  result.trim();
  return result;
}

/// Hilbert function values, Hilbert polynomial and derived invariants of R/J.
struct HilbertData {
  std::map<Exponent, std::uint64_t> values;
  RationalPolynomial polynomial;
  /// Smallest m0 with H(m) = P(m) for every m >= m0.
  Exponent regularity = 0;
  /// Krull dimension of R/J; 0 when P = 0.
  std::size_t dimension = 0;
  /// Leading coefficient of P times (deg P)!; for P = 0 the total length.
  std::uint64_t degree = 0;

  /// Degree of the projective scheme: 0 when it is empty.
  std::uint64_t projective_degree() const { return dimension == 0 ? 0 : degree; }
};

inline HilbertData hilbert_polynomial(const MonomialIdeal& ideal, std::size_t max_attempts = 8) {
  const std::size_t n = ideal.nvars();
  auto num = hilbert_numerator(ideal);
  auto value = [&](Exponent m) { return hilbert_from_numerator(num, n, m); };
  // H agrees with a polynomial from deg(N) - n + 1 on
  std::int64_t stable_from = std::max<std::int64_t>(0, static_cast<std::int64_t>(num.size()) - static_cast<std::int64_t>(n));

  HilbertData data;
  Exponent start = ideal.max_degree().value_or(0);
  bool validated = false;
  for (std::size_t attempt = 0; attempt < max_attempts && !validated; ++attempt) {
    std::vector<mpq_class> samples;
    for (std::size_t i = 0; i < n; ++i) samples.emplace_back(static_cast<unsigned long>(value(start + i)));
    data.polynomial = interpolate(start, samples);
    validated = true;
    for (Exponent probe : {start + static_cast<Exponent>(n), start + static_cast<Exponent>(n + 1),
                           static_cast<Exponent>(std::max<std::int64_t>(stable_from, start))}) {
      if (data.polynomial(mpq_class(static_cast<unsigned long>(probe))) != mpq_class(static_cast<unsigned long>(value(probe)))) {
        validated = false;
      }
    }
    if (!validated) start += static_cast<Exponent>(n + 2);
  }
  if (!validated) throw Error(ErrorKind::ResourceCap, "Hilbert function did not become polynomial in the probed window");

  Exponent window_end = std::max<Exponent>(start + static_cast<Exponent>(n + 1), static_cast<Exponent>(stable_from));
  data.regularity = 0;
  for (Exponent m = 0; m <= window_end; ++m) {
    auto h = value(m);
    data.values[m] = h;
    if (data.polynomial(mpq_class(static_cast<unsigned long>(m))) != mpq_class(static_cast<unsigned long>(h))) {
      data.regularity = m + 1;
    }
  }
  if (data.polynomial.is_zero()) {
    data.dimension = 0;
    std::uint64_t length = 0;
    for (const auto& [m, h] : data.values) length += h;
    data.degree = length;
  } else {
    data.dimension = static_cast<std::size_t>(data.polynomial.degree()) + 1;
    mpq_class lead = data.polynomial.leading();
    for (int k = 2; k <= data.polynomial.degree(); ++k) lead *= k;
    if (lead.get_den() != 1) throw Error(ErrorKind::InvalidArgument, "non-integral Hilbert polynomial degree");
    data.degree = lead.get_num().get_ui();
  }
  return data;
}

}  // namespace ginlex
