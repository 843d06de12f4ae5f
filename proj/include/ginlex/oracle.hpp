#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ginlex/groebner.hpp"

// Linear-algebra ground truth for Hilbert functions and ideal membership.
// Nothing here touches term orders or reductions by leading monomials: I_m is
// spanned by {monomial * generator} and its dimension is a matrix rank.

namespace ginlex {

namespace oracle_detail {

template <CoefficientField F>
using SparseRow = std::vector<std::pair<std::size_t, typename F::Elem>>;

/// Incremental row echelon form over sparse rows; columns are plain indices.
template <CoefficientField F>
class Echelon {
 public:
  Echelon(const F& field, std::size_t ncols) : field_(field), pivots_(ncols) {}

  /// Returns true if the row was independent of the rows seen so far.
  bool insert(SparseRow<F> row) {
    SparseRow<F> scratch;
    while (!row.empty()) {
      std::size_t col = row.front().first;
      auto& pivot = pivots_[col];
      if (!pivot) {
        auto inv = field_.inv(row.front().second);
        for (auto& e : row) e.second = field_.mul(e.second, inv);
        pivot = std::move(row);
        ++rank_;
        return true;
      }
      auto c = row.front().second;
      scratch.clear();
      std::size_t i = 1;
      std::size_t j = 1;
      const auto& p = *pivot;
      while (i < row.size() || j < p.size()) {
        if (j >= p.size() || (i < row.size() && row[i].first < p[j].first)) {
          scratch.push_back(std::move(row[i++]));
        } else if (i >= row.size() || p[j].first < row[i].first) {
          scratch.push_back({p[j].first, field_.neg(field_.mul(c, p[j].second))});
          ++j;
        } else {
          auto v = field_.submul(row[i].second, c, p[j].second);
          if (!field_.is_zero(v)) scratch.push_back({row[i].first, std::move(v)});
          ++i;
          ++j;
        }
      }
      row.swap(scratch);
    }
    return false;
  }

  std::size_t rank() const { return rank_; }

 private:
  const F& field_;
  std::vector<std::optional<SparseRow<F>>> pivots_;
  std::size_t rank_ = 0;
};

template <CoefficientField F>
struct DegreePiece {
  std::vector<Monomial> monomials;
  std::unordered_map<Monomial, std::size_t, MonomialHash> column;

  DegreePiece(std::size_t nvars, Exponent degree) : monomials(monomials_of_degree(nvars, degree)) {
    column.reserve(monomials.size());
    for (std::size_t i = 0; i < monomials.size(); ++i) column.emplace(monomials[i], i);
  }

  SparseRow<F> row_of(const Polynomial<F>& f, const Monomial& shift) const {
    SparseRow<F> row;
    row.reserve(f.size());
    for (const auto& t : f.terms()) row.push_back({column.at(t.mono * shift), t.coef});
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  }
};

inline constexpr std::size_t kOracleColumnCap = 4'000'000;

template <CoefficientField F>
Echelon<F> span_in_degree(const Ideal<F>& ideal, const DegreePiece<F>& piece, Exponent m) {
  Echelon<F> echelon(ideal.ring().field, piece.monomials.size());
  for (const auto& g : ideal.generators()) {
    Exponent e = g.degree();
    if (e > m) continue;
    for (const auto& shift : monomials_of_degree(ideal.nvars(), m - e)) echelon.insert(piece.row_of(g, shift));
  }
  return echelon;
}

}  // namespace oracle_detail

/// dim_k I_m by exact rank of the matrix of all monomial multiples of the
/// generators landing in degree m.
template <CoefficientField F>
std::size_t hilbert_dim_oracle(const Ideal<F>& ideal, Exponent m) {
  if (binomial(m + ideal.nvars() - 1, ideal.nvars() - 1) > oracle_detail::kOracleColumnCap) {
    throw Error(ErrorKind::ResourceCap, "oracle matrix too wide in degree " + std::to_string(m));
  }
  oracle_detail::DegreePiece<F> piece(ideal.nvars(), m);
  return oracle_detail::span_in_degree(ideal, piece, m).rank();
}

/// H(R/I, m) = C(m+n, n) - dim I_m (n+1 variables).
template <CoefficientField F>
std::uint64_t hilbert_value_oracle(const Ideal<F>& ideal, Exponent m) {
  std::uint64_t total = binomial(m + ideal.nvars() - 1, ideal.nvars() - 1);
  return total - hilbert_dim_oracle(ideal, m);
}

/// Membership of a homogeneous f: its coefficient row lies in the span of I_deg(f).
template <CoefficientField F>
bool oracle_contains(const Ideal<F>& ideal, const Polynomial<F>& f) {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous()) throw Error(ErrorKind::NotHomogeneous, f.to_string());
  Exponent m = f.degree();
  oracle_detail::DegreePiece<F> piece(ideal.nvars(), m);
  auto echelon = oracle_detail::span_in_degree(ideal, piece, m);
  return !echelon.insert(piece.row_of(f, Monomial(ideal.nvars())));
}

extern template std::uint64_t hilbert_value_oracle<PrimeField>(const Ideal<PrimeField>&, Exponent);
extern template std::uint64_t hilbert_value_oracle<RationalField>(const Ideal<RationalField>&, Exponent);

}  // namespace ginlex
