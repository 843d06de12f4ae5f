#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ginlex/polynomial.hpp"

namespace ginlex {

namespace detail {

/// Row-echelon rank of a dense matrix over the field; `rows` is consumed.
template <CoefficientField F>
std::size_t dense_rank(const F& field, std::vector<std::vector<typename F::Elem>> rows) {
  std::size_t rank = 0;
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && field.is_zero(rows[pivot][col])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    auto inv = field.inv(rows[rank][col]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (field.is_zero(rows[r][col])) continue;
      auto factor = field.mul(rows[r][col], inv);
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] = field.submul(rows[r][c], factor, rows[rank][c]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

/// Invertible square matrix acting on polynomials by x_j -> sum_k M[j][k] x_k.
/// A polynomial f becomes f(Mx), so zero sets move by M^{-1}.
template <CoefficientField F>
class LinearChange {
 public:
  using Elem = typename F::Elem;

  static LinearChange from_rows(F field, std::vector<std::vector<Elem>> rows) {
    std::size_t n = rows.size();
    for (const auto& r : rows) {
      if (r.size() != n) throw Error(ErrorKind::InvalidArgument, "linear change must be square");
    }
    LinearChange m(std::move(field), std::move(rows));
    if (m.field_.is_zero(m.determinant())) throw Error(ErrorKind::SingularMatrix, "linear change is not invertible");
    return m;
  }

  static LinearChange identity(F field, std::size_t n) {
    std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n, field.zero()));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = field.one();
    return LinearChange(std::move(field), std::move(rows));
  }

  std::size_t size() const { return rows_.size(); }
  const Elem& at(std::size_t row, std::size_t col) const { return rows_[row][col]; }
  const std::vector<std::vector<Elem>>& rows() const { return rows_; }
  const F& field() const { return field_; }

  Elem determinant() const {
    auto a = rows_;
    std::size_t n = a.size();
    Elem det = field_.one();
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (pivot < n && field_.is_zero(a[pivot][col])) ++pivot;
      if (pivot == n) return field_.zero();
      if (pivot != col) {
        std::swap(a[pivot], a[col]);
        det = field_.neg(det);
      }
      det = field_.mul(det, a[col][col]);
      auto inv = field_.inv(a[col][col]);
      for (std::size_t r = col + 1; r < n; ++r) {
        if (field_.is_zero(a[r][col])) continue;
        auto factor = field_.mul(a[r][col], inv);
        for (std::size_t c = col; c < n; ++c) a[r][c] = field_.submul(a[r][c], factor, a[col][c]);
      }
    }
    return det;
  }

  LinearChange inverse() const {
    std::size_t n = size();
    auto a = rows_;
    auto inv = identity(field_, n).rows_;
    for (std::size_t col = 0; col < n; ++col) {
      std::size_t pivot = col;
      while (field_.is_zero(a[pivot][col])) ++pivot;
      std::swap(a[pivot], a[col]);
      std::swap(inv[pivot], inv[col]);
      auto scale = field_.inv(a[col][col]);
      for (std::size_t c = 0; c < n; ++c) {
        a[col][c] = field_.mul(a[col][c], scale);
        inv[col][c] = field_.mul(inv[col][c], scale);
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || field_.is_zero(a[r][col])) continue;
        auto factor = a[r][col];
        for (std::size_t c = 0; c < n; ++c) {
          a[r][c] = field_.submul(a[r][c], factor, a[col][c]);
          inv[r][c] = field_.submul(inv[r][c], factor, inv[col][c]);
        }
      }
    }
    return LinearChange(field_, std::move(inv));
  }

  friend LinearChange operator*(const LinearChange& a, const LinearChange& b) {
    std::size_t n = a.size();
    std::vector<std::vector<Elem>> out(n, std::vector<Elem>(n, a.field_.zero()));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (a.field_.is_zero(a.rows_[i][k])) continue;
        for (std::size_t j = 0; j < n; ++j) {
          out[i][j] = a.field_.add(out[i][j], a.field_.mul(a.rows_[i][k], b.rows_[k][j]));
        }
      }
    }
    return LinearChange(a.field_, std::move(out));
  }

  /// M * p
  std::vector<Elem> apply_to_point(std::span<const Elem> p) const {
    if (p.size() != size()) throw Error(ErrorKind::RingMismatch, "point dimension does not match change");
    std::vector<Elem> out(size(), field_.zero());
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t k = 0; k < size(); ++k) out[i] = field_.add(out[i], field_.mul(rows_[i][k], p[k]));
    }
    return out;
  }

  bool operator==(const LinearChange& other) const {
    if (size() != other.size()) return false;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) {
        if (!field_.equal(rows_[i][j], other.rows_[i][j])) return false;
      }
    }
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& row : rows_) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (j) out += ' ';
        out += field_.format(row[j]);
      }
      out += '\n';
    }
    return out;
  }

 private:
  LinearChange(F field, std::vector<std::vector<Elem>> rows) : field_(std::move(field)), rows_(std::move(rows)) {}

  F field_;
  std::vector<std::vector<Elem>> rows_;
};

/// f(x) -> f(Mx), renormalized into f's term order.
template <CoefficientField F>
Polynomial<F> apply_change(const Polynomial<F>& f, const LinearChange<F>& change) {
  std::size_t n = f.nvars();
  if (change.size() != n) throw Error(ErrorKind::RingMismatch, "change size does not match ring");
  const auto& ring = f.ring_ptr();
  const F& field = f.field();
  std::vector<Polynomial<F>> images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Term<F>> terms;
    for (std::size_t k = 0; k < n; ++k) {
      if (!field.is_zero(change.at(j, k))) terms.push_back({change.at(j, k), Monomial::variable(n, k)});
    }
    images.push_back(Polynomial<F>::from_terms(ring, f.order(), std::move(terms)));
  }
  // powers[j][e] = images[j]^e, filled on demand
  std::vector<std::vector<Polynomial<F>>> powers(n);
  auto power = [&](std::size_t j, Exponent e) -> const Polynomial<F>& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(Polynomial<F>::constant(ring, field.one(), f.order()));
    while (cache.size() <= e) cache.push_back(cache.back() * images[j]);
    return cache[e];
  };
  Polynomial<F> result(ring, f.order());
  for (const auto& t : f.terms()) {
    Polynomial<F> prod = Polynomial<F>::constant(ring, t.coef, f.order());
    for (std::size_t j = 0; j < n; ++j) {
      if (t.mono[j] != 0) prod = prod * power(j, t.mono[j]);
    }
    result = result + prod;
  }
  return result;
}

}  // namespace ginlex
