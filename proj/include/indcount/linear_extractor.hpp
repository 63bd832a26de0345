//
// Project indcount - Copyright 2026 The indcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "indcount/integer.hpp"
#include "indcount/pattern_poly.hpp"

namespace indcount {

/// Thrown by the exact solver when the system has no unique solution.
class SingularMatrixError : public InvariantError {
 public:
  using InvariantError::InvariantError;
};

/// All gamma >= 0 with gamma·h = m.
struct CompositionSet {
  std::vector<ExponentVector> gammas;

  std::size_t size() const { return gammas.size(); }
  bool empty() const { return gammas.empty(); }
  const ExponentVector& operator[](std::size_t i) const { return gammas[i]; }
};

/// Compositions in decreasing lexicographic order, e.g. m = 4, h = (1,2)
/// gives (4,0), (2,1), (0,2).
inline CompositionSet enumerate_compositions(int m, const ExponentVector& h) {
  if (m < 0) throw InputError("enumerate_compositions: negative total");
  for (int hi : h)
    if (hi < 1) throw InputError("enumerate_compositions: sizes must be >= 1");
  CompositionSet out;
  ExponentVector current(h.size());
  auto recurse = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos == h.size()) {
      if (remaining == 0) out.gammas.push_back(current);
      return;
    }
    for (int c = remaining / h[pos]; c >= 0; --c) {
      current[pos] = c;
      self(self, pos + 1, remaining - c * h[pos]);
    }
    current[pos] = 0;
  };
  recurse(recurse, 0, m);
  return out;
}

/// Moves `first` to position 0, keeping the relative order of the rest.
inline void move_to_front(CompositionSet& set, const ExponentVector& first) {
  auto it = std::find(set.gammas.begin(), set.gammas.end(), first);
  if (it == set.gammas.end())
    throw InputError("move_to_front: vector is not in the composition set");
  std::rotate(set.gammas.begin(), it, it + 1);
}

/// Dense square matrix of exact integers.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t n) : n_(n), data_(n * n) { }
  ExactMatrix(std::initializer_list<std::initializer_list<long long>> rows)
      : ExactMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != n_) throw InputError("ExactMatrix: matrix not square");
      std::size_t j = 0;
      for (long long v : row) (*this)(i, j++) = v;
      ++i;
    }
  }

  std::size_t size() const { return n_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }

 private:
  std::size_t n_ = 0;
  std::vector<Integer> data_;
};

namespace detail {

// Fraction-free elimination on the n rows of `a` (n or more columns),
// in place. After return, rows are in upper echelon form for the first n
// columns and the last pivot equals ±det of the leading n×n block. Returns
// the sign of the row permutation, or 0 if the leading block is singular.
inline int bareiss_eliminate(std::vector<std::vector<Integer>>& a,
                             std::size_t n) {
  int sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < a[i].size(); ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
      }
      a[i][k] = 0;
    }
    previous = a[k][k];
  }
  return sign;
}

inline std::vector<std::vector<Integer>> rows_of(const ExactMatrix& m) {
  std::vector<std::vector<Integer>> rows(m.size(),
                                         std::vector<Integer>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) rows[i][j] = m(i, j);
  return rows;
}

}  // namespace detail

inline Integer determinant(const ExactMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  auto rows = detail::rows_of(m);
  int sign = detail::bareiss_eliminate(rows, n);
  if (sign == 0) return 0;
  return sign * rows[n - 1][n - 1];
}

/// Unique s with M s = b, via fraction-free elimination and exact back
/// substitution. The residual M s - b is checked to be exactly zero.
inline std::vector<Rational> solve_exact_system(const ExactMatrix& m,
                                                const std::vector<Integer>& b) {
  const std::size_t n = m.size();
  if (b.size() != n)
    throw InputError("solve_exact_system: right-hand side has wrong length");
  auto rows = detail::rows_of(m);
  for (std::size_t i = 0; i < n; ++i) rows[i].push_back(b[i]);
  if (n > 0 && detail::bareiss_eliminate(rows, n) == 0)
    throw SingularMatrixError("solve_exact_system: matrix is singular");

  std::vector<Rational> s(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc = Rational(rows[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(rows[ii][j]) * s[j];
    s[ii] = acc / Rational(rows[ii][ii]);
  }

  for (std::size_t i = 0; i < n; ++i) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < n; ++j) lhs += Rational(m(i, j)) * s[j];
    if (lhs != Rational(b[i]))
      throw InvariantError("solve_exact_system: nonzero residual");
  }
  return s;
}

/// nu* = (nu^(gamma_i ∘ h))_i.
inline std::vector<Integer> monomial_vector(const ExponentVector& nu,
                                            const CompositionSet& set,
                                            const ExponentVector& h) {
  std::vector<Integer> out;
  out.reserve(set.size());
  for (const auto& gamma : set.gammas) out.push_back(power(nu, hadamard(gamma, h)));
  return out;
}

/// Row i is nu_i*.
inline ExactMatrix extraction_matrix(const std::vector<ExponentVector>& nus,
                                     const CompositionSet& set,
                                     const ExponentVector& h) {
  if (nus.size() != set.size())
    throw InputError("extraction_matrix: need one vector per composition");
  ExactMatrix out(set.size());
  for (std::size_t i = 0; i < nus.size(); ++i) {
    auto row = monomial_vector(nus[i], set, h);
    for (std::size_t j = 0; j < row.size(); ++j) out(i, j) = std::move(row[j]);
  }
  return out;
}

/// Number of points in the search box {1..a_1 h_1 + 1} × ... for a = gamma.
inline Integer grid_size(const ExponentVector& gamma, const ExponentVector& h) {
  Integer size = 1;
  for (std::size_t i = 0; i < h.size(); ++i) size *= gamma[i] * h[i] + 1;
  return size;
}

/// Evaluation points nu_1..nu_k whose monomial vectors are linearly
/// independent.
///
/// Built one at a time. With nu_1..nu_{l-1} fixed and their leading
/// (l-1)×(l-1) block nonsingular, det M_l is a homogeneous polynomial P of
/// degree m in the unknown nu_l, whose coefficient on x^(gamma_l ∘ h) is
/// det M_{l-1} != 0. P has one term per row, with the cofactors along the
/// last column as coefficients. The Combinatorial Nullstellensatz then
/// guarantees a nonzero of P in the box prod {1..a_i h_i + 1} where
/// a = gamma_l; the box is scanned in lexicographic order and the first
/// nonzero point is taken.
inline std::vector<ExponentVector> find_independent_vectors(
    const CompositionSet& set, const ExponentVector& h, int m) {
  if (set.empty())
    throw InputError("find_independent_vectors: empty composition set");
  const std::size_t k = set.size();
  const std::size_t r = h.size();
  std::vector<ExponentVector> exponents;
  for (const auto& gamma : set.gammas) {
    if (gamma.size() != r || dot(gamma, h) != m)
      throw InputError("find_independent_vectors: composition does not sum to m");
    exponents.push_back(hadamard(gamma, h));
  }

  std::vector<ExponentVector> nus;
  // columns[j][i] = nu_j^(gamma_i ∘ h)
  std::vector<std::vector<Integer>> columns;
  for (std::size_t l = 0; l < k; ++l) {
    std::vector<Integer> cofactors(l + 1);
    for (std::size_t i = 0; i <= l; ++i) {
      ExactMatrix minor(l);
      for (std::size_t row = 0, mr = 0; row <= l; ++row) {
        if (row == i) continue;
        for (std::size_t col = 0; col < l; ++col) minor(mr, col) = columns[col][row];
        ++mr;
      }
      Integer det = determinant(minor);
      cofactors[i] = ((i + l) % 2 == 0) ? det : Integer(-det);
    }

    const ExponentVector& gamma = set[l];
    ExponentVector upper(r);
    long double log_size = 0;
    for (std::size_t d = 0; d < r; ++d) {
      upper[d] = gamma[d] * h[d] + 1;
      log_size += std::log(static_cast<long double>(upper[d]));
    }
    if (log_size > static_cast<long double>(m) + 1e-9L)
      throw InvariantError("find_independent_vectors: grid larger than e^m");

    ExponentVector x(r);
    for (std::size_t d = 0; d < r; ++d) x[d] = 1;
    auto advance = [&]() {
      for (std::size_t d = r; d-- > 0;) {
        if (x[d] < upper[d]) {
          ++x[d];
          return true;
        }
        x[d] = 1;
      }
      return false;
    };
    bool found = false;
    do {
      Integer value = 0;
      for (std::size_t i = 0; i <= l; ++i)
        if (cofactors[i] != 0) value += cofactors[i] * power(x, exponents[i]);
      found = value != 0;
    } while (!found && advance());
    if (!found)
      throw InvariantError("find_independent_vectors: no nonzero point in the "
                           "grid for composition " + std::to_string(l));

    std::vector<Integer> column(k);
    for (std::size_t i = 0; i < k; ++i) column[i] = power(x, exponents[i]);
    columns.push_back(std::move(column));
    nus.push_back(std::move(x));
  }
  return nus;
}

}  // namespace indcount
