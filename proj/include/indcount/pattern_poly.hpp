//
// Project indcount - Copyright 2026 The indcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "indcount/bigcp.hpp"
#include "indcount/graph.hpp"
#include "indcount/integer.hpp"
#include "indcount/subgraph_enum.hpp"

namespace indcount {

/// Nonnegative integer vector indexed by component class: compositions,
/// multiplicities, sizes and evaluation points all use it.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t r) : entries_(r, 0) { }
  ExponentVector(std::initializer_list<int> entries) : entries_(entries) { }
  explicit ExponentVector(std::vector<int> entries)
      : entries_(std::move(entries)) { }

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<int>& entries() const { return entries_; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;

  friend std::ostream& operator<<(std::ostream& os, const ExponentVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os << ')';
  }

 private:
  std::vector<int> entries_;
};

namespace detail {

inline void check_same_length(const ExponentVector& a, const ExponentVector& b,
                              const char* what) {
  if (a.size() != b.size())
    throw InputError(std::string(what) + ": length mismatch");
}

}  // namespace detail

inline long long dot(const ExponentVector& a, const ExponentVector& b) {
  detail::check_same_length(a, b, "dot");
  long long sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    sum += static_cast<long long>(a[i]) * b[i];
  return sum;
}

/// Pointwise product a∘b.
inline ExponentVector hadamard(const ExponentVector& a, const ExponentVector& b) {
  detail::check_same_length(a, b, "hadamard");
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

/// prod base_i^exponent_i, with 0^0 = 1.
inline Integer power(const ExponentVector& base, const ExponentVector& exponent) {
  detail::check_same_length(base, exponent, "power");
  Integer out = 1;
  for (std::size_t i = 0; i < base.size(); ++i)
    out *= ipow(Integer(base[i]), exponent[i]);
  return out;
}

/// A pattern written as rho_1 H_1 ∪ ... ∪ rho_r H_r with connected,
/// pairwise non-isomorphic H_j, ordered by (size, edge count, degree
/// sequence) and then by first appearance.
struct PatternDecomposition {
  std::vector<Graph> components;
  ExponentVector rho;
  ExponentVector h;
  int m = 0;

  int r() const { return static_cast<int>(components.size()); }
};

inline PatternDecomposition decompose_pattern(const Graph& pattern) {
  if (pattern.empty())
    throw InputError("decompose_pattern: empty pattern");
  std::vector<Graph> classes;
  std::vector<int> counts;
  for (const VertexSubset& c : connected_components(pattern)) {
    Graph piece = induced_subgraph(pattern, c);
    bool matched = false;
    for (std::size_t j = 0; j < classes.size() && !matched; ++j) {
      if (classes[j].order() == piece.order()
          && is_isomorphic_connected(classes[j], piece)) {
        ++counts[j];
        matched = true;
      }
    }
    if (!matched) {
      classes.push_back(std::move(piece));
      counts.push_back(1);
    }
  }

  std::vector<std::size_t> order(classes.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  auto key = [&](std::size_t j) {
    return std::make_tuple(classes[j].order(), classes[j].edge_count(),
                           classes[j].degree_sequence());
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key(a) < key(b); });

  PatternDecomposition d;
  d.rho = ExponentVector(order.size());
  d.h = ExponentVector(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    d.rho[j] = counts[order[j]];
    d.h[j] = classes[order[j]].order();
    d.components.push_back(classes[order[j]]);
  }
  d.m = pattern.order();
  return d;
}

/// gamma with F ≅ gamma_1 H_1 ∪ ... ∪ gamma_r H_r, if any. Each component
/// of F is compared only with the H_j of the same order; since the H_j are
/// pairwise non-isomorphic the first hit is the only one.
inline std::optional<ExponentVector> match_to_multiset(
    const Graph& f, const PatternDecomposition& d) {
  ExponentVector gamma(static_cast<std::size_t>(d.r()));
  for (const VertexSubset& c : connected_components(f)) {
    Graph piece = induced_subgraph(f, c);
    bool matched = false;
    for (int j = 0; j < d.r() && !matched; ++j) {
      if (d.h[j] != piece.order()) continue;
      if (is_isomorphic_connected(piece, d.components[j])) {
        ++gamma[j];
        matched = true;
      }
    }
    if (!matched) return std::nullopt;
  }
  return gamma;
}

/// Coefficient lambda(F, i) of ind(F, ·) in s_i(mu): mu^gamma when F has i
/// vertices and is gamma-H, zero otherwise.
inline Integer lambda_z_mu(const Graph& f, int i, const ExponentVector& mu,
                           const PatternDecomposition& d) {
  if (static_cast<int>(mu.size()) != d.r())
    throw InputError("lambda_z_mu: mu has the wrong length");
  if (f.order() != i) return 0;
  auto gamma = match_to_multiset(f, d);
  if (!gamma) return 0;
  return power(mu, *gamma);
}

/// The univariate evaluation Z(G; mu_1 z, ..., mu_r z) as a coefficient
/// oracle with alpha = 1. Weights are exact integers so that large
/// evaluation points do not overflow.
class ZMuOracle {
 public:
  ZMuOracle(const PatternDecomposition& d, std::vector<Integer> mu)
      : decomposition_(&d), mu_(std::move(mu)) {
    if (static_cast<int>(mu_.size()) != d.r())
      throw InputError("ZMuOracle: mu has the wrong length");
  }
  ZMuOracle(const PatternDecomposition& d, const ExponentVector& mu)
      : ZMuOracle(d, std::vector<Integer>(mu.entries().begin(), mu.entries().end())) { }

  int alpha() const { return 1; }
  Integer lambda(const Graph& f, int i) const {
    if (f.order() != i) return 0;
    auto gamma = match_to_multiset(f, *decomposition_);
    if (!gamma) return 0;
    Integer out = 1;
    for (std::size_t j = 0; j < mu_.size(); ++j) out *= ipow(mu_[j], (*gamma)[j]);
    return out;
  }
  const std::vector<Integer>& mu() const { return mu_; }

 private:
  const PatternDecomposition* decomposition_;
  std::vector<Integer> mu_;
};

static_assert(LambdaOracle<ZMuOracle>);

/// s_m(mu)(G) = sum over gamma·h = m of mu^gamma ind(gamma H, G).
inline Integer z_mu_coefficient(const Graph& g, std::vector<Integer> mu,
                                const PatternDecomposition& d, int m,
                                const ConnectedSubsetIndex& index) {
  if (m < 0) throw InputError("z_mu_coefficient: negative index");
  ZMuOracle oracle(d, std::move(mu));
  if (m == 0) return 1;
  return compute_bigcp_coefficients(g, m, oracle, index).e[m];
}

inline Integer z_mu_coefficient(const Graph& g, const ExponentVector& mu,
                                const PatternDecomposition& d, int m,
                                const ConnectedSubsetIndex& index) {
  return z_mu_coefficient(
      g, std::vector<Integer>(mu.entries().begin(), mu.entries().end()), d, m, index);
}

inline Integer z_mu_coefficient(const Graph& g, const ExponentVector& mu,
                                const PatternDecomposition& d, int m) {
  if (m <= 0) return z_mu_coefficient(g, mu, d, m, ConnectedSubsetIndex{});
  return z_mu_coefficient(g, mu, d, m, enumerate_connected_subsets(g, m));
}

/// Materializes gamma_1 H_1 ∪ ... ∪ gamma_r H_r.
inline Graph materialize(const ExponentVector& gamma,
                         const PatternDecomposition& d) {
  if (static_cast<int>(gamma.size()) != d.r())
    throw InputError("materialize: gamma has the wrong length");
  Graph out;
  for (int j = 0; j < d.r(); ++j)
    out = disjoint_union(out, repeat(d.components[j], gamma[j]));
  return out;
}

}  // namespace indcount
