//
// Project indcount - Copyright 2026 The indcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "indcount/integer.hpp"

namespace indcount {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// A strictly increasing list of vertex ids. Orders and hashes element-wise,
/// so it can key ordered and unordered containers.
class VertexSubset {
 public:
  VertexSubset() = default;

  VertexSubset(std::initializer_list<Vertex> vertices)
      : VertexSubset(std::vector<Vertex>(vertices)) { }

  /// Accepts any order; throws on negative ids or repeated ids.
  explicit VertexSubset(std::vector<Vertex> vertices)
      : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (!vertices_.empty() && vertices_.front() < 0)
      throw InputError("VertexSubset: negative vertex id");
    if (std::adjacent_find(vertices_.begin(), vertices_.end())
        != vertices_.end())
      throw InputError("VertexSubset: duplicate vertex id");
  }

  /// Skips validation; the caller guarantees strict ordering.
  static VertexSubset from_sorted(std::vector<Vertex> vertices) {
    VertexSubset s;
    s.vertices_ = std::move(vertices);
    return s;
  }

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }
  std::span<const Vertex> vertices() const { return vertices_; }

  bool contains(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  VertexSubset with(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(vertices_.size() + 1);
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    out.insert(out.end(), vertices_.begin(), it);
    if (it == vertices_.end() || *it != v) out.push_back(v);
    out.insert(out.end(), it, vertices_.end());
    return from_sorted(std::move(out));
  }

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;
  friend auto operator<=>(const VertexSubset&, const VertexSubset&) = default;

 private:
  std::vector<Vertex> vertices_;
};

struct VertexSubsetHash {
  std::size_t operator()(const VertexSubset& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ s.size();
    for (Vertex v : s) {
      h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6)
           + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built; use build_graph() to construct.
class Graph {
 public:
  Graph() = default;

  int order() const { return static_cast<int>(adjacency_.size()); }
  bool empty() const { return adjacency_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& a = adjacency_[u];
    return std::binary_search(a.begin(), a.end(), v);
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& a : adjacency_) twice += a.size();
    return twice / 2;
  }

  /// Edges (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  std::vector<int> degree_sequence() const {
    std::vector<int> d;
    d.reserve(adjacency_.size());
    for (const auto& a : adjacency_) d.push_back(static_cast<int>(a.size()));
    std::sort(d.begin(), d.end());
    return d;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(int n, std::span<const Edge> edges);
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Throws InputError on out-of-range ids, self-loops and repeated edges.
inline Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw InputError("build_graph: negative vertex count");
  Graph g;
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("build_graph: edge (" + std::to_string(u) + ","
                       + std::to_string(v) + ") out of range for n="
                       + std::to_string(n));
    }
    if (u == v)
      throw InputError("build_graph: self-loop at " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& a = g.adjacency_[v];
    std::sort(a.begin(), a.end());
    auto dup = std::adjacent_find(a.begin(), a.end());
    if (dup != a.end()) {
      throw InputError("build_graph: duplicate edge (" + std::to_string(v)
                       + "," + std::to_string(*dup) + ")");
    }
  }
  return g;
}

inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph build_graph(int n, const std::vector<Edge>& edges) {
  return build_graph(n, std::span<const Edge>(edges));
}

inline int max_degree(const Graph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

namespace detail {

inline void check_subset(const Graph& g, const VertexSubset& s,
                         const char* what) {
  if (!s.empty() && s[s.size() - 1] >= g.order()) {
    throw InputError(std::string(what) + ": vertex "
                     + std::to_string(s[s.size() - 1])
                     + " out of range for n=" + std::to_string(g.order()));
  }
}

}  // namespace detail

/// Vertex i of the result is the i-th smallest element of `s`.
inline Graph induced_subgraph(const Graph& g, const VertexSubset& s) {
  detail::check_subset(g, s, "induced_subgraph");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (Vertex w : g.neighbors(s[i])) {
      auto it = std::lower_bound(s.begin(), s.end(), w);
      if (it != s.end() && *it == w) {
        auto j = static_cast<Vertex>(it - s.begin());
        if (static_cast<Vertex>(i) < j) edges.emplace_back(i, j);
      }
    }
  }
  return build_graph(static_cast<int>(s.size()), edges);
}

/// Maximal connected subsets, ordered by their smallest vertex.
inline std::vector<VertexSubset> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  std::vector<VertexSubset> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (label[root] >= 0) continue;
    const int c = static_cast<int>(out.size());
    std::vector<Vertex> members;
    label[root] = c;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (label[w] < 0) {
          label[w] = c;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(VertexSubset::from_sorted(std::move(members)));
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return g.order() > 0 && connected_components(g).size() == 1;
}

/// N_G(S): vertices outside S with a neighbour in S.
inline VertexSubset neighborhood_of_set(const Graph& g, const VertexSubset& s) {
  detail::check_subset(g, s, "neighborhood_of_set");
  std::vector<Vertex> out;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (!s.contains(w)) out.push_back(w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return VertexSubset::from_sorted(std::move(out));
}

/// Vertices of `b` are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.order();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return build_graph(a.order() + b.order(), edges);
}

/// `copies` disjoint copies of `g`.
inline Graph repeat(const Graph& g, int copies) {
  Graph out;
  for (int i = 0; i < copies; ++i) out = disjoint_union(out, g);
  return out;
}

/// Relabels vertex v as perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order())
    throw InputError("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return build_graph(g.order(), edges);
}

}  // namespace indcount
