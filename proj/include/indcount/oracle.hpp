//
// Project indcount - Copyright 2026 The indcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

// Naive reference implementations. Nothing here uses the embedding search
// or the subset enumeration of subgraph_enum.hpp, so agreement between the
// two is independent evidence.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "indcount/graph.hpp"
#include "indcount/integer.hpp"

namespace indcount::oracle {

namespace detail {

// Calls visit(subset) for every `size`-subset of 0..n-1 in lexicographic
// order.
template <typename Visit>
void for_each_combination(int n, int size, Visit visit) {
  if (size < 0 || size > n) return;
  std::vector<Vertex> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    visit(static_cast<const std::vector<Vertex>&>(pick));
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

inline bool subset_connected(const Graph& g, const std::vector<Vertex>& s) {
  if (s.empty()) return false;
  std::vector<char> seen(s.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < s.size(); ++b) {
      if (!seen[b] && g.adjacent(s[a], s[b])) {
        seen[b] = 1;
        ++reached;
        stack.push_back(b);
      }
    }
  }
  return reached == s.size();
}

// Plain backtracking over vertex maps a -> b, vertex 0 of `a` first.
inline bool same_graph(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> map(n, -1);
  std::vector<char> taken(n, 0);
  auto place = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (Vertex w = 0; w < n; ++w) {
      if (taken[w] || a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u)
        ok = a.adjacent(u, v) == b.adjacent(map[u], w);
      if (!ok) continue;
      map[v] = w;
      taken[w] = 1;
      if (self(self, v + 1)) return true;
      taken[w] = 0;
    }
    return false;
  };
  return place(place, 0);
}

inline std::vector<Graph> pieces(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& c : connected_components(g)) out.push_back(induced_subgraph(g, c));
  std::stable_sort(out.begin(), out.end(), [](const Graph& x, const Graph& y) {
    return x.order() < y.order();
  });
  return out;
}

// Componentwise isomorphism: component sizes must agree bucket by bucket,
// then each component of `a` is paired with an unused isomorphic
// component of `b` of the same size.
inline bool isomorphic(const std::vector<Graph>& a, const std::vector<Graph>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].order() != b[i].order()) return false;
  std::vector<char> used(b.size(), 0);
  for (const Graph& piece : a) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size() && !matched; ++j) {
      if (used[j] || b[j].order() != piece.order()) continue;
      if (same_graph(piece, b[j])) {
        used[j] = 1;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace detail

inline bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return detail::isomorphic(detail::pieces(a), detail::pieces(b));
}

/// ind(H, G) by testing every |V(H)|-subset of V(G).
inline Integer brute_force_ind(const Graph& h, const Graph& g) {
  const int m = h.order();
  if (m > g.order()) return 0;
  const std::size_t edges = h.edge_count();
  const auto pattern = detail::pieces(h);
  Integer count = 0;
  detail::for_each_combination(g.order(), m, [&](const std::vector<Vertex>& s) {
    std::size_t e = 0;
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = a + 1; b < s.size(); ++b)
        if (g.adjacent(s[a], s[b])) ++e;
    if (e != edges) return;
    Graph f = induced_subgraph(g, VertexSubset::from_sorted(s));
    if (detail::isomorphic(detail::pieces(f), pattern)) ++count;
  });
  return count;
}

/// Every subset of size 1..k inducing a connected graph, by size then
/// lexicographically.
inline std::vector<VertexSubset> brute_force_connected_subsets(const Graph& g,
                                                               int k) {
  std::vector<VertexSubset> out;
  for (int size = 1; size <= std::min(k, g.order()); ++size) {
    detail::for_each_combination(g.order(), size,
                                 [&](const std::vector<Vertex>& s) {
      if (detail::subset_connected(g, s)) out.push_back(VertexSubset::from_sorted(s));
    });
  }
  return out;
}

/// One representative per isomorphism class of graphs on m vertices,
/// found by filtering all 2^(m(m-1)/2) labelled graphs.
inline std::vector<Graph> graph_classes(int m) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = u + 1; v < m; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> classes;
  const std::size_t total = std::size_t{1} << pairs.size();
  for (std::size_t bits = 0; bits < total; ++bits) {
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (bits >> e & 1U) edges.push_back(pairs[e]);
    Graph g = build_graph(m, edges);
    bool seen = std::any_of(classes.begin(), classes.end(),
                            [&](const Graph& c) { return brute_force_isomorphic(c, g); });
    if (!seen) classes.push_back(std::move(g));
  }
  return classes;
}

}  // namespace indcount::oracle
