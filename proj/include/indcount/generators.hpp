//
// Project indcount - Copyright 2026 The indcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "indcount/graph.hpp"

namespace indcount::generators {

inline Graph edgeless(int n) { return build_graph(n, std::vector<Edge>{}); }

inline Graph path(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return build_graph(n, edges);
}

inline Graph cycle(int n) {
  if (n < 3) throw InputError("cycle: need at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return build_graph(n, edges);
}

inline Graph complete(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

/// K_{1,leaves} with centre 0.
inline Graph star(int leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return build_graph(leaves + 1, edges);
}

inline Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < 5; ++v) {
    edges.emplace_back(v, (v + 1) % 5);          // outer cycle
    edges.emplace_back(v, v + 5);                // spokes
    edges.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
  }
  return build_graph(10, edges);
}

/// Visits vertex pairs in random order and keeps each with probability
/// `density` when both endpoints still have degree below `max_deg`.
template <typename Rng>
Graph random_bounded_degree(int n, int max_deg, double density, Rng& rng) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::bernoulli_distribution keep(density);
  std::vector<int> degree(n, 0);
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) {
    if (degree[u] < max_deg && degree[v] < max_deg && keep(rng)) {
      edges.emplace_back(u, v);
      ++degree[u];
      ++degree[v];
    }
  }
  return build_graph(n, edges);
}

/// Uniform d-regular simple graph by the pairing model with rejection.
template <typename Rng>
Graph random_regular(int n, int d, Rng& rng) {
  if ((static_cast<long long>(n) * d) % 2 != 0 || d >= n)
    throw InputError("random_regular: no such graph");
  std::vector<Vertex> points;
  for (Vertex v = 0; v < n; ++v)
    for (int c = 0; c < d; ++c) points.push_back(v);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::shuffle(points.begin(), points.end(), rng);
    std::set<Edge> seen;
    bool simple = true;
    for (std::size_t i = 0; i < points.size() && simple; i += 2) {
      Vertex u = std::min(points[i], points[i + 1]);
      Vertex v = std::max(points[i], points[i + 1]);
      simple = u != v && seen.emplace(u, v).second;
    }
    if (simple) return build_graph(n, std::vector<Edge>(seen.begin(), seen.end()));
  }
  throw InvariantError("random_regular: pairing model kept failing");
}

}  // namespace indcount::generators
