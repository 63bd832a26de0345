//
// Project indcount - Copyright 2026 The indcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "indcount/graph.hpp"
#include "indcount/integer.hpp"

namespace indcount {

/// All vertex subsets of size 1..bound inducing a connected subgraph.
///
/// Subsets are stored grouped by size, each size class sorted
/// lexicographically. A subset's id is its position in that global order,
/// so smaller subsets always have smaller ids.
class ConnectedSubsetIndex {
 public:
  using Id = std::size_t;

  ConnectedSubsetIndex() : offsets_(2, 0) { }

  int bound() const { return static_cast<int>(offsets_.size()) - 2; }
  std::size_t size() const { return subsets_.size(); }

  /// Subsets of exactly `s` vertices; empty for s outside 1..bound.
  std::span<const VertexSubset> of_size(int s) const {
    if (s < 1 || s > bound()) return {};
    return std::span<const VertexSubset>(subsets_).subspan(
        offsets_[s], offsets_[s + 1] - offsets_[s]);
  }

  /// Subsets of at most `s` vertices (a prefix of the global order).
  std::span<const VertexSubset> up_to_size(int s) const {
    s = std::clamp(s, 0, bound());
    return std::span<const VertexSubset>(subsets_).first(offsets_[s + 1]);
  }

  std::span<const VertexSubset> all() const { return subsets_; }

  const VertexSubset& at(Id id) const { return subsets_.at(id); }

  std::optional<Id> find(const VertexSubset& s) const {
    auto it = ids_.find(s);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const VertexSubset& s) const { return ids_.contains(s); }

 private:
  friend ConnectedSubsetIndex enumerate_connected_subsets(const Graph&, int);

  std::vector<VertexSubset> subsets_;
  // offsets_[s] is the id of the first subset of size s; size bound()+2.
  std::vector<std::size_t> offsets_;
  std::unordered_map<VertexSubset, Id, VertexSubsetHash> ids_;
};

/// Grows connected sets one neighbour at a time starting from singletons,
/// deduplicating each size class through a hash set.
inline ConnectedSubsetIndex enumerate_connected_subsets(const Graph& g,
                                                        int bound) {
  if (bound < 1)
    throw InputError("enumerate_connected_subsets: size bound must be >= 1");
  ConnectedSubsetIndex index;
  index.offsets_.assign(static_cast<std::size_t>(bound) + 2, 0);

  std::vector<VertexSubset> level;
  level.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) level.push_back(VertexSubset{v});

  for (int s = 1; s <= bound; ++s) {
    index.offsets_[s] = index.subsets_.size();
    if (level.empty()) continue;
    for (auto& subset : level) {
      index.ids_.emplace(subset, index.subsets_.size());
      index.subsets_.push_back(std::move(subset));
    }
    if (s == bound) {
      level.clear();
      continue;
    }
    std::unordered_set<VertexSubset, VertexSubsetHash> next;
    next.reserve(index.subsets_.size() - index.offsets_[s]);
    for (std::size_t id = index.offsets_[s]; id < index.subsets_.size();
         ++id) {
      const VertexSubset& base = index.subsets_[id];
      for (Vertex w : neighborhood_of_set(g, base)) next.insert(base.with(w));
    }
    level.assign(std::make_move_iterator(next.begin()),
                 std::make_move_iterator(next.end()));
    std::sort(level.begin(), level.end());
  }
  index.offsets_[bound + 1] = index.subsets_.size();
  return index;
}

namespace detail {

/// A BFS order of a connected graph from vertex 0, neighbours visited in id
/// order. parent[i] is the position of an earlier vertex adjacent to
/// order[i] (unused for i = 0).
struct AnchoredOrder {
  std::vector<Vertex> order;
  std::vector<int> parent;
};

inline AnchoredOrder anchored_order(const Graph& h) {
  AnchoredOrder out;
  const int k = h.order();
  std::vector<int> position(k, -1);
  std::queue<Vertex> queue;
  position[0] = 0;
  out.order.push_back(0);
  out.parent.push_back(-1);
  queue.push(0);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : h.neighbors(v)) {
      if (position[w] >= 0) continue;
      position[w] = static_cast<int>(out.order.size());
      out.order.push_back(w);
      out.parent.push_back(position[v]);
      queue.push(w);
    }
  }
  if (static_cast<int>(out.order.size()) != k)
    throw InputError("anchored_order: pattern is not connected");
  return out;
}

/// Backtracking search for induced embeddings of a connected pattern `h`
/// into `g`. Each placed vertex must agree on adjacency with every earlier
/// placed vertex, so a complete placement is an induced copy. `visit`
/// receives the image (indexed by position in the anchored order) and
/// returns false to stop the search.
template <typename Visit>
class AnchoredEmbedder {
 public:
  AnchoredEmbedder(const Graph& h, const Graph& g, Visit visit)
      : h_(h), g_(g), plan_(anchored_order(h)), visit_(std::move(visit)),
        image_(h.order(), -1), used_(g.order(), false) {
    const int k = h.order();
    wanted_.assign(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < i; ++j)
        wanted_[i][j] = h.adjacent(plan_.order[i], plan_.order[j]) ? 1 : 0;
  }

  /// Runs the search over all roots; returns false if visit stopped it.
  bool run() {
    for (Vertex root = 0; root < g_.order(); ++root) {
      if (!try_place(0, root)) return false;
    }
    return true;
  }

 private:
  // Returns false when the search must stop.
  bool try_place(int pos, Vertex target) {
    if (used_[target]) return true;
    if (g_.degree(target) < h_.degree(plan_.order[pos])) return true;
    for (int j = 0; j < pos; ++j) {
      bool edge = g_.adjacent(target, image_[j]);
      if (edge != static_cast<bool>(wanted_[pos][j])) return true;
    }
    image_[pos] = target;
    used_[target] = true;
    bool keep_going = true;
    if (pos + 1 == h_.order()) {
      keep_going = visit_(std::span<const Vertex>(image_));
    } else {
      Vertex anchor = image_[plan_.parent[pos + 1]];
      for (Vertex next : g_.neighbors(anchor)) {
        if (!try_place(pos + 1, next)) {
          keep_going = false;
          break;
        }
      }
    }
    used_[target] = false;
    image_[pos] = -1;
    return keep_going;
  }

  const Graph& h_;
  const Graph& g_;
  AnchoredOrder plan_;
  Visit visit_;
  std::vector<std::vector<char>> wanted_;
  std::vector<Vertex> image_;
  std::vector<bool> used_;
};

}  // namespace detail

/// Isomorphism test by anchored embedding of a connected `h1` into `h2`.
inline bool is_isomorphic_connected(const Graph& h1, const Graph& h2) {
  if (!is_connected(h1))
    throw InputError("is_isomorphic_connected: first graph must be connected "
                     "and nonempty");
  if (h1.order() != h2.order() || h1.edge_count() != h2.edge_count())
    return false;
  if (h1.degree_sequence() != h2.degree_sequence()) return false;
  bool found = false;
  detail::AnchoredEmbedder embedder(h1, h2, [&](std::span<const Vertex>) {
    found = true;
    return false;
  });
  embedder.run();
  return found;
}

/// ind(hc, g) for a connected pattern: distinct image sets of all induced
/// anchored embeddings.
inline Integer count_induced_connected(const Graph& hc, const Graph& g) {
  if (!is_connected(hc))
    throw InputError("count_induced_connected: pattern must be connected and "
                     "nonempty");
  if (hc.order() > g.order()) return 0;
  std::unordered_set<VertexSubset, VertexSubsetHash> found;
  detail::AnchoredEmbedder embedder(hc, g, [&](std::span<const Vertex> image) {
    found.insert(VertexSubset(std::vector<Vertex>(image.begin(), image.end())));
    return true;
  });
  embedder.run();
  return Integer(found.size());
}

}  // namespace indcount
