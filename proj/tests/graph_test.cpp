//
// Project indcount - Copyright 2026 The indcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "indcount/graph.hpp"

#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace indcount {
namespace {

using namespace indcount::testing;

TEST(BuildGraphTest, PathHasExpectedDegrees) {
  Graph g = build_graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.degree(0), 1);
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.degree(2), 1);
  EXPECT_TRUE(g.adjacent(2, 1));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(BuildGraphTest, SingleVertexAndEmpty) {
  Graph g = build_graph(1, {});
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_TRUE(build_graph(0, {}).empty());
}

TEST(BuildGraphTest, RejectsMalformedEdges) {
  EXPECT_THROW(build_graph(2, {{0, 0}}), InputError);
  EXPECT_THROW(build_graph(2, {{0, 2}}), InputError);
  EXPECT_THROW(build_graph(2, {{-1, 1}}), InputError);
  EXPECT_THROW(build_graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(build_graph(-1, {}), InputError);
}

TEST(BuildGraphTest, AdjacencyListsSorted) {
  Graph g = build_graph(4, {{3, 0}, {0, 2}, {1, 0}});
  auto nb = g.neighbors(0);
  EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), (std::vector<Vertex>{1, 2, 3}));
}

TEST(MaxDegreeTest, Examples) {
  EXPECT_EQ(max_degree(p(3)), 2);
  EXPECT_EQ(max_degree(e(5)), 0);
  EXPECT_EQ(max_degree(k(4)), 3);
  EXPECT_EQ(max_degree(Graph{}), 0);
}

TEST(InducedSubgraphTest, Examples) {
  EXPECT_EQ(induced_subgraph(c(5), {0, 1, 2}), p(3));
  EXPECT_TRUE(induced_subgraph(c(5), {}).empty());
  EXPECT_EQ(induced_subgraph(k(4), {0, 2}), k(2));
  EXPECT_THROW(induced_subgraph(k(4), {1, 4}), InputError);
}

TEST(InducedSubgraphTest, RelabelsBySortedPosition) {
  Graph g = build_graph(6, {{1, 5}, {3, 5}});
  EXPECT_EQ(induced_subgraph(g, {1, 3, 5}), build_graph(3, {{0, 2}, {1, 2}}));
}

TEST(ConnectedComponentsTest, Examples) {
  EXPECT_EQ(connected_components(k(2) + k(1)),
            (std::vector<VertexSubset>{{0, 1}, {2}}));
  EXPECT_EQ(connected_components(c(5)), (std::vector<VertexSubset>{{0, 1, 2, 3, 4}}));
  EXPECT_EQ(connected_components(e(3)), (std::vector<VertexSubset>{{0}, {1}, {2}}));
  EXPECT_TRUE(connected_components(Graph{}).empty());
}

TEST(NeighborhoodTest, Examples) {
  EXPECT_EQ(neighborhood_of_set(p(3), {1}), (VertexSubset{0, 2}));
  EXPECT_TRUE(neighborhood_of_set(p(3), {0, 1, 2}).empty());
  EXPECT_EQ(neighborhood_of_set(c(5), {0}), (VertexSubset{1, 4}));
  EXPECT_THROW(neighborhood_of_set(p(3), {3}), InputError);
}

TEST(VertexSubsetTest, SortsAndRejectsDuplicates) {
  EXPECT_EQ(VertexSubset({3, 1, 2}), (VertexSubset{1, 2, 3}));
  EXPECT_THROW(VertexSubset({1, 1}), InputError);
  EXPECT_THROW(VertexSubset({-1}), InputError);
  EXPECT_LT((VertexSubset{0, 5}), (VertexSubset{1}));
  EXPECT_EQ((VertexSubset{1, 4}).with(2), (VertexSubset{1, 2, 4}));
}

// Random subsets of random bounded-degree graphs.
TEST(GraphPropertyTest, InducedComponentsNeighborhood) {
  std::mt19937_64 rng(7);
  for (const Graph& g : random_hosts(200, 1, 12, 4, 11)) {
    const int delta = max_degree(g);
    std::vector<Vertex> pick;
    std::bernoulli_distribution coin(0.5);
    for (Vertex v = 0; v < g.order(); ++v)
      if (coin(rng)) pick.push_back(v);
    VertexSubset s(pick);

    Graph sub = induced_subgraph(g, s);
    EXPECT_LE(max_degree(sub), delta);
    for (Vertex u = 0; u < sub.order(); ++u)
      for (Vertex v : sub.neighbors(u)) EXPECT_TRUE(sub.adjacent(v, u));

    EXPECT_LE(neighborhood_of_set(g, s).size(), s.size() * delta);

    std::set<Vertex> seen;
    std::size_t total = 0;
    Vertex last_min = -1;
    for (const auto& comp : connected_components(g)) {
      EXPECT_GT(comp[0], last_min);
      last_min = comp[0];
      total += comp.size();
      seen.insert(comp.begin(), comp.end());
      EXPECT_TRUE(neighborhood_of_set(g, comp).empty());
    }
    EXPECT_EQ(total, static_cast<std::size_t>(g.order()));
    EXPECT_EQ(seen.size(), static_cast<std::size_t>(g.order()));
  }
}

}  // namespace
}  // namespace indcount
