//
// Project indcount - Copyright 2026 The indcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "indcount/pattern_poly.hpp"

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "indcount/oracle.hpp"
#include "test_support.hpp"

namespace indcount {
namespace {

using namespace indcount::testing;

PatternDecomposition k1_k2() { return decompose_pattern(k(1) + k(2)); }

// All gamma in the box prod [0, total / h_j] with gamma·h == total.
std::vector<ExponentVector> box_compositions(int total, const ExponentVector& h) {
  std::vector<ExponentVector> out;
  ExponentVector gamma(h.size());
  auto rec = [&](auto&& self, std::size_t j) -> void {
    if (j == h.size()) {
      if (dot(gamma, h) == total) out.push_back(gamma);
      return;
    }
    for (int c = 0; c * h[j] <= total; ++c) {
      gamma[j] = c;
      self(self, j + 1);
    }
    gamma[j] = 0;
  };
  rec(rec, 0);
  return out;
}

TEST(DecomposePatternTest, Examples) {
  auto d = decompose_pattern(p(3));
  EXPECT_EQ(d.r(), 1);
  EXPECT_EQ(d.components, std::vector<Graph>{p(3)});
  EXPECT_EQ(d.rho, (ExponentVector{1}));
  EXPECT_EQ(d.h, (ExponentVector{3}));

  auto two_edges_and_vertex = decompose_pattern(k(2) + k(2) + k(1));
  EXPECT_EQ(two_edges_and_vertex.r(), 2);
  EXPECT_EQ(two_edges_and_vertex.components, (std::vector<Graph>{k(1), k(2)}));
  EXPECT_EQ(two_edges_and_vertex.rho, (ExponentVector{1, 2}));
  EXPECT_EQ(two_edges_and_vertex.h, (ExponentVector{1, 2}));
  EXPECT_EQ(two_edges_and_vertex.m, 5);

  auto three = decompose_pattern(e(3));
  EXPECT_EQ(three.components, std::vector<Graph>{k(1)});
  EXPECT_EQ(three.rho, (ExponentVector{3}));
  EXPECT_EQ(three.h, (ExponentVector{1}));

  EXPECT_THROW(decompose_pattern(Graph{}), InputError);
}

TEST(DecomposePatternTest, CanonicalOrderAndGrouping) {
  // P3 and K3 share a size; P3 has fewer edges and comes first. The two P3
  // copies are labelled differently.
  Graph h = k(3) + build_graph(3, {{0, 2}, {2, 1}}) + p(3) + k(1);
  auto d = decompose_pattern(h);
  EXPECT_EQ(d.components, (std::vector<Graph>{k(1), build_graph(3, {{0, 2}, {1, 2}}), k(3)}));
  EXPECT_EQ(d.rho, (ExponentVector{1, 2, 1}));
  EXPECT_EQ(dot(d.rho, d.h), d.m);
}

TEST(MatchToMultisetTest, Examples) {
  auto d = k1_k2();
  EXPECT_EQ(match_to_multiset(k(1) + k(2), d), (ExponentVector{1, 1}));
  EXPECT_EQ(match_to_multiset(p(3), d), std::nullopt);
  EXPECT_EQ(match_to_multiset(k(2) + k(2), d), (ExponentVector{0, 2}));
  EXPECT_EQ(match_to_multiset(Graph{}, d), (ExponentVector{0, 0}));
}

TEST(MatchToMultisetTest, RoundTripsMaterializedUnions) {
  std::vector<Graph> patterns = {k(1) + k(2), k(1) + p(3) + k(3), k(2) + c(4),
                                 gen::star(3) + p(4) + k(1)};
  for (const Graph& pattern : patterns) {
    auto d = decompose_pattern(pattern);
    for (int total = 0; total <= 6; ++total) {
      for (const auto& gamma : box_compositions(total, d.h)) {
        EXPECT_EQ(match_to_multiset(materialize(gamma, d), d), gamma);
      }
    }
  }
}

TEST(LambdaZMuTest, Examples) {
  auto d = k1_k2();
  EXPECT_EQ(lambda_z_mu(k(1) + k(2), 2, {2, 3}, d), 0);
  EXPECT_EQ(lambda_z_mu(k(1) + k(2), 3, {2, 3}, d), 6);
  EXPECT_EQ(lambda_z_mu(p(3), 3, {2, 3}, d), 0);
  EXPECT_EQ(lambda_z_mu(e(3), 3, {2, 3}, d), 8);
  EXPECT_THROW(lambda_z_mu(k(1), 1, {2}, d), InputError);
}

TEST(LambdaZMuTest, InvariantUnderRelabeling) {
  auto d = decompose_pattern(k(1) + p(3) + k(2));
  std::mt19937_64 rng(17);
  std::vector<Graph> fs = {k(1) + p(3), p(3) + k(2) + k(1), k(2) + k(2) + k(1),
                           c(4), p(3) + p(3)};
  for (const Graph& f : fs) {
    Integer expected = lambda_z_mu(f, f.order(), {2, 3, 5}, d);
    for (int t = 0; t < 10; ++t) {
      Graph g = relabel(f, random_permutation(f.order(), rng));
      EXPECT_EQ(lambda_z_mu(g, g.order(), {2, 3, 5}, d), expected);
    }
  }
}

TEST(ZMuCoefficientTest, Examples) {
  auto d = decompose_pattern(k(1));
  EXPECT_EQ(z_mu_coefficient(p(3), {1}, d, 2), 1);
  EXPECT_EQ(z_mu_coefficient(p(3), {2}, d, 2), 4);
  EXPECT_EQ(z_mu_coefficient(k(2), {1}, d, 2), 0);
  EXPECT_EQ(z_mu_coefficient(k(2), {1}, d, 0), 1);
}

TEST(ZMuCoefficientTest, ZeroEntriesInMu) {
  // mu = (0, 1) keeps only the gamma with gamma_1 = 0.
  auto d = k1_k2();
  Graph g = c(6);
  EXPECT_EQ(z_mu_coefficient(g, {0, 1}, d, 4), oracle::brute_force_ind(k(2) + k(2), g));
}

// s_i(mu)(G) against its defining sum with brute-force induced counts.
TEST(ZMuCoefficientTest, AgreesWithDefinition) {
  std::vector<Graph> patterns;
  for (int m = 1; m <= 4; ++m)
    for (const Graph& h : oracle::graph_classes(m)) patterns.push_back(h);
  auto hosts = random_hosts(12, 4, 9, 3, 404);
  hosts.push_back(c(6));
  hosts.push_back(gen::petersen());
  for (const Graph& pattern : patterns) {
    auto d = decompose_pattern(pattern);
    std::vector<ExponentVector> mus;
    ExponentVector mu(d.h.size());
    auto fill = [&](auto&& self, std::size_t j) -> void {
      if (j == mu.size()) {
        mus.push_back(mu);
        return;
      }
      for (int v = 1; v <= 3; ++v) {
        mu[j] = v;
        self(self, j + 1);
      }
    };
    fill(fill, 0);
    for (const Graph& g : hosts) {
      auto index = enumerate_connected_subsets(g, d.m);
      for (const auto& nu : mus) {
        Integer expected = 0;
        for (const auto& gamma : box_compositions(d.m, d.h))
          expected += power(nu, gamma) * oracle::brute_force_ind(materialize(gamma, d), g);
        ASSERT_EQ(z_mu_coefficient(g, nu, d, d.m, index), expected);
      }
    }
  }
}

TEST(ZMuCoefficientTest, MultiplicativeOverDisjointUnion) {
  std::vector<PatternDecomposition> ds = {k1_k2(), decompose_pattern(k(1) + p(3)),
                                          decompose_pattern(e(2))};
  auto hosts = random_hosts(6, 3, 8, 3, 505);
  const int m = 5;
  for (const auto& d : ds) {
    ExponentVector mu(d.h.size());
    for (std::size_t j = 0; j < mu.size(); ++j) mu[j] = static_cast<int>(j) + 2;
    ZMuOracle z(d, mu);
    for (std::size_t a = 0; a + 1 < hosts.size(); ++a) {
      const Graph& g1 = hosts[a];
      const Graph& g2 = hosts[a + 1];
      auto s1 = compute_bigcp_coefficients(g1, m, z).e;
      auto s2 = compute_bigcp_coefficients(g2, m, z).e;
      auto both = compute_bigcp_coefficients(disjoint_union(g1, g2), m, z).e;
      for (int i = 0; i <= m; ++i) {
        Integer conv = 0;
        for (int x = 0; x <= i; ++x) conv += s1[x] * s2[i - x];
        ASSERT_EQ(both[i], conv) << "i=" << i;
      }
    }
  }
}

}  // namespace
}  // namespace indcount
