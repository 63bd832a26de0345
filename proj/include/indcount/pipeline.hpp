//
// Project indcount - Copyright 2026 The indcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <future>
#include <string>
#include <vector>

#include "indcount/bigcp.hpp"
#include "indcount/graph.hpp"
#include "indcount/integer.hpp"
#include "indcount/linear_extractor.hpp"
#include "indcount/pattern_poly.hpp"
#include "indcount/subgraph_enum.hpp"

namespace indcount {

struct CountOptions {
  // Evaluation points are processed by up to this many threads.
  int workers = 1;
  // Return 0 as soon as some component of the pattern never occurs.
  bool early_exit = true;
};

struct CountDiagnostics {
  int n = 0;
  int m = 0;
  int max_degree = 0;
  int r = 0;
  std::size_t k = 0;
  std::size_t connected_subsets = 0;
  // One of: trivial, degree-bound, connected, absent-component, extraction.
  std::string method;
  double enumerate_seconds = 0;
  double vectors_seconds = 0;
  double coefficients_seconds = 0;
  double solve_seconds = 0;
  double total_seconds = 0;
};

struct CountResult {
  Integer count;
  CountDiagnostics diagnostics;
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace detail

/// ind(H, G) exactly.
///
/// H is split into component classes rho_1 H_1 ∪ ... ∪ rho_r H_r. For every
/// gamma with gamma·h = m the unknown ind(gamma H, G) enters s_m(nu) with
/// weight nu^(gamma ∘ h); evaluating s_m at k independent points nu_i and
/// solving the k×k system recovers all of them, rho's entry included.
inline CountResult count_induced(const Graph& pattern, const Graph& host,
                                 const CountOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  CountResult result;
  auto& diag = result.diagnostics;
  diag.n = host.order();
  diag.m = pattern.order();
  diag.max_degree = max_degree(host);
  auto finish = [&](Integer count, const char* method) {
    result.count = std::move(count);
    diag.method = method;
    diag.total_seconds = detail::seconds_since(start);
    return result;
  };

  if (diag.m == 0) return finish(1, "trivial");
  if (diag.m == 1) return finish(diag.n, "trivial");
  if (diag.m > diag.n) return finish(0, "trivial");
  if (max_degree(pattern) > diag.max_degree) return finish(0, "degree-bound");

  const PatternDecomposition decomposition = decompose_pattern(pattern);
  diag.r = decomposition.r();
  if (diag.r == 1 && decomposition.rho[0] == 1) {
    diag.k = 1;
    return finish(count_induced_connected(pattern, host), "connected");
  }
  if (options.early_exit) {
    for (const Graph& component : decomposition.components) {
      if (count_induced_connected(component, host) == 0)
        return finish(0, "absent-component");
    }
  }

  auto phase = std::chrono::steady_clock::now();
  CompositionSet compositions = enumerate_compositions(diag.m, decomposition.h);
  move_to_front(compositions, decomposition.rho);
  diag.k = compositions.size();
  const std::vector<ExponentVector> points =
      find_independent_vectors(compositions, decomposition.h, diag.m);
  diag.vectors_seconds = detail::seconds_since(phase);

  phase = std::chrono::steady_clock::now();
  const ConnectedSubsetIndex index = enumerate_connected_subsets(host, diag.m);
  diag.connected_subsets = index.size();
  diag.enumerate_seconds = detail::seconds_since(phase);

  phase = std::chrono::steady_clock::now();
  // nu^(gamma ∘ h) = mu^gamma with mu_j = nu_j^(h_j).
  std::vector<std::vector<Integer>> mus;
  for (const auto& nu : points) {
    std::vector<Integer> mu(nu.size());
    for (std::size_t j = 0; j < nu.size(); ++j)
      mu[j] = ipow(Integer(nu[j]), decomposition.h[j]);
    mus.push_back(std::move(mu));
  }
  std::vector<Integer> rhs(points.size());
  auto evaluate = [&](std::size_t i) {
    rhs[i] = z_mu_coefficient(host, mus[i], decomposition, diag.m, index);
  };
  const std::size_t workers = static_cast<std::size_t>(
      std::clamp<int>(options.workers, 1, static_cast<int>(points.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) evaluate(i);
  } else {
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < points.size(); i += workers) evaluate(i);
      }));
    }
    for (auto& job : jobs) job.get();
  }
  diag.coefficients_seconds = detail::seconds_since(phase);

  phase = std::chrono::steady_clock::now();
  const ExactMatrix system =
      extraction_matrix(points, compositions, decomposition.h);
  const std::vector<Rational> solution = solve_exact_system(system, rhs);
  for (std::size_t j = 0; j < solution.size(); ++j) {
    const Rational& value = solution[j];
    if (denominator(value) != 1 || value < 0) {
      throw InvariantError("count_induced: solved count for composition "
                           + std::to_string(j)
                           + " is not a nonnegative integer");
    }
  }
  diag.solve_seconds = detail::seconds_since(phase);
  return finish(numerator(solution[0]), "extraction");
}

}  // namespace indcount
