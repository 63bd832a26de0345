//
// Project indcount - Copyright 2026 The indcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <chrono>
#include <cstddef>
#include <exception>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "indcount/generators.hpp"
#include "indcount/graph.hpp"
#include "indcount/io.hpp"
#include "indcount/oracle.hpp"
#include "indcount/pipeline.hpp"
#include "indcount/subgraph_enum.hpp"

namespace indcount::cli {

enum class Command { kCount, kOracle, kEnumerate, kSelftest };

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kInternalError = 2,
  kSelftestFailure = 3,
};

struct RunConfig {
  Command command = Command::kCount;
  std::string graph_path;
  std::string pattern_path;
  int k = 0;
  bool json = false;
  bool list = false;
  int workers = 1;
};

struct SelftestCase {
  std::string pattern_name;
  std::string host_name;
  Graph pattern;
  Graph host;
};

/// Every graph class on at most 4 vertices against a fixed host corpus.
inline std::vector<SelftestCase> selftest_cases() {
  namespace gen = generators;
  std::vector<std::pair<std::string, Graph>> hosts = {
      {"P1", gen::path(1)},       {"P4", gen::path(4)},
      {"P7", gen::path(7)},       {"C3", gen::cycle(3)},
      {"C5", gen::cycle(5)},      {"C6", gen::cycle(6)},
      {"K1,3", gen::star(3)},     {"K4", gen::complete(4)},
      {"Petersen", gen::petersen()},
      {"2K2+P3", disjoint_union(repeat(gen::complete(2), 2), gen::path(3))},
  };
  std::mt19937_64 rng(20260417);
  for (int i = 0; i < 8; ++i) {
    hosts.emplace_back("random" + std::to_string(i),
                       gen::random_bounded_degree(9, 3, 0.5, rng));
  }
  std::vector<SelftestCase> cases;
  for (int m = 1; m <= 4; ++m) {
    auto classes = oracle::graph_classes(m);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      std::string name = "order" + std::to_string(m) + "#" + std::to_string(c);
      for (const auto& [host_name, host] : hosts)
        cases.push_back({name, host_name, classes[c], host});
    }
  }
  return cases;
}

namespace detail {

inline nlohmann::json diagnostics_json(const CountResult& result) {
  const auto& d = result.diagnostics;
  return {
      {"count", to_decimal(result.count)},
      {"n", d.n},
      {"m", d.m},
      {"max_degree", d.max_degree},
      {"r", d.r},
      {"k", d.k},
      {"connected_subsets", d.connected_subsets},
      {"method", d.method},
      {"elapsed",
       {{"total_s", d.total_seconds},
        {"enumerate_s", d.enumerate_seconds},
        {"vectors_s", d.vectors_seconds},
        {"coefficients_s", d.coefficients_seconds},
        {"solve_s", d.solve_seconds}}},
  };
}

inline void require(const std::string& path, const char* flag) {
  if (path.empty()) throw InputError(std::string("missing required ") + flag);
}

inline int run_count(const RunConfig& config, std::ostream& out) {
  require(config.graph_path, "--graph");
  require(config.pattern_path, "--pattern");
  Graph host = read_graph_file(config.graph_path);
  Graph pattern = read_graph_file(config.pattern_path);
  CountOptions options;
  options.workers = config.workers;
  CountResult result = count_induced(pattern, host, options);
  if (config.json) {
    out << diagnostics_json(result).dump(2) << "\n";
  } else {
    out << to_decimal(result.count) << "\n";
  }
  return kSuccess;
}

inline int run_oracle(const RunConfig& config, std::ostream& out) {
  require(config.graph_path, "--graph");
  require(config.pattern_path, "--pattern");
  Graph host = read_graph_file(config.graph_path);
  Graph pattern = read_graph_file(config.pattern_path);
  const auto start = std::chrono::steady_clock::now();
  Integer count = oracle::brute_force_ind(pattern, host);
  const double seconds = indcount::detail::seconds_since(start);
  if (config.json) {
    nlohmann::json j = {{"count", to_decimal(count)},
                        {"n", host.order()},
                        {"m", pattern.order()},
                        {"method", "brute-force"},
                        {"elapsed", {{"total_s", seconds}}}};
    out << j.dump(2) << "\n";
  } else {
    out << to_decimal(count) << "\n";
  }
  return kSuccess;
}

inline int run_enumerate(const RunConfig& config, std::ostream& out) {
  require(config.graph_path, "--graph");
  if (config.k < 1) throw InputError("enumerate needs -k >= 1");
  Graph host = read_graph_file(config.graph_path);
  ConnectedSubsetIndex index = enumerate_connected_subsets(host, config.k);
  if (config.json) {
    nlohmann::json sizes = nlohmann::json::object();
    for (int s = 1; s <= config.k; ++s)
      sizes[std::to_string(s)] = index.of_size(s).size();
    nlohmann::json j = {{"k", config.k}, {"sizes", sizes}, {"total", index.size()}};
    if (config.list) {
      nlohmann::json subsets = nlohmann::json::array();
      for (const auto& s : index.all())
        subsets.push_back(std::vector<Vertex>(s.begin(), s.end()));
      j["subsets"] = std::move(subsets);
    }
    out << j.dump(2) << "\n";
    return kSuccess;
  }
  for (int s = 1; s <= config.k; ++s)
    out << s << ":" << index.of_size(s).size() << "\n";
  if (config.list) {
    for (const auto& s : index.all()) {
      for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
      out << "\n";
    }
  }
  return kSuccess;
}

inline int run_selftest(const RunConfig& config, std::ostream& out) {
  std::size_t passed = 0;
  std::vector<std::string> failures;
  const auto cases = selftest_cases();
  for (const auto& c : cases) {
    CountOptions options;
    options.workers = config.workers;
    Integer fast = count_induced(c.pattern, c.host, options).count;
    Integer slow = oracle::brute_force_ind(c.pattern, c.host);
    if (fast == slow) {
      ++passed;
    } else {
      failures.push_back(c.pattern_name + " in " + c.host_name + ": count "
                         + to_decimal(fast) + " vs oracle " + to_decimal(slow));
    }
  }
  if (config.json) {
    nlohmann::json j = {{"cases", cases.size()},
                        {"passed", passed},
                        {"failed", failures.size()},
                        {"failures", failures}};
    out << j.dump(2) << "\n";
  } else {
    for (const auto& f : failures) out << "FAIL " << f << "\n";
    out << "selftest: " << passed << "/" << cases.size() << " passed\n";
  }
  return failures.empty() ? kSuccess : kSelftestFailure;
}

}  // namespace detail

/// Executes one command; errors are reported on `err` and mapped to exit
/// codes.
inline int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::kCount: return detail::run_count(config, out);
      case Command::kOracle: return detail::run_oracle(config, out);
      case Command::kEnumerate: return detail::run_enumerate(config, out);
      case Command::kSelftest: return detail::run_selftest(config, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kUsageError;
}

}  // namespace indcount::cli
