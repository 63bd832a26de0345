//
// Project indcount - Copyright 2026 The indcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <iostream>

#include <CLI11.hpp>

#include "indcount/cli.hpp"

int main(int argc, char** argv) {
  using indcount::cli::Command;

  CLI::App app{"Exact induced subgraph counting in bounded-degree graphs"};
  app.require_subcommand(1);

  indcount::cli::RunConfig config;
  app.add_option("--graph", config.graph_path, "host graph file");
  app.add_option("--pattern", config.pattern_path, "pattern graph file");
  app.add_option("-k", config.k, "size bound for enumerate");
  app.add_flag("--json", config.json, "print JSON with diagnostics");
  app.add_flag("--list", config.list, "enumerate: also print every subset");
  app.add_option("--workers", config.workers, "worker threads")
      ->check(CLI::PositiveNumber);

  auto* count = app.add_subcommand("count", "ind(pattern, graph) via the fast pipeline");
  auto* oracle = app.add_subcommand("oracle", "ind(pattern, graph) by brute force");
  auto* enumerate = app.add_subcommand("enumerate", "connected subsets up to size k");
  auto* selftest = app.add_subcommand("selftest", "cross-check count against oracle");
  for (auto* sub : {count, oracle, enumerate, selftest}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : indcount::cli::kUsageError;
  }

  if (*count) config.command = Command::kCount;
  if (*oracle) config.command = Command::kOracle;
  if (*enumerate) config.command = Command::kEnumerate;
  if (*selftest) config.command = Command::kSelftest;
  return indcount::cli::run(config, std::cout, std::cerr);
}
