//
// Project indcount - Copyright 2026 The indcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "indcount/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <unistd.h>

#include <gtest/gtest.h>
#include <json.hpp>

#include "indcount/io.hpp"
#include "test_support.hpp"

namespace indcount {
namespace {

using namespace indcount::testing;
using cli::Command;
using cli::RunConfig;

std::string data(const std::string& name) { return std::string(INDCOUNT_DATA_DIR) + "/" + name; }

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output run(const RunConfig& config) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(config, out, err);
  return {code, out.str(), err.str()};
}

RunConfig config(Command command, std::string graph = {}, std::string pattern = {}) {
  RunConfig c;
  c.command = command;
  c.graph_path = std::move(graph);
  c.pattern_path = std::move(pattern);
  return c;
}

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path()
            / ("indcount_cli_test_" + std::to_string(::getpid()) + "_"
               + std::to_string(counter++) + ".txt");
    std::ofstream(path_) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

TEST(ParseGraphTest, Examples) {
  EXPECT_EQ(parse_graph_text("p 3\n0 1\n1 2\n"), p(3));
  EXPECT_EQ(parse_graph_text("p 2\n"), e(2));
  EXPECT_EQ(parse_graph_text("# comment\n\np 3\n  2 1 \n# more\n1 0"), p(3));
  EXPECT_EQ(parse_graph_text("p 0\n"), Graph{});
}

TEST(ParseGraphTest, Errors) {
  EXPECT_THROW(parse_graph_text("p 2\n0 0\n"), InputError);
  EXPECT_THROW(parse_graph_text("p 2\n0 2\n"), InputError);
  EXPECT_THROW(parse_graph_text("p 3\n0 1\n1 0\n"), InputError);
  EXPECT_THROW(parse_graph_text("p 3\n0 1 2\n"), InputError);
  EXPECT_THROW(parse_graph_text("p 3\n0 x\n"), InputError);
  EXPECT_THROW(parse_graph_text("p 3\n0 -1\n"), InputError);
  EXPECT_THROW(parse_graph_text("0 1\n"), InputError);
  EXPECT_THROW(parse_graph_text("p\n"), InputError);
  EXPECT_THROW(parse_graph_text(""), InputError);
}

TEST(ParseGraphTest, ErrorsNameTheLine) {
  try {
    parse_graph_text("p 3\n0 1\n\n1 7\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos);
  }
}

TEST(ParseGraphTest, FormatRoundTrips) {
  for (const Graph& g : structured_hosts()) EXPECT_EQ(parse_graph_text(format_graph(g)), g);
}

TEST(ParseGraphTest, DataFiles) {
  EXPECT_EQ(read_graph_file(data("p3.txt")), p(3));
  EXPECT_EQ(read_graph_file(data("c6.txt")), c(6));
  EXPECT_EQ(read_graph_file(data("2k2.txt")), k(2) + k(2));
  EXPECT_EQ(read_graph_file(data("petersen.txt")).edge_count(), 15u);
  EXPECT_THROW(read_graph_file(data("missing.txt")), InputError);
}

TEST(CliRunTest, Count) {
  auto r = run(config(Command::kCount, data("c6.txt"), data("2k2.txt")));
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_EQ(r.out, "3\n");
  EXPECT_EQ(run(config(Command::kCount, data("p4.txt"), data("k1k2.txt"))).out, "2\n");
  EXPECT_EQ(run(config(Command::kCount, data("p3.txt"), data("k2.txt"))).out, "2\n");
}

TEST(CliRunTest, CountJson) {
  auto c = config(Command::kCount, data("petersen.txt"), data("k1k2.txt"));
  c.json = true;
  c.workers = 2;
  auto r = run(c);
  ASSERT_EQ(r.code, cli::kSuccess);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["count"], to_decimal(oracle::brute_force_ind(k(1) + k(2), gen::petersen())));
  EXPECT_EQ(j["n"], 10);
  EXPECT_EQ(j["m"], 3);
  EXPECT_EQ(j["max_degree"], 3);
  EXPECT_EQ(j["r"], 2);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["method"], "extraction");
  EXPECT_GT(j["connected_subsets"].get<int>(), 0);
  EXPECT_GE(j["elapsed"]["total_s"].get<double>(), 0.0);
}

TEST(CliRunTest, OracleAgreesWithCount) {
  for (const char* pattern : {"k2.txt", "2k2.txt", "k1k2.txt", "p3.txt", "k3.txt"}) {
    auto fast = run(config(Command::kCount, data("petersen.txt"), data(pattern)));
    auto slow = run(config(Command::kOracle, data("petersen.txt"), data(pattern)));
    EXPECT_EQ(fast.code, 0);
    EXPECT_EQ(slow.code, 0);
    EXPECT_EQ(fast.out, slow.out) << pattern;
  }
  auto c = config(Command::kOracle, data("c6.txt"), data("2k2.txt"));
  c.json = true;
  auto j = nlohmann::json::parse(run(c).out);
  EXPECT_EQ(j["count"], "3");
  EXPECT_EQ(j["method"], "brute-force");
}

TEST(CliRunTest, Enumerate) {
  auto c = config(Command::kEnumerate, data("p3.txt"));
  c.k = 3;
  auto r = run(c);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1:3\n2:2\n3:1\n");

  c.list = true;
  EXPECT_EQ(run(c).out, "1:3\n2:2\n3:1\n0\n1\n2\n0 1\n1 2\n0 1 2\n");

  c.json = true;
  auto j = nlohmann::json::parse(run(c).out);
  EXPECT_EQ(j["total"], 6);
  EXPECT_EQ(j["sizes"]["2"], 2);
  EXPECT_EQ(j["subsets"].size(), 6u);

  c.k = 0;
  EXPECT_EQ(run(c).code, cli::kUsageError);
}

TEST(CliRunTest, Selftest) {
  auto r = run(config(Command::kSelftest));
  EXPECT_EQ(r.code, cli::kSuccess);
  const std::size_t cases = cli::selftest_cases().size();
  EXPECT_EQ(cases, 18u * 18u);
  EXPECT_EQ(r.out, "selftest: " + std::to_string(cases) + "/" + std::to_string(cases)
                       + " passed\n");
}

TEST(CliRunTest, UsageErrors) {
  auto missing = run(config(Command::kCount, data("p3.txt")));
  EXPECT_EQ(missing.code, cli::kUsageError);
  EXPECT_NE(missing.err.find("--pattern"), std::string::npos);

  EXPECT_EQ(run(config(Command::kCount, data("nope.txt"), data("k2.txt"))).code,
            cli::kUsageError);

  TempFile bad("p 2\n0 0\n");
  auto r = run(config(Command::kOracle, bad.path(), data("k2.txt")));
  EXPECT_EQ(r.code, cli::kUsageError);
  EXPECT_NE(r.err.find("self-loop"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

}  // namespace
}  // namespace indcount
