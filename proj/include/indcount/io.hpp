//
// Project indcount - Copyright 2026 The indcount Authors.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

// Edge-list text format:
//
//   # comment lines start with '#'
//   p <n>          first non-comment line, declares vertices 0..n-1
//   <u> <v>        one undirected edge per line, 0 <= u, v < n
//
// Tokens are whitespace separated; blank lines are ignored and the final
// newline is optional.

#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "indcount/graph.hpp"

namespace indcount {

namespace detail {

inline long long parse_label(const std::string& token, int line) {
  long long value = -1;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value < 0
      || value > std::numeric_limits<int>::max()) {
    throw InputError("line " + std::to_string(line) + ": expected a "
                     "nonnegative integer, got '" + token + "'");
  }
  return value;
}

}  // namespace detail

inline Graph parse_graph_file(std::istream& in) {
  std::string text;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  std::vector<Edge> edges;
  while (std::getline(in, text)) {
    ++line_no;
    std::istringstream tokens(text);
    std::vector<std::string> fields;
    for (std::string t; tokens >> t;) fields.push_back(t);
    if (fields.empty() || fields[0][0] == '#') continue;
    if (!have_header) {
      if (fields.size() != 2 || fields[0] != "p")
        throw InputError("line " + std::to_string(line_no)
                         + ": expected header 'p <n>'");
      n = static_cast<int>(detail::parse_label(fields[1], line_no));
      have_header = true;
      continue;
    }
    if (fields.size() != 2)
      throw InputError("line " + std::to_string(line_no)
                       + ": expected an edge '<u> <v>'");
    long long u = detail::parse_label(fields[0], line_no);
    long long v = detail::parse_label(fields[1], line_no);
    if (u >= n || v >= n)
      throw InputError("line " + std::to_string(line_no) + ": vertex "
                       + std::to_string(u >= n ? u : v)
                       + " exceeds declared count " + std::to_string(n));
    if (u == v)
      throw InputError("line " + std::to_string(line_no) + ": self-loop at "
                       + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_header) throw InputError("missing header 'p <n>'");
  return build_graph(n, edges);
}

inline Graph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph_file(in);
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return parse_graph_file(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline std::string format_graph(const Graph& g) {
  std::string out = "p " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace indcount
