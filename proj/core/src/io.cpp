// Copyright 2026 The cycsub Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cycsub/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

namespace cycsub {
namespace {

struct Line {
  int number;  // 1-based
  std::string text;
};

// Lines with comments ('#' or, for DIMACS, 'c') and blanks removed.
std::vector<Line> data_lines(std::string_view text, char comment_char) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(
      pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    std::size_t start = raw.find_first_not_of(" \t\r");
    if (start == std::string_view::npos) continue;
    if (raw[start] == '#') continue;
    if (comment_char != '\0' && raw[start] == comment_char) continue;
    out.push_back({number, std::string(raw)});
  }
  return out;
}

bool parse_int(std::istringstream& ss, long long& out) {
  return static_cast<bool>(ss >> out);
}

int checked_vertex(long long v, long long n, int line) {
  if (v < 0 || v >= n)
    throw ParseError(line, "vertex id " + std::to_string(v) +
                 " out of range [0," + std::to_string(n) + ")");
  return static_cast<int>(v);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  auto lines = data_lines(text, '\0');
  if (lines.empty()) throw ParseError(0, "empty input: expected 'n <count>' header");

  std::istringstream head(lines[0].text);
  std::string tag;
  long long n = -1;
  head >> tag;
  if (tag != "n" || !parse_int(head, n) || n < 0)
    throw ParseError(lines[0].number, "expected header 'n <count>'");

  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ss(lines[i].text);
    long long u, v;
    std::string trail;
    if (!parse_int(ss, u) || !parse_int(ss, v) || (ss >> trail))
      throw ParseError(lines[i].number, "expected edge line 'u v'");
    int a = checked_vertex(u, n, lines[i].number);
    int b = checked_vertex(v, n, lines[i].number);
    if (a == b)
      throw ParseError(lines[i].number,
              "self-loop at vertex " + std::to_string(a) +
                " not allowed in a simple graph");
    edges.emplace_back(a, b);
  }
  return Graph(static_cast<int>(n), edges);
}

Graph parse_dimacs(std::string_view text) {
  auto lines = data_lines(text, 'c');
  if (lines.empty()) throw ParseError(0, "empty input: expected 'p edge <n> <m>'");

  std::istringstream head(lines[0].text);
  std::string tag, kind;
  long long n = -1, m = -1;
  head >> tag >> kind;
  if (tag != "p" || (kind != "edge" && kind != "col") || !parse_int(head, n) ||
    !parse_int(head, m) || n < 0 || m < 0)
    throw ParseError(lines[0].number, "expected problem line 'p edge <n> <m>'");

  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::istringstream ss(lines[i].text);
    std::string e;
    long long u, v;
    ss >> e;
    if (e != "e" || !parse_int(ss, u) || !parse_int(ss, v))
      throw ParseError(lines[i].number, "expected edge line 'e <u> <v>'");
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(lines[i].number,
              "vertex id out of range [1," + std::to_string(n) + "]");
    if (u == v)
      throw ParseError(lines[i].number,
              "self-loop at vertex " + std::to_string(u) +
                " not allowed in a simple graph");
    edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  return Graph(static_cast<int>(n), edges);
}

Graph parse_graph(std::string_view text) {
  for (const auto& line : data_lines(text, '\0')) {
    std::istringstream ss(line.text);
    std::string tag;
    ss >> tag;
    if (tag == "p" || tag == "c") return parse_dimacs(text);
    break;
  }
  return parse_edge_list(text);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void write_edge_list(std::ostream& os, const Graph& g) {
  os << "n " << g.vertex_count() << "\n";
  for (const auto& e : g.edges()) os << e.first() << " " << e.second() << "\n";
}

}  // namespace cycsub
