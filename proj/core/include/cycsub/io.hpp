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

#ifndef CYCSUB_IO_HPP
#define CYCSUB_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "cycsub/graph.hpp"

namespace cycsub {

/// Malformed graph file. `line()` is the 1-based offending line number
/// (0 when the problem is not tied to a single line).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                   : what),
     line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

/// Parses the native edge-list format:
///   - '#' starts a comment line; blank lines are ignored
///   - first data line:  n <count>
///   - each later line:  u v       (0-based ids, 0 <= u,v < count, u != v)
/// Duplicate edges are deduplicated; self-loops are errors.
Graph parse_edge_list(std::string_view text);

/// Parses the DIMACS-like format:
///   - 'c ...' comment lines
///   - problem line:  p edge <n> <m>
///   - edge lines:    e <u> <v>     (1-based ids, normalized to 0-based)
Graph parse_dimacs(std::string_view text);

/// Parses either format, keyed on the first data line ("n ..." vs "p ...").
Graph parse_graph(std::string_view text);

/// Reads and parses a graph file (either format).
Graph load_graph_file(const std::string& path);

/// Writes g in the native edge-list format.
void write_edge_list(std::ostream& os, const Graph& g);

}  // namespace cycsub

#endif  // CYCSUB_IO_HPP
