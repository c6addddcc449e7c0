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

#include "cycsub/generate.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace cycsub {

Graph gen_gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw InputError("gen_gnp: negative vertex count");
  if (!(p >= 0.0 && p <= 1.0))
    throw InputError("gen_gnp: p must lie in [0, 1], got " + std::to_string(p));
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      // Top 53 bits -> [0,1). Fixed mapping keeps samples portable.
      double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

std::uint64_t labeled_graph_count(int n) {
  if (n < 0) throw InputError("labeled_graph_count: negative vertex count");
  int pairs = n * (n - 1) / 2;
  if (pairs >= 64)
    throw InputError("labeled_graph_count: 2^" + std::to_string(pairs) +
                     " overflows");
  return std::uint64_t{1} << pairs;
}

Graph labeled_graph(int n, std::uint64_t edge_mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bit) {
      if (edge_mask >> bit & 1) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

void enumerate_labeled_graphs(
    int n, const std::function<void(const Graph&, std::uint64_t)>& visit,
    int cap) {
  if (n < 0) throw InputError("enumerate_labeled_graphs: negative vertex count");
  if (n > cap)
    throw InputError("enumerate_labeled_graphs: n = " + std::to_string(n) +
                     " exceeds cap " + std::to_string(cap));
  std::uint64_t total = labeled_graph_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    visit(labeled_graph(n, mask), mask);
}

}  // namespace cycsub
