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

#include "cycsub/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace cycsub {

namespace {

// Induced-cycle test on a subset mask: at least 3 vertices, every
// member with exactly 2 neighbors inside the mask, and the members
// connected through edges inside the mask.
bool mask_is_cycle(const std::vector<std::uint64_t>& adj, std::uint64_t sub) {
  int size = std::popcount(sub);
  if (size < 3) return false;
  std::uint64_t rest = sub;
  while (rest) {
    int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (std::popcount(adj[std::size_t(v)] & sub) != 2) return false;
  }
  // Flood fill from the lowest member; all members must be reached.
  std::uint64_t seen = std::uint64_t{1} << std::countr_zero(sub);
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t grown = seen;
    std::uint64_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      grown |= adj[std::size_t(v)] & sub;
    }
    frontier = grown & ~seen;
    seen = grown;
  }
  return seen == sub;
}

void check_cap(const Graph& g, int cap) {
  if (g.vertex_count() > cap)
    throw InputError("oracle: graph has " + std::to_string(g.vertex_count()) +
                     " vertices, cap is " + std::to_string(cap) +
                     " (subset scan doubles per vertex)");
  // Single-word subset masks; no realistic cap reaches this anyway.
  if (g.vertex_count() >= 64)
    throw InputError("oracle: subset scan supports at most 63 vertices");
}

}  // namespace

CandidateFamily oracle_cyclic_subsets(const Graph& g, int cap) {
  check_cap(g, cap);
  const int n = g.vertex_count();

  std::vector<std::uint64_t> adj(std::size_t(n), 0);
  for (int v = 0; v < n; ++v) adj[std::size_t(v)] = g.neighbor_words(v)[0];

  std::vector<VertexSet> hits;
  const std::uint64_t total =
      n >= 64 ? 0 : (std::uint64_t{1} << n);  // cap keeps n far below 64
  for (std::uint64_t sub = 0; sub < total; ++sub) {
    if (!mask_is_cycle(adj, sub)) continue;
    std::vector<int> vs;
    std::uint64_t rest = sub;
    while (rest) {
      vs.push_back(std::countr_zero(rest));
      rest &= rest - 1;
    }
    hits.push_back(VertexSet(std::move(vs)));
  }
  return CandidateFamily::of(std::move(hits));
}

std::map<int, std::size_t> oracle_count_by_size(const Graph& g, int cap) {
  std::map<int, std::size_t> hist;
  CandidateFamily fam = oracle_cyclic_subsets(g, cap);
  for (const VertexSet& s : fam.members()) ++hist[int(s.size())];
  return hist;
}

}  // namespace cycsub
