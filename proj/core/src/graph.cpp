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

#include "cycsub/graph.hpp"

#include <algorithm>
#include <bit>

namespace cycsub {

VertexSet::VertexSet(std::vector<int> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
         members_.end());
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
            members_.begin(), members_.end());
}

VertexSet VertexSet::united_with(const VertexSet& other) const {
  std::vector<int> out;
  out.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
         other.members_.end(), std::back_inserter(out));
  VertexSet r;
  r.members_ = std::move(out);  // already sorted and unique
  return r;
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  n_ = n;
  words_ = n == 0 ? 1 : (n + 63) / 64;
  row_.assign(static_cast<std::size_t>(n_) * words_, 0);
  for (const auto& [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v)
      throw InputError("self-loop at vertex " + std::to_string(u) +
              " not allowed in a simple graph");
    if (!adjacent(u, v)) {
      row_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |=
        std::uint64_t{1} << (v & 63);
      row_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |=
        std::uint64_t{1} << (u & 63);
      ++m_;
    }
  }
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (std::uint64_t word : neighbor_words(v)) d += std::popcount(word);
  return d;
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

std::vector<VertexPair> induced_edges(const Graph& g, const VertexSet& s) {
  std::vector<VertexPair> out;
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (g.adjacent(m[i], m[j])) out.emplace_back(m[i], m[j]);
  return out;
}

std::vector<VertexPair> complement_pairs(const Graph& g, const VertexSet& s) {
  std::vector<VertexPair> out;
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!g.adjacent(m[i], m[j])) out.emplace_back(m[i], m[j]);
  return out;
}

bool induced_is_cycle(const Graph& g, const VertexSet& s) {
  const auto& m = s.members();
  if (m.size() < 3) return false;
  for (int v : m) g.check_vertex(v);

  // Every vertex must have induced degree exactly 2.
  for (int v : m) {
    int d = 0;
    for (int u : m)
      if (u != v && g.adjacent(u, v)) ++d;
    if (d != 2) return false;
  }

  // Connectivity over the induced subgraph.
  std::vector<int> stack{m[0]};
  std::vector<char> seen(m.size(), 0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!seen[i] && g.adjacent(v, m[i])) {
        seen[i] = 1;
        ++reached;
        stack.push_back(m[i]);
      }
    }
  }
  return reached == m.size();
}

}  // namespace cycsub
