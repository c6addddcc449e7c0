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

#ifndef CYCSUB_GRAPH_HPP
#define CYCSUB_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cycsub {

/// Bad argument to a library call (vertex out of range, probability out of
/// [0,1], cap exceeded, ...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An unordered vertex pair, stored with first() < second().
struct VertexPair {
  int lo = 0;
  int hi = 0;

  VertexPair() = default;
  VertexPair(int a, int b) : lo(a < b ? a : b), hi(a < b ? b : a) {
    if (a == b) throw InputError("VertexPair: endpoints must differ");
  }

  int first() const { return lo; }
  int second() const { return hi; }
  bool contains(int v) const { return v == lo || v == hi; }
  /// The endpoint that is not v; v must be one of the two.
  int other(int v) const {
    if (v == lo) return hi;
    if (v == hi) return lo;
    throw InputError("VertexPair::other: vertex not in pair");
  }

  friend bool operator==(const VertexPair&, const VertexPair&) = default;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Canonical vertex set: strictly increasing, duplicate-free ids.
/// Two VertexSets are equal iff memberwise equal; operator< is
/// lexicographic on the member sequences.
class VertexSet {
 public:
  VertexSet() = default;
  /// Canonicalizes (sorts, deduplicates) the given ids.
  explicit VertexSet(std::vector<int> ids);
  static VertexSet of(std::initializer_list<int> ids) {
    return VertexSet(std::vector<int>(ids));
  }

  const std::vector<int>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;
  bool contains_pair(const VertexPair& p) const {
    return contains(p.first()) && contains(p.second());
  }
  /// True iff *this is a subset of `other` (not necessarily proper).
  bool subset_of(const VertexSet& other) const;

  VertexSet united_with(const VertexSet& other) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    return a.members_ < b.members_;
  }

 private:
  std::vector<int> members_;
};

/// Finite simple undirected graph over vertex ids 0..n-1 with an O(1)
/// bit-matrix adjacency. Immutable once built; safe to share across threads.
class Graph {
 public:
  Graph() = default;
  /// Duplicate edges are dropped; self-loops and out-of-range ids throw.
  Graph(int n, std::span<const std::pair<int, int>> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (row_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >>
        (v & 63)) & 1u;
  }

  int degree(int v) const;

  /// Edges in sorted (lo,hi) lexicographic order.
  std::vector<VertexPair> edges() const;

  /// Adjacency row of v as 64-bit words, bit i <-> vertex i.
  std::span<const std::uint64_t> neighbor_words(int v) const {
    check_vertex(v);
    return {row_.data() + static_cast<std::size_t>(v) * words_,
        static_cast<std::size_t>(words_)};
  }
  int words_per_row() const { return words_; }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw InputError("vertex id " + std::to_string(v) +
              " out of range [0," + std::to_string(n_) + ")");
  }

 private:
  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> row_;  // n_ rows of words_ words
};

/// E(S') for the subgraph S' induced by s: every edge of g with both
/// endpoints in s. Sorted lexicographically.
std::vector<VertexPair> induced_edges(const Graph& g, const VertexSet& s);

/// Non-edges of the induced subgraph, i.e. the edge set of its complement:
/// all pairs within s that are not edges of g. Sorted lexicographically.
std::vector<VertexPair> complement_pairs(const Graph& g, const VertexSet& s);

/// True iff the subgraph induced by s is a cycle: |s| >= 3, connected, and
/// every vertex of s has induced degree exactly 2.
bool induced_is_cycle(const Graph& g, const VertexSet& s);

}  // namespace cycsub

#endif  // CYCSUB_GRAPH_HPP
