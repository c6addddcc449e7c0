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

#ifndef CYCSUB_TRIPLES_HPP
#define CYCSUB_TRIPLES_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "cycsub/graph.hpp"

namespace cycsub {

/// A 3-subset inducing exactly two edges. The one missing edge is the
/// open pair; closing it would complete a triangle, extending across it
/// grows a longer candidate cycle.
struct Foundation {
  VertexSet vertices;
  VertexPair open{0, 1};

  friend bool operator==(const Foundation&, const Foundation&) = default;
};

/// A 3-subset inducing exactly one edge. Its two non-edges share the
/// vertex opposite the induced edge.
struct Extension {
  VertexSet vertices;
  VertexPair non_edges[2] = {{0, 1}, {0, 1}};  // lexicographic order

  friend bool operator==(const Extension& a, const Extension& b) {
    return a.vertices == b.vertices && a.non_edges[0] == b.non_edges[0] &&
           a.non_edges[1] == b.non_edges[1];
  }
};

/// A 3-subset inducing all three edges.
struct Clique3 {
  VertexSet vertices;

  friend bool operator==(const Clique3&, const Clique3&) = default;
};

/// Every 3-subset of V(G) with at least one induced edge, split by
/// induced edge count. Triples with no induced edge are dropped: they
/// can take part in no cycle that their own vertices witness.
struct TripleClassification {
  std::vector<Extension> extensions;   // exactly 1 induced edge
  std::vector<Foundation> foundations; // exactly 2 induced edges
  std::vector<Clique3> cliques;        // all 3 edges present

  std::size_t total() const {
    return extensions.size() + foundations.size() + cliques.size();
  }
};

/// Classifies all C(n,3) vertex triples of g. Each output vector is in
/// lexicographic order of the triple (x < y < z scanned in that order),
/// so results are deterministic and directly comparable.
TripleClassification classify_triples(const Graph& g);

}  // namespace cycsub

#endif  // CYCSUB_TRIPLES_HPP
