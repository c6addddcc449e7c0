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

#ifndef CYCSUB_GENERATE_HPP
#define CYCSUB_GENERATE_HPP

#include <cstdint>
#include <functional>

#include "cycsub/graph.hpp"

namespace cycsub {

/// Largest n accepted by enumerate_labeled_graphs unless a higher cap is
/// passed explicitly. 2^15 graphs at n = 6 is the intended desk scale.
inline constexpr int kLabeledGraphCap = 6;

/// Erdos-Renyi G(n,p) sample, deterministic for a fixed (n, p, seed):
/// pairs (u,v), u < v, are visited in lexicographic order and each becomes
/// an edge iff the next mt19937_64 draw, mapped to [0,1), is < p.
/// This mapping is pinned (no distribution adapters), so samples are
/// bit-identical across platforms.
Graph gen_gnp(int n, double p, std::uint64_t seed);

/// Number of labeled simple graphs on n vertices: 2^(n(n-1)/2).
std::uint64_t labeled_graph_count(int n);

/// Yields all labeled simple graphs on n vertices exactly once, in
/// ascending edge-mask order: bit i of the mask corresponds to the i-th
/// pair (u,v), u < v, in lexicographic order, and masks run 0, 1, 2, ...
/// The callback receives each graph and its mask (the graph's index).
/// Refuses n above the cap.
void enumerate_labeled_graphs(
    int n, const std::function<void(const Graph&, std::uint64_t)>& visit,
    int cap = kLabeledGraphCap);

/// The graph with the given edge mask in the enumeration order above.
Graph labeled_graph(int n, std::uint64_t edge_mask);

}  // namespace cycsub

#endif  // CYCSUB_GENERATE_HPP
