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

#ifndef CYCSUB_ORACLE_HPP
#define CYCSUB_ORACLE_HPP

#include <map>

#include "cycsub/engine.hpp"
#include "cycsub/graph.hpp"

namespace cycsub {

/// Default vertex-count ceiling for the oracle; 2^20 subsets is the
/// intended desk scale. Overridable per call.
inline constexpr int kOracleDefaultCap = 20;

/// Ground truth by exhaustion: walks every subset of V(g) and keeps
/// those whose induced subgraph is a cycle (connected, every induced
/// degree exactly 2). No joining, pruning, or growing of partial
/// states is involved, so this is an independent check on cycsub.
///
/// Result is canonical: sorted by size, then lexicographically.
/// Refuses graphs with more than cap vertices (subset count doubles per
/// vertex).
CandidateFamily oracle_cyclic_subsets(const Graph& g,
                                      int cap = kOracleDefaultCap);

/// Histogram of member sizes over oracle_cyclic_subsets(g).
std::map<int, std::size_t> oracle_count_by_size(const Graph& g,
                                                int cap = kOracleDefaultCap);

}  // namespace cycsub

#endif  // CYCSUB_ORACLE_HPP
