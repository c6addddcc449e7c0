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

#ifndef CYCSUB_ENGINE_HPP
#define CYCSUB_ENGINE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cycsub/graph.hpp"
#include "cycsub/triples.hpp"

namespace cycsub {

/// Guard applied when a partial cycle is joined with a foundation or an
/// extension over a shared open pair.
///
///   strict:  skip the join when the joined triple's vertices are a
///            subset of the partial's vertices. Every surviving join adds
///            a new vertex, so the loop finishes in at most n-2 passes.
///   literal: skip only when the triple's vertices equal the partial's
///            vertices exactly. Joins that re-enter the partial are
///            allowed; open pairs can then rotate around a vertex set
///            forever, which is why the engine enforces a hard cap of n
///            loop passes and reports hitting it as an error.
enum class JoinMode { strict, literal };

const char* to_string(JoinMode mode);

/// A candidate cycle under construction: an induced path's vertex set
/// plus the one tracked non-adjacent endpoint pair still to be closed.
struct PartialCycle {
  VertexSet vertices;       // size >= 3
  VertexPair open{0, 1};    // both endpoints in vertices; never an edge

  friend bool operator==(const PartialCycle&, const PartialCycle&) = default;
};

/// Orders vertex sets by size, then lexicographically by members.
/// All externally visible families use this order.
bool family_less(const VertexSet& a, const VertexSet& b);

/// A duplicate-free family of vertex sets, kept in family_less order.
class CandidateFamily {
 public:
  CandidateFamily() = default;
  static CandidateFamily of(std::vector<VertexSet> members);

  /// Inserts s unless an equal set is already present. Returns true if
  /// the family grew.
  bool insert(VertexSet s);
  bool contains(const VertexSet& s) const;

  const std::vector<VertexSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  friend bool operator==(const CandidateFamily&, const CandidateFamily&) =
      default;

 private:
  std::vector<VertexSet> members_;  // sorted by family_less, unique
};

/// One pass of the join loop as observed from outside.
struct IterationRecord {
  int index = 0;               // pass number, counted from 0
  std::size_t partials_in = 0; // partial cycles entering the pass
  std::size_t z_added = 0;     // distinct new candidates emitted this pass
  double wall_seconds = 0.0;
};

struct EngineTrace {
  JoinMode mode = JoinMode::strict;
  std::vector<IterationRecord> iterations;

  // Triple classification totals for the run's input graph.
  std::size_t foundation_count = 0;
  std::size_t extension_count = 0;
  std::size_t clique_count = 0;

  std::size_t z_size = 0;       // candidates before the minimality filter
  std::size_t result_size = 0;  // candidates after it

  /// Passes whose joins produced at least one partial for the next pass.
  /// The final pass of a terminating run consumes its partials and emits
  /// none, so this is one less than iterations.size() when the loop ran.
  int productive_iterations = 0;

  double classify_seconds = 0.0;
  double loop_seconds = 0.0;
  double filter_seconds = 0.0;
  double total_seconds = 0.0;

  int body_iterations() const { return static_cast<int>(iterations.size()); }
  std::size_t peak_partials() const;
};

/// Caps for long runs. Zero means unlimited.
struct EngineLimits {
  std::size_t max_states = 0;   // live partials + stored candidates
  double budget_seconds = 0.0;  // wall clock for the whole run
};

class EngineError : public std::runtime_error {
 public:
  explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

/// The join loop ran n passes without draining its partials. Only the
/// literal guard can get here; the strict guard's passes each grow every
/// partial, so they run out of vertices first.
class IterationCapError : public EngineError {
 public:
  IterationCapError(JoinMode mode, int iterations);
  JoinMode mode() const { return mode_; }
  int iterations() const { return iterations_; }

 private:
  JoinMode mode_;
  int iterations_;
};

/// A run exceeded EngineLimits. Carries progress counters so callers can
/// report how far the run got.
class ResourceLimitError : public EngineError {
 public:
  ResourceLimitError(const std::string& what, std::size_t states_seen,
                     double seconds_elapsed, int iterations_done);
  std::size_t states_seen() const { return states_seen_; }
  double seconds_elapsed() const { return seconds_elapsed_; }
  int iterations_done() const { return iterations_done_; }

 private:
  std::size_t states_seen_;
  double seconds_elapsed_;
  int iterations_done_;
};

// ---------------------------------------------------------------------------
// The join loop, one step at a time. These operate on the classified-triple
// representation directly and are deliberately simple; cycsub() below runs
// the same steps on a packed bitset representation. Tests hold the two
// equal.

/// Drops every partial whose vertex set contains a 3-clique. Survivor
/// order is preserved.
std::vector<PartialCycle> prune_with_cliques(
    const std::vector<PartialCycle>& partials,
    const std::vector<Clique3>& cliques);

/// For each (partial, foundation) sharing the same open pair and passing
/// the mode's guard, inserts the union of their vertex sets into z.
void close_with_foundations(const std::vector<PartialCycle>& partials,
                            const std::vector<Foundation>& foundations,
                            JoinMode mode, CandidateFamily& z);

/// For each (partial, extension) where the partial's open pair is one of
/// the extension's two non-edges and the mode's guard passes, emits a new
/// partial: the union of the vertex sets, open on the extension's other
/// non-edge. Output is deduplicated on (vertices, open pair) and sorted.
std::vector<PartialCycle> extend_with_extensions(
    const std::vector<PartialCycle>& partials,
    const std::vector<Extension>& extensions, JoinMode mode);

/// Inserts every clique's vertex set into z.
void include_cliques(const std::vector<Clique3>& cliques, CandidateFamily& z);

/// Keeps exactly the members of z with no proper subset also in z.
CandidateFamily minimal_filter(const CandidateFamily& z);

// ---------------------------------------------------------------------------

struct EngineResult {
  CandidateFamily cycles;
  EngineTrace trace;
};

/// Enumerates the vertex sets of g whose induced subgraphs are cycles.
///
/// Classifies all vertex triples, seeds the partial-cycle family with the
/// foundations, then repeatedly prunes partials containing cliques,
/// closes open pairs against foundations (emitting candidates), and
/// extends open pairs across extensions, until no partials remain. The
/// cliques join the candidates, and the minimality filter removes every
/// candidate that properly contains another. At most n loop passes are
/// allowed; exceeding that throws IterationCapError.
///
/// Throws InputError for graphs with more than 256 vertices,
/// ResourceLimitError when limits are set and exceeded.
EngineResult cycsub(const Graph& g, JoinMode mode = JoinMode::strict,
                    const EngineLimits& limits = {});

/// Largest vertex count cycsub accepts.
inline constexpr int kEngineMaxVertices = 256;

/// How the partial-cycle population compared against the foundation
/// count over a run.
struct StateBoundReport {
  std::size_t foundation_count = 0;
  std::size_t peak_partials = 0;
  int peak_iteration = -1;   // pass attaining the peak; -1 if no passes
  bool within_bound = true;  // peak_partials <= foundation_count
};

/// Summarizes trace against the claim that no pass ever holds more
/// partials than there are foundations. Violations are reported, never
/// thrown.
StateBoundReport engine_stats(const EngineTrace& trace,
                              std::size_t foundation_count);

}  // namespace cycsub

#endif  // CYCSUB_ENGINE_HPP
