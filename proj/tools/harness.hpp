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

#ifndef CYCSUB_TOOLS_HARNESS_HPP
#define CYCSUB_TOOLS_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "cycsub/engine.hpp"
#include "cycsub/graph.hpp"
#include "cycsub/oracle.hpp"

// Command implementations behind the cycsub CLI. Everything here is
// deterministic given its arguments; wall-clock fields are the only
// values that vary between identical runs.
namespace cycsub::harness {

namespace fs = std::filesystem;

// ---------------------------------------------------------------------------
// diff

/// Engine and oracle run on the same graph, compared memberwise.
struct DiffReport {
  std::string graph_id;
  int vertex_count = 0;
  int edge_count = 0;
  JoinMode mode = JoinMode::strict;

  CandidateFamily engine_family;
  CandidateFamily oracle_family;
  std::vector<VertexSet> engine_missing;  // oracle has, engine lacks
  std::vector<VertexSet> engine_extra;    // engine has, oracle lacks

  EngineTrace trace;
  double oracle_seconds = 0.0;

  bool agree() const {
    return engine_missing.empty() && engine_extra.empty();
  }
  /// "agree", "engine_missing", "engine_extra", or
  /// "engine_missing+extra" when both directions differ.
  std::string verdict() const;
};

/// Runs engine then oracle. Both runs are pure, so the report does not
/// depend on which side runs first. Engine errors (iteration cap,
/// resource limits) and oracle refusals propagate as exceptions.
DiffReport run_diff(const Graph& g, std::string graph_id, JoinMode mode,
                    int oracle_cap = kOracleDefaultCap);

nlohmann::json diff_report_to_json(const DiffReport& report);

// ---------------------------------------------------------------------------
// enumerate

struct EnumerateArtifacts {
  fs::path result_path;  // family, one member per line
  fs::path trace_path;   // run trace as JSON
  std::size_t members = 0;
};

/// Runs the engine and writes result.txt and trace.json into out_dir
/// (created if missing). The result file depends only on (g, mode), so
/// repeated runs produce byte-identical files.
EnumerateArtifacts run_enumerate(const Graph& g, JoinMode mode,
                                 const fs::path& out_dir);

// ---------------------------------------------------------------------------
// exhaust

/// Aggregate over one exhaustive sweep of all labeled graphs on n
/// vertices. graphs == agree + mismatch + cap_hits.
struct ExhaustSummary {
  int n = 0;
  JoinMode mode = JoinMode::strict;
  std::uint64_t graphs = 0;
  std::uint64_t agree = 0;
  std::uint64_t mismatch = 0;
  /// Literal-guard runs stopped by the n-pass iteration cap; such
  /// graphs produce no engine family to compare.
  std::uint64_t cap_hits = 0;
  /// Completed runs whose peak partial-cycle count exceeded the
  /// foundation count.
  std::uint64_t state_bound_violations = 0;
  /// Mismatch fixture files written into the output directory, in
  /// ascending edge-mask order.
  std::vector<std::string> fixtures;
};

/// Diffs every labeled graph on n vertices (n <= 6). Mismatching graphs
/// are persisted as edge-list fixtures under out_dir and the sweep
/// continues. When `reports` is non-null, one compact JSON line per
/// graph is streamed to it. `log` receives mismatch notices and
/// periodic progress. Reruns with equal arguments produce byte-identical
/// summaries and report streams (no timings are recorded).
ExhaustSummary run_exhaust(int n, JoinMode mode, const fs::path& out_dir,
                           std::ostream* reports, std::ostream& log);

nlohmann::json exhaust_summary_to_json(const ExhaustSummary& summary);

// ---------------------------------------------------------------------------
// shrink

struct ShrinkResult {
  Graph graph;     // locally minimal mismatching graph
  int steps = 0;   // accepted deletions
};

/// Returns a copy of g with vertex v removed and higher ids shifted
/// down by one.
Graph delete_vertex(const Graph& g, int v);

/// Returns a copy of g without the edge e.
Graph delete_edge(const Graph& g, const VertexPair& e);

/// Greedily deletes vertices, then edges, keeping any deletion after
/// which engine and oracle still disagree. Stops when no single
/// deletion preserves the mismatch, so the output is locally minimal.
/// Throws InputError("not a counterexample...") when g itself agrees.
/// Candidate graphs whose engine run fails (iteration cap) are treated
/// as not mismatching.
ShrinkResult run_shrink(const Graph& g, JoinMode mode, int oracle_cap,
                        std::ostream& log);

// ---------------------------------------------------------------------------
// bench

/// One engine measurement. status "ok" rows carry a full trace;
/// "aborted:states" / "aborted:time" rows carry the progress counters
/// the engine reported when the limit hit, with classification totals
/// recomputed separately (classification always finishes first at these
/// sizes).
struct BenchRecord {
  int n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string status = "ok";

  double classify_seconds = 0.0;
  double loop_seconds = 0.0;
  double filter_seconds = 0.0;
  double total_seconds = 0.0;

  std::size_t foundations = 0;
  std::size_t extensions = 0;
  std::size_t cliques = 0;

  int iterations = 0;             // loop passes run (completed or not)
  std::size_t peak_partials = 0;  // 0 when aborted
  std::size_t z_size = 0;         // candidates before minimality filter
  std::size_t result_size = 0;    // after it

  /// peak_partials <= foundations; meaningful only for "ok" rows.
  bool state_bound_ok = true;
  /// Live states (partials + stored candidates) when a limit stopped
  /// the run; 0 for "ok" rows.
  std::size_t abort_states = 0;
};

/// Least-squares fit of log(total_seconds) against log(n) over the
/// completed records.
struct SlopeFit {
  int points = 0;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

struct BenchReport {
  JoinMode mode = JoinMode::strict;
  double p = 0.0;
  int seeds = 0;
  EngineLimits limits;
  std::vector<BenchRecord> records;  // n ascending, then seed ascending
  SlopeFit fit;
};

/// Runs the engine (no oracle) on gen_gnp(n, p, seed) for every n in
/// `ns` and seed in 1..seeds, under the given per-run limits. Aborted
/// runs become "aborted:*" records; the sweep continues. All counters
/// are deterministic; only the *_seconds fields vary between runs.
BenchReport run_bench(const std::vector<int>& ns, double p, int seeds,
                      JoinMode mode, const EngineLimits& per_run_limits,
                      std::ostream& log);

SlopeFit fit_log_log(const std::vector<BenchRecord>& records);

/// Header plus one row per record; column list in docs/formats.md.
void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& records);

nlohmann::json bench_report_to_json(const BenchReport& report);

// ---------------------------------------------------------------------------

/// Oracle cap from CLI flag, environment, or default, in that order:
/// flag_cap when positive, else integer CYCSUB_ORACLE_CAP when set
/// (malformed values throw InputError), else kOracleDefaultCap.
int resolve_oracle_cap(int flag_cap);

}  // namespace cycsub::harness

#endif  // CYCSUB_TOOLS_HARNESS_HPP
