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

#include "harness.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cycsub/generate.hpp"
#include "cycsub/io.hpp"
#include "cycsub/serialize.hpp"
#include "cycsub/triples.hpp"
#include "cycsub/version.hpp"

namespace cycsub::harness {
namespace {

using clock = std::chrono::steady_clock;

double seconds_since(clock::time_point start) {
  return std::chrono::duration<double>(clock::now() - start).count();
}

nlohmann::json set_to_json(const VertexSet& s) {
  return nlohmann::json(s.members());
}

nlohmann::json sets_to_json(const std::vector<VertexSet>& sets) {
  nlohmann::json arr = nlohmann::json::array();
  for (const VertexSet& s : sets) arr.push_back(set_to_json(s));
  return arr;
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

}  // namespace

// ---------------------------------------------------------------------------
// diff

std::string DiffReport::verdict() const {
  if (agree()) return "agree";
  if (engine_extra.empty()) return "engine_missing";
  if (engine_missing.empty()) return "engine_extra";
  return "engine_missing+extra";
}

DiffReport run_diff(const Graph& g, std::string graph_id, JoinMode mode,
                    int oracle_cap) {
  DiffReport report;
  report.graph_id = std::move(graph_id);
  report.vertex_count = g.vertex_count();
  report.edge_count = g.edge_count();
  report.mode = mode;

  EngineResult engine = ::cycsub::cycsub(g, mode);
  report.engine_family = std::move(engine.cycles);
  report.trace = std::move(engine.trace);

  auto oracle_start = clock::now();
  report.oracle_family = oracle_cyclic_subsets(g, oracle_cap);
  report.oracle_seconds = seconds_since(oracle_start);

  const auto& em = report.engine_family.members();
  const auto& om = report.oracle_family.members();
  std::set_difference(om.begin(), om.end(), em.begin(), em.end(),
                      std::back_inserter(report.engine_missing), family_less);
  std::set_difference(em.begin(), em.end(), om.begin(), om.end(),
                      std::back_inserter(report.engine_extra), family_less);
  return report;
}

nlohmann::json diff_report_to_json(const DiffReport& report) {
  StateBoundReport bound =
      engine_stats(report.trace, report.trace.foundation_count);
  return nlohmann::json{
      {"schema_version", kSchemaVersion},
      {"tool_version", kVersion},
      {"command", "diff"},
      {"graph",
       {{"id", report.graph_id},
        {"vertices", report.vertex_count},
        {"edges", report.edge_count}}},
      {"mode", to_string(report.mode)},
      {"verdict", report.verdict()},
      {"engine",
       {{"members", report.engine_family.size()},
        {"iterations", report.trace.body_iterations()},
        {"peak_partials", report.trace.peak_partials()},
        {"wall_seconds", report.trace.total_seconds}}},
      {"oracle",
       {{"members", report.oracle_family.size()},
        {"wall_seconds", report.oracle_seconds}}},
      {"engine_missing", sets_to_json(report.engine_missing)},
      {"engine_extra", sets_to_json(report.engine_extra)},
      {"state_bound",
       {{"foundations", bound.foundation_count},
        {"peak_partials", bound.peak_partials},
        {"within", bound.within_bound}}}};
}

// ---------------------------------------------------------------------------
// enumerate

EnumerateArtifacts run_enumerate(const Graph& g, JoinMode mode,
                                 const fs::path& out_dir) {
  fs::create_directories(out_dir);
  EngineResult result = ::cycsub::cycsub(g, mode);

  EnumerateArtifacts artifacts;
  artifacts.result_path = out_dir / "result.txt";
  artifacts.trace_path = out_dir / "trace.json";
  artifacts.members = result.cycles.size();
  write_family_file(artifacts.result_path, result.cycles);
  write_trace_file(artifacts.trace_path, result.trace);
  return artifacts;
}

// ---------------------------------------------------------------------------
// exhaust

ExhaustSummary run_exhaust(int n, JoinMode mode, const fs::path& out_dir,
                           std::ostream* reports, std::ostream& log) {
  ExhaustSummary summary;
  summary.n = n;
  summary.mode = mode;
  fs::create_directories(out_dir);

  const std::uint64_t total = labeled_graph_count(n);
  enumerate_labeled_graphs(n, [&](const Graph& g, std::uint64_t mask) {
    ++summary.graphs;
    std::string id = "n" + std::to_string(n) + "-m" + std::to_string(mask);

    nlohmann::json line{{"graph", id}, {"mask", mask}};
    bool cap_hit = false;
    EngineResult engine;
    try {
      engine = ::cycsub::cycsub(g, mode);
    } catch (const IterationCapError&) {
      cap_hit = true;
    }

    if (cap_hit) {
      ++summary.cap_hits;
      line["verdict"] = "cap_hit";
    } else {
      StateBoundReport bound =
          engine_stats(engine.trace, engine.trace.foundation_count);
      if (!bound.within_bound) ++summary.state_bound_violations;

      CandidateFamily truth = oracle_cyclic_subsets(g);
      if (engine.cycles == truth) {
        ++summary.agree;
        line["verdict"] = "agree";
      } else {
        ++summary.mismatch;
        line["verdict"] = "mismatch";
        std::string name = "mismatch-" + id + ".txt";
        std::ofstream fixture(out_dir / name);
        write_edge_list(fixture, g);
        summary.fixtures.push_back(name);
        log << "mismatch: " << id << " (engine " << engine.cycles.size()
            << " members, oracle " << truth.size() << "), fixture " << name
            << '\n';
      }
      line["members"] = engine.cycles.size();
      line["peak_partials"] = engine.trace.peak_partials();
      line["state_bound_ok"] = bound.within_bound;
    }

    if (reports) *reports << line.dump() << '\n';
    if (total >= 8192 && (mask + 1) % 4096 == 0)
      log << "  ... " << (mask + 1) << "/" << total << " graphs\n";
  });
  return summary;
}

nlohmann::json exhaust_summary_to_json(const ExhaustSummary& summary) {
  return nlohmann::json{{"schema_version", kSchemaVersion},
                        {"tool_version", kVersion},
                        {"command", "exhaust"},
                        {"n", summary.n},
                        {"mode", to_string(summary.mode)},
                        {"graphs", summary.graphs},
                        {"agree", summary.agree},
                        {"mismatch", summary.mismatch},
                        {"cap_hits", summary.cap_hits},
                        {"state_bound_violations",
                         summary.state_bound_violations},
                        {"fixtures", summary.fixtures}};
}

// ---------------------------------------------------------------------------
// shrink

Graph delete_vertex(const Graph& g, int v) {
  g.check_vertex(v);
  std::vector<std::pair<int, int>> edges;
  for (const VertexPair& e : g.edges()) {
    if (e.contains(v)) continue;
    int a = e.first() > v ? e.first() - 1 : e.first();
    int b = e.second() > v ? e.second() - 1 : e.second();
    edges.emplace_back(a, b);
  }
  return Graph(g.vertex_count() - 1, edges);
}

Graph delete_edge(const Graph& g, const VertexPair& e) {
  std::vector<std::pair<int, int>> edges;
  for (const VertexPair& f : g.edges())
    if (f != e) edges.emplace_back(f.first(), f.second());
  return Graph(g.vertex_count(), edges);
}

ShrinkResult run_shrink(const Graph& g, JoinMode mode, int oracle_cap,
                        std::ostream& log) {
  if (run_diff(g, "input", mode, oracle_cap).agree())
    throw InputError("not a counterexample: engine and oracle agree on this graph");

  auto mismatches = [&](const Graph& h) {
    try {
      return !run_diff(h, "", mode, oracle_cap).agree();
    } catch (const EngineError&) {
      return false;  // a capped run cannot be compared, keep what we have
    }
  };

  ShrinkResult out;
  out.graph = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = out.graph.vertex_count() - 1; v >= 0; --v) {
      Graph cand = delete_vertex(out.graph, v);
      if (mismatches(cand)) {
        log << "shrink: dropped vertex " << v << " -> "
            << cand.vertex_count() << " vertices, " << cand.edge_count()
            << " edges\n";
        out.graph = std::move(cand);
        ++out.steps;
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (const VertexPair& e : out.graph.edges()) {
      Graph cand = delete_edge(out.graph, e);
      if (mismatches(cand)) {
        log << "shrink: dropped edge {" << e.first() << "," << e.second()
            << "} -> " << cand.edge_count() << " edges\n";
        out.graph = std::move(cand);
        ++out.steps;
        changed = true;
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// bench

BenchReport run_bench(const std::vector<int>& ns, double p, int seeds,
                      JoinMode mode, const EngineLimits& per_run_limits,
                      std::ostream& log) {
  BenchReport report;
  report.mode = mode;
  report.p = p;
  report.seeds = seeds;
  report.limits = per_run_limits;

  std::vector<int> sorted_ns = ns;
  std::sort(sorted_ns.begin(), sorted_ns.end());
  sorted_ns.erase(std::unique(sorted_ns.begin(), sorted_ns.end()),
                  sorted_ns.end());

  for (int n : sorted_ns) {
    for (int s = 1; s <= seeds; ++s) {
      BenchRecord rec;
      rec.n = n;
      rec.p = p;
      rec.seed = static_cast<std::uint64_t>(s);

      Graph g = gen_gnp(n, p, rec.seed);
      TripleClassification triples = classify_triples(g);
      rec.foundations = triples.foundations.size();
      rec.extensions = triples.extensions.size();
      rec.cliques = triples.cliques.size();

      try {
        EngineResult result = ::cycsub::cycsub(g, mode, per_run_limits);
        const EngineTrace& t = result.trace;
        rec.classify_seconds = t.classify_seconds;
        rec.loop_seconds = t.loop_seconds;
        rec.filter_seconds = t.filter_seconds;
        rec.total_seconds = t.total_seconds;
        rec.iterations = t.body_iterations();
        rec.peak_partials = t.peak_partials();
        rec.z_size = t.z_size;
        rec.result_size = t.result_size;
        rec.state_bound_ok = rec.peak_partials <= rec.foundations;
        log << "bench: n=" << n << " seed=" << s << " ok "
            << format_seconds(rec.total_seconds) << "s, result "
            << rec.result_size << ", peak partials " << rec.peak_partials
            << '\n';
      } catch (const ResourceLimitError& e) {
        rec.status = per_run_limits.max_states != 0 &&
                             e.states_seen() > per_run_limits.max_states
                         ? "aborted:states"
                         : "aborted:time";
        rec.total_seconds = e.seconds_elapsed();
        rec.iterations = e.iterations_done();
        rec.abort_states = e.states_seen();
        rec.state_bound_ok = false;
        log << "bench: n=" << n << " seed=" << s << " " << rec.status
            << " after " << format_seconds(rec.total_seconds) << "s, "
            << rec.abort_states << " live states, " << rec.iterations
            << " passes\n";
      }
      report.records.push_back(std::move(rec));
    }
  }
  report.fit = fit_log_log(report.records);
  return report;
}

SlopeFit fit_log_log(const std::vector<BenchRecord>& records) {
  std::vector<std::pair<double, double>> pts;
  for (const BenchRecord& r : records)
    if (r.status == "ok" && r.total_seconds > 0.0 && r.n > 1)
      pts.emplace_back(std::log(double(r.n)), std::log(r.total_seconds));

  SlopeFit fit;
  fit.points = static_cast<int>(pts.size());
  bool two_xs = false;
  for (const auto& [x, _] : pts)
    if (x != pts.front().first) two_xs = true;
  if (pts.size() < 2 || !two_xs) return fit;

  double sx = 0, sy = 0;
  for (const auto& [x, y] : pts) sx += x, sy += y;
  double mx = sx / fit.points, my = sy / fit.points;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : pts) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0;
  for (const auto& [x, y] : pts) {
    double e = y - (fit.intercept + fit.slope * x);
    ss_res += e * e;
  }
  fit.r_squared = syy > 0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

void write_bench_csv(std::ostream& os,
                     const std::vector<BenchRecord>& records) {
  os << "n,p,seed,status,total_s,classify_s,loop_s,filter_s,iterations,"
        "foundations,extensions,cliques,peak_partials,z_size,result_size,"
        "state_bound_ok,abort_states\n";
  for (const BenchRecord& r : records) {
    os << r.n << ',' << r.p << ',' << r.seed << ',' << r.status << ','
       << format_seconds(r.total_seconds) << ','
       << format_seconds(r.classify_seconds) << ','
       << format_seconds(r.loop_seconds) << ','
       << format_seconds(r.filter_seconds) << ',' << r.iterations << ','
       << r.foundations << ',' << r.extensions << ',' << r.cliques << ','
       << r.peak_partials << ',' << r.z_size << ',' << r.result_size << ','
       << (r.status == "ok" ? (r.state_bound_ok ? "1" : "0") : "na") << ','
       << r.abort_states << '\n';
  }
}

nlohmann::json bench_report_to_json(const BenchReport& report) {
  nlohmann::json records = nlohmann::json::array();
  bool all_ok = true;
  for (const BenchRecord& r : report.records) {
    all_ok = all_ok && r.status == "ok";
    records.push_back({{"n", r.n},
                       {"p", r.p},
                       {"seed", r.seed},
                       {"status", r.status},
                       {"timings_seconds",
                        {{"classify", r.classify_seconds},
                         {"loop", r.loop_seconds},
                         {"filter", r.filter_seconds},
                         {"total", r.total_seconds}}},
                       {"iterations", r.iterations},
                       {"foundations", r.foundations},
                       {"extensions", r.extensions},
                       {"cliques", r.cliques},
                       {"peak_partials", r.peak_partials},
                       {"z_size", r.z_size},
                       {"result_size", r.result_size},
                       {"state_bound_ok", r.state_bound_ok},
                       {"abort_states", r.abort_states}});
  }
  nlohmann::json fit;
  if (report.fit.points >= 2)
    fit = {{"points", report.fit.points},
           {"slope", report.fit.slope},
           {"intercept", report.fit.intercept},
           {"r_squared", report.fit.r_squared}};
  else
    fit = {{"points", report.fit.points}};
  return nlohmann::json{{"schema_version", kSchemaVersion},
                        {"tool_version", kVersion},
                        {"command", "bench"},
                        {"mode", to_string(report.mode)},
                        {"p", report.p},
                        {"seeds", report.seeds},
                        {"limits",
                         {{"max_states", report.limits.max_states},
                          {"budget_seconds", report.limits.budget_seconds}}},
                        {"records", std::move(records)},
                        {"fit", std::move(fit)},
                        {"all_completed", all_ok}};
}

// ---------------------------------------------------------------------------

int resolve_oracle_cap(int flag_cap) {
  if (flag_cap > 0) return flag_cap;
  if (const char* env = std::getenv("CYCSUB_ORACLE_CAP")) {
    std::string_view text(env);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                     value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0)
      throw InputError("CYCSUB_ORACLE_CAP: expected a positive integer, got \"" +
                       std::string(text) + "\"");
    return value;
  }
  return kOracleDefaultCap;
}

}  // namespace cycsub::harness
