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

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cycsub/engine.hpp"
#include "cycsub/io.hpp"
#include "cycsub/serialize.hpp"
#include "cycsub/version.hpp"
#include "harness.hpp"

namespace {

namespace cs = cycsub;
namespace ch = cycsub::harness;
namespace fs = std::filesystem;

// Exit codes: 0 success/agreement, 2 mismatch found, 1 anything else.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitMismatch = 2;

cs::JoinMode parse_mode(const std::string& mode) {
  return mode == "literal" ? cs::JoinMode::literal : cs::JoinMode::strict;
}

void write_json_file(const fs::path& path, const nlohmann::json& doc) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  os << doc.dump(2) << '\n';
}

struct CommonOpts {
  std::string input;
  std::string out_dir = ".";
  std::string mode = "strict";
  int cap = 0;  // 0: fall back to CYCSUB_ORACLE_CAP, then the default
};

int cmd_enumerate(const CommonOpts& opt) {
  cs::Graph g = cs::load_graph_file(opt.input);
  ch::EnumerateArtifacts artifacts =
      ch::run_enumerate(g, parse_mode(opt.mode), opt.out_dir);
  std::cout << "result: " << artifacts.members << " members\n"
            << "wrote " << artifacts.result_path.string() << '\n'
            << "wrote " << artifacts.trace_path.string() << '\n';
  return kExitOk;
}

int cmd_diff(const CommonOpts& opt) {
  cs::Graph g = cs::load_graph_file(opt.input);
  ch::DiffReport report = ch::run_diff(g, opt.input, parse_mode(opt.mode),
                                       ch::resolve_oracle_cap(opt.cap));
  fs::create_directories(opt.out_dir);
  fs::path report_path = fs::path(opt.out_dir) / "diff.json";
  write_json_file(report_path, ch::diff_report_to_json(report));

  std::cout << "verdict: " << report.verdict() << " (engine "
            << report.engine_family.size() << ", oracle "
            << report.oracle_family.size() << " members)\n"
            << "wrote " << report_path.string() << '\n';
  return report.agree() ? kExitOk : kExitMismatch;
}

int cmd_exhaust(const CommonOpts& opt, int n, const std::string& reports_path) {
  std::ofstream reports;
  if (!reports_path.empty()) {
    reports.open(reports_path);
    if (!reports)
      throw std::runtime_error("cannot open for writing: " + reports_path);
  }
  ch::ExhaustSummary summary =
      ch::run_exhaust(n, parse_mode(opt.mode), opt.out_dir,
                      reports.is_open() ? &reports : nullptr, std::cout);

  fs::path summary_path = fs::path(opt.out_dir) / "summary.json";
  write_json_file(summary_path, ch::exhaust_summary_to_json(summary));

  std::cout << "graphs: " << summary.graphs << ", agree: " << summary.agree
            << ", mismatch: " << summary.mismatch
            << ", cap hits: " << summary.cap_hits
            << ", state bound violations: "
            << summary.state_bound_violations << '\n'
            << "wrote " << summary_path.string() << '\n';
  return summary.mismatch == 0 ? kExitOk : kExitMismatch;
}

int cmd_shrink(const CommonOpts& opt) {
  cs::Graph g = cs::load_graph_file(opt.input);
  ch::ShrinkResult shrunk = ch::run_shrink(
      g, parse_mode(opt.mode), ch::resolve_oracle_cap(opt.cap), std::cout);

  fs::create_directories(opt.out_dir);
  fs::path out_path = fs::path(opt.out_dir) / "shrunk.txt";
  std::ofstream os(out_path);
  if (!os)
    throw std::runtime_error("cannot open for writing: " + out_path.string());
  cs::write_edge_list(os, shrunk.graph);

  std::cout << "shrunk to " << shrunk.graph.vertex_count() << " vertices, "
            << shrunk.graph.edge_count() << " edges in " << shrunk.steps
            << " deletions\n"
            << "wrote " << out_path.string() << '\n';
  return kExitOk;
}

int cmd_bench(const CommonOpts& opt, const std::vector<int>& ns, double p,
              int seeds, std::size_t max_states, double budget_seconds) {
  cs::EngineLimits limits{max_states, budget_seconds};
  ch::BenchReport report =
      ch::run_bench(ns, p, seeds, parse_mode(opt.mode), limits, std::cout);

  fs::create_directories(opt.out_dir);
  fs::path csv_path = fs::path(opt.out_dir) / "bench.csv";
  std::ofstream csv(csv_path);
  if (!csv)
    throw std::runtime_error("cannot open for writing: " + csv_path.string());
  ch::write_bench_csv(csv, report.records);
  fs::path json_path = fs::path(opt.out_dir) / "bench.json";
  write_json_file(json_path, ch::bench_report_to_json(report));

  if (report.fit.points >= 2)
    std::cout << "log-log slope: " << report.fit.slope
              << " (R^2 " << report.fit.r_squared << ", "
              << report.fit.points << " points)\n";
  else
    std::cout << "log-log slope: not enough completed points\n";
  std::cout << "wrote " << csv_path.string() << '\n'
            << "wrote " << json_path.string() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cycsub: induced-cycle enumeration engine and test harness"};
  app.set_version_flag("--version", std::string(cs::kVersion));
  app.require_subcommand(1);

  CommonOpts opt;
  auto add_common = [&](CLI::App* sub, bool takes_input, bool takes_cap) {
    if (takes_input)
      sub->add_option("--input", opt.input, "graph file (edge list or DIMACS)")
          ->required();
    sub->add_option("--out", opt.out_dir, "output directory");
    sub->add_option("--mode", opt.mode, "join guard")
        ->check(CLI::IsMember({"strict", "literal"}));
    if (takes_cap)
      sub->add_option("--cap", opt.cap,
                      "oracle vertex cap (overrides CYCSUB_ORACLE_CAP)");
  };

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "run the engine, write result and trace");
  add_common(enumerate, true, false);

  CLI::App* diff =
      app.add_subcommand("diff", "compare engine against the oracle");
  add_common(diff, true, true);

  int exhaust_n = 0;
  std::string reports_path;
  CLI::App* exhaust = app.add_subcommand(
      "exhaust", "diff every labeled graph on n vertices");
  add_common(exhaust, false, false);
  exhaust->add_option("--n", exhaust_n, "vertex count (at most 6)")
      ->required();
  exhaust->add_option("--reports", reports_path,
                      "also stream one JSON line per graph to this file");

  CLI::App* shrink = app.add_subcommand(
      "shrink", "minimize a mismatching graph by greedy deletion");
  add_common(shrink, true, true);

  std::vector<int> bench_ns = {10, 15, 20, 25, 30, 35, 40};
  double bench_p = 0.2;
  int bench_seeds = 3;
  std::size_t bench_max_states = 0;
  double bench_budget = 0.0;
  CLI::App* bench =
      app.add_subcommand("bench", "time the engine on random graphs");
  add_common(bench, false, false);
  bench->add_option("--n", bench_ns, "vertex counts (comma separated)")
      ->delimiter(',');
  bench->add_option("--p", bench_p, "edge probability")
      ->check(CLI::Range(0.0, 1.0));
  bench->add_option("--seeds", bench_seeds, "seeds per n (values 1..k)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--max-states", bench_max_states,
                    "per-run live state limit (0: unlimited)");
  bench->add_option("--budget-seconds", bench_budget,
                    "per-run wall clock limit (0: unlimited)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*enumerate) return cmd_enumerate(opt);
    if (*diff) return cmd_diff(opt);
    if (*exhaust) return cmd_exhaust(opt, exhaust_n, reports_path);
    if (*shrink) return cmd_shrink(opt);
    if (*bench)
      return cmd_bench(opt, bench_ns, bench_p, bench_seeds, bench_max_states,
                       bench_budget);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;  // unreachable with require_subcommand(1)
}
