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

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "builders.hpp"
#include "cycsub/generate.hpp"

namespace cs = cycsub;
namespace ch = cycsub::harness;
namespace fs = std::filesystem;
using cs::Graph;
using cs::VertexPair;
using cs::VertexSet;

namespace {

fs::path fresh_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() /
                 ("cycsub-" + name + "-" + std::to_string(getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream is(path);
  REQUIRE(is.good());
  std::ostringstream buf;
  buf << is.rdbuf();
  return buf.str();
}

nlohmann::json without_timings(nlohmann::json j) {
  j["engine"].erase("wall_seconds");
  j["oracle"].erase("wall_seconds");
  return j;
}

}  // namespace

TEST_SUITE_BEGIN("harness");

TEST_CASE("diff report agrees on known graphs") {
  ch::DiffReport rep =
      ch::run_diff(cs::test::make_petersen(), "petersen", cs::JoinMode::strict);
  CHECK(rep.agree());
  CHECK(rep.verdict() == "agree");
  CHECK(rep.engine_family.size() == 22);
  CHECK(rep.oracle_family.size() == 22);
  CHECK(rep.engine_missing.empty());
  CHECK(rep.engine_extra.empty());

  nlohmann::json j = ch::diff_report_to_json(rep);
  CHECK(j["verdict"] == "agree");
  CHECK(j["mode"] == "strict");
  CHECK(j["graph"]["vertices"] == 10);
  CHECK(j["graph"]["edges"] == 15);
  CHECK(j["engine"]["members"] == 22);
  CHECK(j["state_bound"]["foundations"] == 30);
}

TEST_CASE("diff report does not depend on run order") {
  Graph g = cs::gen_gnp(9, 0.35, 99);
  nlohmann::json a = without_timings(
      ch::diff_report_to_json(ch::run_diff(g, "g", cs::JoinMode::strict)));
  nlohmann::json b = without_timings(
      ch::diff_report_to_json(ch::run_diff(g, "g", cs::JoinMode::strict)));
  CHECK(a.dump() == b.dump());
}

TEST_CASE("verdict names the direction of a difference") {
  ch::DiffReport rep;
  CHECK(rep.verdict() == "agree");
  rep.engine_missing.push_back(VertexSet::of({0, 1, 2}));
  CHECK(rep.verdict() == "engine_missing");
  rep.engine_extra.push_back(VertexSet::of({1, 2, 3}));
  CHECK(rep.verdict() == "engine_missing+extra");
  rep.engine_missing.clear();
  CHECK(rep.verdict() == "engine_extra");
}

TEST_CASE("enumerate writes byte-identical results across runs") {
  Graph g = cs::test::make_petersen();
  fs::path a = fresh_dir("enum-a");
  fs::path b = fresh_dir("enum-b");
  ch::EnumerateArtifacts ra = ch::run_enumerate(g, cs::JoinMode::strict, a);
  ch::EnumerateArtifacts rb = ch::run_enumerate(g, cs::JoinMode::strict, b);
  CHECK(ra.members == 22);
  CHECK(slurp(ra.result_path) == slurp(rb.result_path));
  CHECK(slurp(ra.result_path).starts_with("0 1 2 3 4\n"));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST_CASE("exhaust sweeps every labeled graph and is deterministic") {
  fs::path dir = fresh_dir("exhaust3");
  std::ostringstream reports1, reports2, log;

  ch::ExhaustSummary s1 =
      ch::run_exhaust(3, cs::JoinMode::strict, dir, &reports1, log);
  CHECK(s1.graphs == 8);
  CHECK(s1.agree == 8);
  CHECK(s1.mismatch == 0);
  CHECK(s1.cap_hits == 0);
  CHECK(s1.state_bound_violations == 0);
  CHECK(s1.fixtures.empty());

  ch::ExhaustSummary s2 =
      ch::run_exhaust(3, cs::JoinMode::strict, dir, &reports2, log);
  CHECK(ch::exhaust_summary_to_json(s1).dump() ==
        ch::exhaust_summary_to_json(s2).dump());
  CHECK(reports1.str() == reports2.str());
  CHECK(reports1.str().find("\"verdict\":\"agree\"") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("exhaust counts literal-guard cap hits without failing the sweep") {
  fs::path dir = fresh_dir("exhaust4");
  std::ostringstream log;
  ch::ExhaustSummary s =
      ch::run_exhaust(4, cs::JoinMode::literal, dir, nullptr, log);
  CHECK(s.graphs == 64);
  CHECK(s.mismatch == 0);
  CHECK(s.cap_hits > 0);  // the 4-path loops under the literal guard
  CHECK(s.agree + s.cap_hits == 64);
  fs::remove_all(dir);
}

TEST_CASE("exhaust refuses vertex counts past the enumeration cap") {
  fs::path dir = fresh_dir("exhaust7");
  std::ostringstream log;
  CHECK_THROWS_AS(
      ch::run_exhaust(7, cs::JoinMode::strict, dir, nullptr, log),
      cs::InputError);
  fs::remove_all(dir);
}

TEST_CASE("vertex deletion relabels the tail") {
  Graph p4 = cs::test::make_path(4);
  Graph g = ch::delete_vertex(p4, 0);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 2));

  Graph h = ch::delete_vertex(cs::test::make_petersen(), 4);
  CHECK(h.vertex_count() == 9);
  CHECK(h.edge_count() == 12);

  Graph e = ch::delete_edge(p4, VertexPair(1, 2));
  CHECK(e.vertex_count() == 4);
  CHECK(e.edge_count() == 2);
  CHECK_FALSE(e.adjacent(1, 2));
}

TEST_CASE("shrink refuses graphs where engine and oracle agree") {
  std::ostringstream log;
  CHECK_THROWS_WITH_AS(
      ch::run_shrink(cs::test::make_cycle(5), cs::JoinMode::strict, 20, log),
      doctest::Contains("not a counterexample"), cs::InputError);
}

TEST_CASE("bench emits one record per (n, seed) in order") {
  std::ostringstream log;
  ch::BenchReport rep = ch::run_bench({8, 6}, 0.3, 2, cs::JoinMode::strict,
                                      cs::EngineLimits{}, log);
  REQUIRE(rep.records.size() == 4);
  CHECK(rep.records[0].n == 6);
  CHECK(rep.records[0].seed == 1);
  CHECK(rep.records[1].n == 6);
  CHECK(rep.records[1].seed == 2);
  CHECK(rep.records[2].n == 8);
  CHECK(rep.records[3].n == 8);
  for (const ch::BenchRecord& r : rep.records) {
    CHECK(r.status == "ok");
    // |F| is a subfamily of the C(n,3) triples.
    std::size_t triples =
        std::size_t(r.n) * (r.n - 1) * (r.n - 2) / 6;
    CHECK(r.foundations <= triples);
    CHECK(r.classify_seconds + r.loop_seconds + r.filter_seconds <=
          r.total_seconds + 1e-6);
    CHECK(r.abort_states == 0);
  }
}

TEST_CASE("bench records state-limit aborts and stays deterministic") {
  std::ostringstream log;
  cs::EngineLimits tight{5, 0.0};
  ch::BenchReport a =
      ch::run_bench({12}, 0.4, 1, cs::JoinMode::strict, tight, log);
  REQUIRE(a.records.size() == 1);
  CHECK(a.records[0].status == "aborted:states");
  CHECK(a.records[0].abort_states > 5);
  CHECK(a.fit.points == 0);

  ch::BenchReport b =
      ch::run_bench({12}, 0.4, 1, cs::JoinMode::strict, tight, log);
  CHECK(a.records[0].abort_states == b.records[0].abort_states);
  CHECK(a.records[0].iterations == b.records[0].iterations);

  std::ostringstream csv_a, csv_b;
  ch::write_bench_csv(csv_a, a.records);
  ch::write_bench_csv(csv_b, b.records);
  auto strip_timings = [](std::string csv) {
    // Columns 5..8 hold wall-clock values; blank them out.
    std::istringstream in(csv);
    std::string line, out;
    while (std::getline(in, line)) {
      std::istringstream cells(line);
      std::string cell;
      int col = 0;
      while (std::getline(cells, cell, ',')) {
        out += (++col >= 5 && col <= 8) ? "_" : cell;
        out += ',';
      }
      out += '\n';
    }
    return out;
  };
  CHECK(strip_timings(csv_a.str()) == strip_timings(csv_b.str()));
}

TEST_CASE("log-log fit recovers a planted exponent") {
  std::vector<ch::BenchRecord> records;
  for (int n : {8, 12, 16, 24, 32}) {
    ch::BenchRecord r;
    r.n = n;
    r.status = "ok";
    r.total_seconds = 1e-6 * std::pow(double(n), 3.0);
    records.push_back(r);
  }
  ch::SlopeFit fit = ch::fit_log_log(records);
  CHECK(fit.points == 5);
  CHECK(fit.slope == doctest::Approx(3.0));
  CHECK(fit.r_squared == doctest::Approx(1.0));

  // One distinct n value cannot pin a slope.
  records.resize(1);
  CHECK(ch::fit_log_log(records).points < 2);

  // Aborted rows never enter the fit.
  for (auto& r : records) r.status = "aborted:time";
  CHECK(ch::fit_log_log(records).points == 0);
}

TEST_CASE("oracle cap resolution prefers flag over environment") {
  char saved[64] = {0};
  if (const char* old = std::getenv("CYCSUB_ORACLE_CAP"))
    std::snprintf(saved, sizeof saved, "%s", old);

  unsetenv("CYCSUB_ORACLE_CAP");
  CHECK(ch::resolve_oracle_cap(0) == cs::kOracleDefaultCap);
  CHECK(ch::resolve_oracle_cap(7) == 7);

  setenv("CYCSUB_ORACLE_CAP", "17", 1);
  CHECK(ch::resolve_oracle_cap(0) == 17);
  CHECK(ch::resolve_oracle_cap(5) == 5);

  setenv("CYCSUB_ORACLE_CAP", "banana", 1);
  CHECK_THROWS_AS(ch::resolve_oracle_cap(0), cs::InputError);
  setenv("CYCSUB_ORACLE_CAP", "-3", 1);
  CHECK_THROWS_AS(ch::resolve_oracle_cap(0), cs::InputError);

  if (saved[0])
    setenv("CYCSUB_ORACLE_CAP", saved, 1);
  else
    unsetenv("CYCSUB_ORACLE_CAP");
}

TEST_SUITE_END();
