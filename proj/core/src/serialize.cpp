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

#include "cycsub/serialize.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "cycsub/io.hpp"
#include "cycsub/version.hpp"

namespace cycsub {

void write_family(std::ostream& os, const CandidateFamily& family) {
  for (const VertexSet& s : family.members()) {
    const auto& ms = s.members();
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (i) os << ' ';
      os << ms[i];
    }
    os << '\n';
  }
}

void write_family_file(const std::filesystem::path& path,
                       const CandidateFamily& family) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  write_family(os, family);
}

CandidateFamily read_family(std::istream& is) {
  std::vector<VertexSet> members;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
    std::istringstream ls(line);
    std::vector<int> vs;
    int v;
    while (ls >> v) vs.push_back(v);
    if (!ls.eof()) throw ParseError(lineno, "expected vertex ids only");
    if (!vs.empty()) members.push_back(VertexSet(std::move(vs)));
  }
  return CandidateFamily::of(std::move(members));
}

CandidateFamily read_family_file(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open: " + path.string());
  return read_family(is);
}

nlohmann::json trace_to_json(const EngineTrace& trace) {
  nlohmann::json iters = nlohmann::json::array();
  for (const IterationRecord& r : trace.iterations) {
    iters.push_back({{"index", r.index},
                     {"partials", r.partials_in},
                     {"z_added", r.z_added},
                     {"wall_seconds", r.wall_seconds}});
  }
  return nlohmann::json{
      {"schema_version", kSchemaVersion},
      {"tool_version", kVersion},
      {"mode", to_string(trace.mode)},
      {"iterations", std::move(iters)},
      {"body_iterations", trace.body_iterations()},
      {"productive_iterations", trace.productive_iterations},
      {"peak_partials", trace.peak_partials()},
      {"counts",
       {{"foundations", trace.foundation_count},
        {"extensions", trace.extension_count},
        {"cliques", trace.clique_count},
        {"candidates", trace.z_size},
        {"result", trace.result_size}}},
      {"timings_seconds",
       {{"classify", trace.classify_seconds},
        {"loop", trace.loop_seconds},
        {"filter", trace.filter_seconds},
        {"total", trace.total_seconds}}}};
}

void write_trace_file(const std::filesystem::path& path,
                      const EngineTrace& trace) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
  os << trace_to_json(trace).dump(2) << '\n';
}

}  // namespace cycsub
