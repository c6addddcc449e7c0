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

#ifndef CYCSUB_SERIALIZE_HPP
#define CYCSUB_SERIALIZE_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"

#include "cycsub/engine.hpp"

namespace cycsub {

/// Result-file format: one family member per line, members in canonical
/// family order, vertex ids sorted ascending and space-separated. The
/// empty family is the empty file. Byte-exact layout in docs/formats.md.
void write_family(std::ostream& os, const CandidateFamily& family);
void write_family_file(const std::filesystem::path& path,
                       const CandidateFamily& family);

/// Inverse of write_family; blank lines and '#' comments are skipped.
/// Throws ParseError on malformed lines.
CandidateFamily read_family(std::istream& is);
CandidateFamily read_family_file(const std::filesystem::path& path);

/// Trace document: run mode, per-pass counters, classification totals,
/// and phase timings, tagged with the schema version.
nlohmann::json trace_to_json(const EngineTrace& trace);
void write_trace_file(const std::filesystem::path& path,
                      const EngineTrace& trace);

}  // namespace cycsub

#endif  // CYCSUB_SERIALIZE_HPP
