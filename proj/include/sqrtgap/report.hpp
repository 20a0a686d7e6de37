// Copyright 2026 The sqrtgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sqrtgap/checkers.hpp"
#include "sqrtgap/window.hpp"

namespace sqrtgap {

inline constexpr const char* kToolVersion = "0.1.0";

enum class ReportFormat { kTable, kJson, kCsv };

ReportFormat parse_format(const std::string& s);  // throws std::invalid_argument
Kind parse_kind(const std::string& s);
Verdict parse_verdict(const std::string& s);

/// One JSON object on a single line. Leading keys follow the documented
/// schema: id, range, counts, verdict, conjecture, witnesses.
std::string to_json_line(const CheckReport& r);
CheckReport from_json_line(const std::string& line);  // throws std::invalid_argument

void write_reports(std::ostream& os, const std::vector<CheckReport>& reports, ReportFormat fmt);

/// FNV-1a over the JSON line, as 16 hex digits.
std::string report_digest(const CheckReport& r);

/// Progress of a verify run. Reports cover [n_lo, checkpoint.n].
struct RunManifest {
  std::string tool_version = kToolVersion;
  std::string command_line;
  uint64_t limit = 0;
  uint64_t n_lo = 1;
  uint64_t n_hi = 0;
  std::vector<std::string> ids;
  std::vector<CheckReport> reports;
  std::map<std::string, std::string> digests;
  std::optional<JCheckpoint> checkpoint;
  double wall_seconds = 0;
  std::string updated_at;  // UTC; the only timestamp anywhere

  bool complete() const { return checkpoint && checkpoint->n >= n_hi; }
  uint64_t next_n() const { return checkpoint ? checkpoint->n + 1 : n_lo; }
};

RunManifest new_manifest(std::vector<std::string> ids, uint64_t limit, uint64_t n_lo,
                         uint64_t n_hi, std::string command_line = {});

/// Runs the manifest's checkers over [next_n(), min(through, n_hi)] and
/// folds the result in. Throws CheckpointMismatch if the store disagrees with
/// the recorded checkpoint.
void advance(RunManifest& m, const PrimeStore& store, uint64_t through,
             const CheckOptions& opts = {});

std::string manifest_to_json(const RunManifest& m);
RunManifest manifest_from_json(const std::string& text);
void save_manifest(const std::string& path, const RunManifest& m);
RunManifest load_manifest(const std::string& path);

}  // namespace sqrtgap
