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

#include "sqrtgap/report.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace sqrtgap {
namespace {

using json = nlohmann::ordered_json;

json to_json(const CheckReport& r) {
  json j;
  j["id"] = r.id;
  j["range"] = {r.n_lo, r.n_hi};
  j["counts"] = {{"holds", r.counts.holds},
                 {"fails", r.counts.fails},
                 {"undecided", r.counts.undecided},
                 {"out_of_domain", r.counts.out_of_domain}};
  j["verdict"] = to_string(r.verdict);
  j["conjecture"] = r.conjecture;
  json ws = json::array();
  for (const auto& w : r.witnesses)
    ws.push_back({{"n", w.n}, {"p", w.p}, {"q", w.q}, {"d", w.d}, {"note", w.note},
                  {"status", w.status}});
  j["witnesses"] = std::move(ws);
  j["kind"] = to_string(r.kind);
  j["hard_fails"] = r.hard_fails;
  j["violations"] = r.violations;
  j["violations_truncated"] = r.violations_truncated;
  j["hits"] = r.hits;
  j["hits_truncated"] = r.hits_truncated;
  j["expected_exceptions"] = r.expected_exceptions;
  j["expected_hits"] = r.expected_hits;
  j["notes"] = r.notes;
  return j;
}

CheckReport from_json(const json& j) {
  CheckReport r;
  r.id = j.at("id").get<std::string>();
  const auto& range = j.at("range");
  if (!range.is_array() || range.size() != 2) throw std::invalid_argument("range must be [lo, hi]");
  r.n_lo = range[0].get<uint64_t>();
  r.n_hi = range[1].get<uint64_t>();
  const auto& c = j.at("counts");
  r.counts.holds = c.at("holds").get<uint64_t>();
  r.counts.fails = c.at("fails").get<uint64_t>();
  r.counts.undecided = c.at("undecided").get<uint64_t>();
  r.counts.out_of_domain = c.at("out_of_domain").get<uint64_t>();
  r.verdict = parse_verdict(j.at("verdict").get<std::string>());
  r.conjecture = j.at("conjecture").get<bool>();
  for (const auto& w : j.at("witnesses"))
    r.witnesses.push_back({w.at("n").get<uint64_t>(), w.at("p").get<uint64_t>(),
                           w.at("q").get<uint64_t>(), w.at("d").get<uint64_t>(),
                           w.value("status", std::string{}), w.at("note").get<std::string>()});
  r.kind = parse_kind(j.value("kind", std::string("UNIVERSAL")));
  r.hard_fails = j.value("hard_fails", uint64_t{0});
  r.violations = j.value("violations", std::vector<uint64_t>{});
  r.violations_truncated = j.value("violations_truncated", false);
  r.hits = j.value("hits", std::vector<uint64_t>{});
  r.hits_truncated = j.value("hits_truncated", false);
  r.expected_exceptions = j.value("expected_exceptions", std::vector<uint64_t>{});
  r.expected_hits = j.value("expected_hits", std::vector<uint64_t>{});
  r.notes = j.value("notes", std::vector<std::string>{});
  return r;
}

std::string join(const std::vector<uint64_t>& v, std::size_t cap, bool truncated) {
  std::string s;
  for (std::size_t i = 0; i < v.size() && i < cap; ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  if (v.size() > cap || truncated) s += s.empty() ? "..." : " ...";
  return s;
}

const std::vector<uint64_t>& listed(const CheckReport& r) {
  return r.kind == Kind::Survey ? r.hits : r.violations;
}

std::string utc_now() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

ReportFormat parse_format(const std::string& s) {
  if (s == "table") return ReportFormat::kTable;
  if (s == "json" || s == "jsonl") return ReportFormat::kJson;
  if (s == "csv") return ReportFormat::kCsv;
  throw std::invalid_argument("unknown format '" + s + "'");
}

Kind parse_kind(const std::string& s) {
  for (Kind k : {Kind::Universal, Kind::ExceptionSet, Kind::Equivalence, Kind::Survey, Kind::Trend})
    if (s == to_string(k)) return k;
  throw std::invalid_argument("unknown kind '" + s + "'");
}

Verdict parse_verdict(const std::string& s) {
  for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::ExceptionsConfirmed,
                    Verdict::SurveyResult, Verdict::TrendResult, Verdict::UndecidedPresent})
    if (s == to_string(v)) return v;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

std::string to_json_line(const CheckReport& r) { return to_json(r).dump(); }

CheckReport from_json_line(const std::string& line) {
  try {
    return from_json(json::parse(line));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report does not match the schema: ") + e.what());
  }
}

void write_reports(std::ostream& os, const std::vector<CheckReport>& reports, ReportFormat fmt) {
  switch (fmt) {
    case ReportFormat::kJson:
      for (const auto& r : reports) os << to_json_line(r) << '\n';
      return;
    case ReportFormat::kCsv:
      os << "id,kind,verdict,n_lo,n_hi,holds,fails,undecided,out_of_domain,hard_fails,"
            "conjecture,listed\n";
      for (const auto& r : reports)
        os << r.id << ',' << to_string(r.kind) << ',' << to_string(r.verdict) << ',' << r.n_lo
           << ',' << r.n_hi << ',' << r.counts.holds << ',' << r.counts.fails << ','
           << r.counts.undecided << ',' << r.counts.out_of_domain << ',' << r.hard_fails << ','
           << (r.conjecture ? "true" : "false") << ",\""
           << join(listed(r), listed(r).size(), r.violations_truncated || r.hits_truncated)
           << "\"\n";
      return;
    case ReportFormat::kTable: {
      std::size_t w = 2;
      for (const auto& r : reports) w = std::max(w, r.id.size());
      os << std::left << std::setw(static_cast<int>(w)) << "id" << "  " << std::setw(20)
         << "verdict" << std::right << std::setw(10) << "holds" << std::setw(10) << "fails"
         << std::setw(6) << "und" << "  listed\n";
      for (const auto& r : reports)
        os << std::left << std::setw(static_cast<int>(w)) << r.id << "  " << std::setw(20)
           << to_string(r.verdict) << std::right << std::setw(10) << r.counts.holds
           << std::setw(10) << r.counts.fails << std::setw(6) << r.counts.undecided << "  "
           << join(listed(r), 12, r.violations_truncated || r.hits_truncated) << '\n';
      return;
    }
  }
}

std::string report_digest(const CheckReport& r) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : to_json_line(r)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunManifest new_manifest(std::vector<std::string> ids, uint64_t limit, uint64_t n_lo,
                         uint64_t n_hi, std::string command_line) {
  if (n_lo == 0 || n_hi < n_lo) throw std::invalid_argument("manifest needs 1 <= n_lo <= n_hi");
  RunManifest m;
  m.ids = std::move(ids);
  m.limit = limit;
  m.n_lo = n_lo;
  m.n_hi = n_hi;
  m.command_line = std::move(command_line);
  return m;
}

void advance(RunManifest& m, const PrimeStore& store, uint64_t through, const CheckOptions& opts) {
  if (m.complete()) return;
  const uint64_t hash = range_hash(m.limit, m.n_lo, m.n_hi);
  if (m.checkpoint) {
    if (m.checkpoint->range_hash != hash)
      throw CheckpointMismatch("manifest checkpoint belongs to a different range");
    if (j_index(store, m.checkpoint->n) != m.checkpoint->j)
      throw CheckpointMismatch("twin count at the checkpoint does not match the store");
  }
  const uint64_t lo = m.next_n(), hi = std::min(through, m.n_hi);
  if (hi < lo) return;
  const auto start = std::chrono::steady_clock::now();
  auto part = run_checkers(m.ids, store, lo, hi, opts);
  if (m.reports.empty()) {
    m.reports = std::move(part);
  } else {
    for (std::size_t i = 0; i < part.size(); ++i) m.reports[i] = merge_reports(m.reports[i], part[i], opts);
  }
  m.checkpoint = JCheckpoint{hi, j_index(store, hi), hash};
  m.digests.clear();
  for (const auto& r : m.reports) m.digests[r.id] = report_digest(r);
  m.wall_seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  m.updated_at = utc_now();
}

std::string manifest_to_json(const RunManifest& m) {
  json j;
  j["tool_version"] = m.tool_version;
  j["command_line"] = m.command_line;
  j["limit"] = m.limit;
  j["range"] = {m.n_lo, m.n_hi};
  j["ids"] = m.ids;
  j["checkpoint"] = m.checkpoint ? json(m.checkpoint->token()) : json(nullptr);
  j["digests"] = m.digests;
  j["wall_seconds"] = m.wall_seconds;
  j["updated_at"] = m.updated_at;
  json rs = json::array();
  for (const auto& r : m.reports) rs.push_back(to_json(r));
  j["reports"] = std::move(rs);
  return j.dump(2);
}

RunManifest manifest_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    RunManifest m;
    m.tool_version = j.at("tool_version").get<std::string>();
    m.command_line = j.value("command_line", std::string{});
    m.limit = j.at("limit").get<uint64_t>();
    m.n_lo = j.at("range")[0].get<uint64_t>();
    m.n_hi = j.at("range")[1].get<uint64_t>();
    m.ids = j.at("ids").get<std::vector<std::string>>();
    if (!j.at("checkpoint").is_null())
      m.checkpoint = JCheckpoint::parse(j.at("checkpoint").get<std::string>());
    m.digests = j.value("digests", std::map<std::string, std::string>{});
    m.wall_seconds = j.value("wall_seconds", 0.0);
    m.updated_at = j.value("updated_at", std::string{});
    for (const auto& r : j.at("reports")) m.reports.push_back(from_json(r));
    for (const auto& r : m.reports) {
      auto it = m.digests.find(r.id);
      if (it == m.digests.end() || it->second != report_digest(r))
        throw CheckpointMismatch("manifest digest mismatch for " + r.id);
    }
    return m;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed manifest: ") + e.what());
  }
}

void save_manifest(const std::string& path, const RunManifest& m) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << manifest_to_json(m) << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot move " + tmp);
}

RunManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return manifest_from_json(ss.str());
}

}  // namespace sqrtgap
