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


#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "sqrtgap/report.hpp"

using namespace sqrtgap;

namespace {

const PrimeStore& store() {
  static const PrimeStore s = PrimeStore::build(limit_for_index(6000));
  return s;
}

}  // namespace

TEST_CASE("json lines round trip without loss") {
  for (const auto& r : run_all(store(), 1, 300)) {
    const auto line = to_json_line(r);
    CHECK_EQ(line.find('\n'), std::string::npos);
    CHECK_EQ(line.rfind("{\"id\":", 0), 0);
    const auto back = from_json_line(line);
    CHECK_EQ(to_json_line(back), line);
    CHECK_EQ(report_digest(back), report_digest(r));
  }
}

TEST_CASE("schema errors are rejected") {
  CHECK_THROWS_AS(from_json_line("{}"), std::invalid_argument);
  CHECK_THROWS_AS(from_json_line("not json"), std::invalid_argument);
  CHECK_THROWS_AS(from_json_line(R"({"id":"x","range":[1],"counts":{},"verdict":"PASS"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_verdict("MAYBE"), std::invalid_argument);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("csv and table writers") {
  const auto rs = run_checkers({"conj-gap-sq"}, store(), 1, 100);
  std::ostringstream csv, table;
  write_reports(csv, rs, ReportFormat::kCsv);
  write_reports(table, rs, ReportFormat::kTable);
  CHECK_NE(csv.str().find("conj-gap-sq,EXCEPTION_SET,EXCEPTIONS_CONFIRMED,1,100,97,3,"),
           std::string::npos);
  CHECK_NE(table.str().find("4 9 30"), std::string::npos);
}

TEST_CASE("manifest resume equals a single run") {
  const std::vector<std::string> ids{"twin-95", "thm-35", "trend-delta", "ext-64"};
  auto single = new_manifest(ids, store().limit(), 1, 5000);
  advance(single, store(), 5000);

  const auto path = (std::filesystem::temp_directory_path() / "sqrtgap_manifest_test.json").string();
  auto m = new_manifest(ids, store().limit(), 1, 5000);
  for (uint64_t stop : {700, 2100, 4999, 5000}) {
    advance(m, store(), stop);
    save_manifest(path, m);
    m = load_manifest(path);
  }
  REQUIRE(m.complete());
  REQUIRE_EQ(m.reports.size(), single.reports.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    CHECK_EQ(to_json_line(m.reports[i]), to_json_line(single.reports[i]));
  CHECK_EQ(m.digests, single.digests);

  auto tampered = new_manifest(ids, store().limit(), 1, 5000);
  advance(tampered, store(), 1000);
  tampered.checkpoint->j += 1;
  CHECK_THROWS_AS(advance(tampered, store(), 5000), CheckpointMismatch);

  auto text = manifest_to_json(single);
  text.replace(text.find("\"holds\": "), 9, "\"holds\": 1");
  CHECK_THROWS(manifest_from_json(text));
  std::remove(path.c_str());
}
