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

#include <algorithm>
#include <cmath>
#include <set>

#include "oracle.hpp"
#include "sqrtgap/checkers.hpp"

using namespace sqrtgap;

namespace {

const PrimeStore& store() {
  static const PrimeStore s = PrimeStore::build(limit_for_index(20000));
  return s;
}

std::vector<uint64_t> violations(const std::string& id, uint64_t n_hi) {
  return run_checker(id, store(), 1, n_hi).violations;
}

}  // namespace

TEST_CASE("integer exception sets match brute force") {
  const auto ps = oracle::primes_upto(250000);
  std::vector<uint64_t> sq, sq2;
  for (uint64_t n = 1; n <= 20000; ++n) {
    const uint64_t p = ps[n - 1], q = ps[n], d = q - p;
    if (d * d >= q) sq.push_back(n);
    if (d * d >= 2 * p) sq2.push_back(n);
  }
  CHECK_EQ(violations("conj-gap-sq", 20000), sq);
  CHECK_EQ(violations("conj-gap-sq2", 20000), sq2);
  CHECK_EQ(sq, std::vector<uint64_t>{4, 9, 30});
}

TEST_CASE("large root gaps agree with a floating reference") {
  // delta^2 > 1/4 is far from the boundary for every small n, so doubles suffice.
  const auto ps = oracle::primes_upto(250000);
  std::vector<uint64_t> ref;
  for (uint64_t n = 1; n <= 20000; ++n) {
    const double delta = std::sqrt(double(ps[n])) - std::sqrt(double(ps[n - 1]));
    if (delta > 0.5) ref.push_back(n);
  }
  const auto r = run_checker("survey-quarter", store(), 1, 20000);
  CHECK_EQ(r.hits, ref);
  CHECK_EQ(r.verdict, Verdict::SurveyResult);
}

TEST_CASE("catalog ids are unique and resolvable") {
  std::set<std::string> seen;
  for (const auto& c : catalog()) {
    CHECK(seen.insert(c.id).second);
    CHECK_EQ(find_checker(c.id).id, c.id);
  }
  CHECK_THROWS(find_checker("no-such-checker"));
}

TEST_CASE("sharding and merging reproduce a single pass") {
  const std::vector<std::string> ids{"andrica", "thm-35", "twin-95", "trend-mu-max",
                                     "survey-quarter", "first-after-square"};
  const auto one = run_checkers(ids, store(), 1, 8000);
  CheckOptions four;
  four.threads = 4;
  const auto par = run_checkers(ids, store(), 1, 8000, four);
  const auto a = run_checkers(ids, store(), 1, 3000);
  const auto b = run_checkers(ids, store(), 3001, 8000);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto m = merge_reports(a[i], b[i]);
    CHECK_EQ(m.counts.holds, one[i].counts.holds);
    CHECK_EQ(m.counts.fails, one[i].counts.fails);
    CHECK_EQ(m.violations, one[i].violations);
    CHECK_EQ(m.hits, one[i].hits);
    CHECK_EQ(m.verdict, one[i].verdict);
    CHECK_EQ(par[i].violations, one[i].violations);
    CHECK_EQ(par[i].counts.holds, one[i].counts.holds);
  }
  CHECK_THROWS(merge_reports(a[0], a[0]));
}

TEST_CASE("full catalog has no failures on a short range") {
  for (const auto& r : run_all(store(), 1, 2000)) {
    INFO(r.id);
    CHECK_NE(r.verdict, Verdict::Fail);
    CHECK_NE(r.verdict, Verdict::UndecidedPresent);
    CHECK_EQ(r.counts.total(), 2000);
  }
}
