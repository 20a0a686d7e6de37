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

#include "oracle.hpp"
#include "sqrtgap/intervals.hpp"

using namespace sqrtgap;

TEST_CASE("square windows against brute force") {
  const auto store = PrimeStore::build(90000);
  const auto rows = square_report(store, 1, 290, true);
  for (const auto& r : rows) {
    const uint64_t a = r.N * r.N, b = (r.N + 1) * (r.N + 1);
    std::vector<uint64_t> ps;
    for (uint64_t x = a + 1; x < b; ++x)
      if (oracle::is_prime(x)) ps.push_back(x);
    CHECK_EQ(r.primes, ps);
    CHECK_EQ(r.count, ps.size());
    CHECK(r.legendre);
    if (r.N >= 2) CHECK(r.oppermann);
  }
  CHECK_THROWS_AS(square_report(store, 1, 400), CoverageError);
}

TEST_CASE("even square batches") {
  const auto store = PrimeStore::build(100000);
  const auto b6 = even_square_batch(store, 6);
  CHECK_EQ(b6.primes, std::vector<uint64_t>{149, 151, 157, 163, 167});
  CHECK_EQ(b6.h_values, std::vector<uint64_t>{5, 7, 13, 19, 23});
  CHECK(b6.all_prime());
  const auto b40 = even_square_batch(store, 40);
  CHECK_EQ(b40.primes.size(), 13);
  CHECK_EQ(b40.prime_h, std::vector<uint64_t>{73, 151});
}

TEST_CASE("brocard rows") {
  const auto store = PrimeStore::build(1000000);
  const auto rows = brocard_report(store, 2, brocard_index_bound(store, 1000000));
  for (const auto& r : rows) {
    uint64_t c = 0;
    for (uint64_t x = r.p * r.p + 1; x < r.q * r.q; ++x) c += oracle::is_prime(x);
    CHECK_EQ(r.count, c);
    CHECK(r.ok());
  }
}

TEST_CASE("power ladder") {
  const auto store = PrimeStore::build(1 << 20);
  const auto ladder = pow2_ladder(store, 18);
  CHECK_EQ(ladder[3].pi, 6);   // pi(16)
  CHECK_EQ(ladder[4].pi, 11);  // pi(32)
  for (const auto& r : ladder) {
    CHECK(r.identity);
    if (r.k >= 2) CHECK(r.lower_ok);
  }
  CHECK_EQ(store.pi(243) - store.pi(32), 42);
}

TEST_CASE("power boundaries and counts") {
  const auto store = PrimeStore::build(2000000);
  const auto scan = power_report(store, 3, 1, 200, 2000000, PowerScheme::kCubic);
  REQUIRE_FALSE(scan.rows.empty());
  for (const auto& r : scan.rows) {
    uint64_t sum = 0;
    for (auto c : r.lower_counts) sum += c;
    CHECK_EQ(sum, r.total);
    CHECK(r.total_ok());
  }
  const auto b = power_boundaries(2, 10, 2, PowerScheme::kEqual);
  CHECK_EQ(b.front(), 100);
  CHECK_EQ(b.back(), 121);
}

TEST_CASE("h value questions") {
  CHECK_EQ(*first_prime_with_h(1, 100), 2);
  CHECK(missing_h_values(200, 3000).empty());
  const auto store = PrimeStore::build(200000);
  const auto deniers = split_deniers(store, 2, 100);
  CHECK_EQ(deniers, std::vector<uint64_t>{17, 19, 46, 58, 64, 67, 85});
}
