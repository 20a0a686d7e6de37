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
#include "sqrtgap/primes.hpp"

using namespace sqrtgap;

TEST_CASE("store agrees with trial division") {
  const uint64_t limit = 20000;
  const auto ps = oracle::primes_upto(limit);
  const auto store = PrimeStore::build(limit);
  for (uint64_t x = 0; x <= limit; ++x) CHECK_EQ(store.is_prime(x), oracle::is_prime(x));
  uint64_t c = 0;
  for (uint64_t x = 0; x <= limit; ++x) {
    c += oracle::is_prime(x);
    REQUIRE_EQ(store.pi(x), c);
  }
  for (std::size_t i = 0; i < ps.size(); ++i) CHECK_EQ(store.nth_prime(i + 1), ps[i]);
}

TEST_CASE("twin counts and next_prime") {
  const auto ps = oracle::primes_upto(5000);
  const auto store = PrimeStore::build(5000);
  uint64_t twins = 0;
  for (uint64_t x = 0; x + 2 <= 5000; ++x) {
    twins += oracle::is_prime(x) && oracle::is_prime(x + 2);
    REQUIRE_EQ(store.twin_count(x), twins);
  }
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) CHECK_EQ(store.next_prime(ps[i]), ps[i + 1]);
  CHECK_THROWS_AS(store.next_prime(4999), CoverageError);
}

TEST_CASE("small segments and threads give the same table") {
  StoreConfig cfg;
  cfg.segment_size = 64;
  cfg.threads = 3;
  const auto a = PrimeStore::build(100000, cfg);
  const auto b = PrimeStore::build(100000);
  for (uint64_t x = 0; x <= 100000; x += 7) REQUIRE_EQ(a.pi(x), b.pi(x));
  CHECK_EQ(b.pi(100000), 9592);
}

TEST_CASE("word primality") {
  for (uint64_t x = 0; x < 3000; ++x) CHECK_EQ(is_prime_word(x), oracle::is_prime(x));
  CHECK(is_prime_word(18446744073709551557ULL));
  CHECK_FALSE(is_prime_word(18446744073709551555ULL));
  CHECK(is_prime_word(1000000007ULL));
  CHECK_FALSE(is_prime_word(3215031751ULL));  // strong pseudoprime to 2, 3, 5, 7
}

TEST_CASE("nth prime upper bound covers the prime") {
  const auto ps = oracle::primes_upto(50000);
  for (std::size_t i = 0; i < ps.size(); ++i) REQUIRE_GE(nth_prime_upper_bound(i + 1), ps[i]);
}
