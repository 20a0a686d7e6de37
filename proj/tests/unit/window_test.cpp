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

#include <sstream>

#include "oracle.hpp"
#include "sqrtgap/window.hpp"

using namespace sqrtgap;

TEST_CASE("window fields from first principles") {
  const auto ps = oracle::primes_upto(30000);
  const auto store = PrimeStore::build(40000);
  uint64_t j = 0;
  for (uint64_t n = 1; n + 1 <= ps.size(); ++n) {
    const uint64_t p = ps[n - 1], q = ps[n];
    const auto w = make_window(store, n);
    REQUIRE_EQ(w.p, p);
    REQUIRE_EQ(w.q, q);
    CHECK_EQ(w.d, q - p);
    CHECK_EQ(w.N, oracle::isqrt(p));
    CHECK_EQ(w.h, p - w.N * w.N);
    CHECK_EQ(w.hq, q - w.Nq * w.Nq);
    CHECK_LE(w.s * w.s, p * q);
    CHECK_GT((w.s + 1) * (w.s + 1), p * q);
    if (n > 1) {
      CHECK_EQ(w.k * w.d + w.r, q);
      CHECK_GE(w.r, 1);
      CHECK_LT(w.r, w.d);
    }
    CHECK_EQ(w.j, j);
    j += q - p == 2;
  }
}

TEST_CASE("stream equals random access and resumes from a checkpoint") {
  const auto store = PrimeStore::build(200000);
  const auto all = windows(store, 1, 5000);
  for (uint64_t n : {1ULL, 2ULL, 777ULL, 5000ULL}) CHECK(all[n - 1] == make_window(store, n));

  const uint64_t h = range_hash(store.limit(), 1, 5000);
  WindowStream s(store, 1, 5000);
  for (int i = 0; i < 2400; ++i) s.next();
  const auto cp = s.checkpoint(h);
  CHECK(JCheckpoint::parse(cp.token()) == cp);
  const auto rest = windows(store, cp.n + 1, 5000, cp);
  REQUIRE_EQ(rest.size(), 5000 - cp.n);
  CHECK(rest.front() == all[cp.n]);
  CHECK(rest.back() == all.back());

  JCheckpoint bad = cp;
  bad.j += 1;
  CHECK_THROWS_AS(windows(store, cp.n + 1, 5000, bad), CheckpointMismatch);
}

TEST_CASE("twin indices and csv dump") {
  const auto store = PrimeStore::build(1000);
  CHECK_EQ(twin_pairs(store, 1, 10), std::vector<uint64_t>{2, 3, 5, 7, 10});
  CHECK_EQ(j_index(store, 5), 2);
  CHECK_EQ(j_index(store, 5, JConvention::kThroughIndex), 3);
  std::ostringstream os;
  write_windows_csv(os, windows(store, 1, 2));
  CHECK_EQ(os.str(), "n,p,q,d,N,h,hq,s,k,r,j\n1,2,3,1,1,1,2,2,0,0,0\n2,3,5,2,1,2,1,3,2,1,0\n");
}
