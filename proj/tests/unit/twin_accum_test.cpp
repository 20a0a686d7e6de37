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

#include <cmath>
#include <sstream>

#include "oracle.hpp"
#include "sqrtgap/accum.hpp"
#include "sqrtgap/twin.hpp"

using namespace sqrtgap;

TEST_CASE("twin ledger is certified and B exceeds A") {
  const auto store = PrimeStore::build(200000);
  const auto s = alpha_ledger(store, 5000);
  CHECK_EQ(s.rows, 5000);
  CHECK(s.all_certified);
  CHECK_EQ(s.undecided_rows, 0);
  CHECK_FALSE(s.first_sandwich_violation);
}

TEST_CASE("ledger sums match a floating reference") {
  const auto ps = oracle::primes_upto(2000);
  const auto store = PrimeStore::build(5000);
  double A = 0, B = 0;
  uint64_t n = 0;
  alpha_ledger(store, 250, 64, [&](const AlphaLedgerRow& r) {
    ++n;
    const double delta = std::sqrt(double(ps[n])) - std::sqrt(double(ps[n - 1]));
    if (ps[n] - ps[n - 1] == 2) B += 2 - std::sqrt(2.0) * delta;
    else A += std::sqrt(2.0) * delta;
    CHECK(std::stod(r.A_decimal()) == doctest::Approx(A).epsilon(1e-9));
    CHECK(std::stod(r.B_decimal()) == doctest::Approx(B).epsilon(1e-9));
  });
  CHECK_EQ(n, 250);
}

TEST_CASE("dusart bracket and questions") {
  const auto [lo, hi] = dusart_bounds(1000);
  const double v = 1000 * (std::log(1000.0) + std::log(std::log(1000.0)) - 1);
  CHECK(lo.get_d() <= v + 1e-9);
  CHECK(v - 1e-9 <= hi.get_d());
  CHECK(lo < hi);
  const auto store = PrimeStore::build(200000);
  const auto jn = jn_questions(store, 10000);
  CHECK_EQ(jn.q92.violations, 0);
  CHECK_EQ(jn.dusart.undecided, 0);
  CHECK_EQ(jn.abstract.violations, 0);
}

TEST_CASE("band twins") {
  const auto store = PrimeStore::build(400000);
  const auto r = band_twin_scan(store, 400000, 8);
  REQUIRE_GE(r.first.size(), 4);
  CHECK_EQ(r.first[0].p1, 101);
  CHECK_EQ(r.first[0].p2, 107);
  CHECK_EQ(r.first[1].p1, 179);
  CHECK_EQ(r.first[2].p1, 227);  // 227 and 239 share floor sqrt 15
  CHECK_EQ(r.first[3].p1, 269);
  CHECK_EQ(r.first[3].p2, 281);
  CHECK(r.violations.empty());
}

TEST_CASE("accumulation scan against doubles") {
  const auto scan = accum_scan(RationalTarget::parse("1/3"), 1, 1, 2000);
  REQUIRE_GE(scan.records.size(), 2);
  CHECK_EQ(scan.records[0].N, 6);
  CHECK_EQ(scan.records[0].p, 41);
  CHECK_EQ(scan.records[0].mu_decimal, "0.40312");
  for (const auto& r : scan.records) {
    CHECK(oracle::is_prime(r.p));
    const double mu = std::sqrt(double(r.p)) - std::floor(std::sqrt(double(r.p)));
    CHECK(std::stod(r.mu_decimal) == doctest::Approx(mu).epsilon(2e-5));
    CHECK(r.on_side);
  }
  CHECK_EQ(scan.side_violations, 0);
  std::ostringstream os;
  write_accum_csv(os, scan);
  CHECK_EQ(os.str().rfind("N,p,mu,abs_err\n6,41,0.40312,", 0), 0);
}

TEST_CASE("targets parse strictly") {
  CHECK_EQ(RationalTarget::parse("9/22").b, 22);
  CHECK_THROWS_AS(RationalTarget::parse("2/4"), std::invalid_argument);
  CHECK_THROWS_AS(RationalTarget::parse("3/2"), std::invalid_argument);
  CHECK_THROWS_AS(RationalTarget::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(accum_family(RationalTarget::make(1, 3), 0), std::invalid_argument);
  CHECK(disjointness(RationalTarget::make(1, 3), RationalTarget::make(9, 22), 20000).disjoint);
}
