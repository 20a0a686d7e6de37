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
#include <random>

#include "oracle.hpp"
#include "sqrtgap/exact.hpp"

using namespace sqrtgap;

TEST_CASE("integer square roots") {
  for (uint64_t x = 0; x < 5000; ++x) REQUIRE_EQ(isqrt(x), oracle::isqrt(x));
  CHECK_EQ(isqrt(~uint64_t{0}), 4294967295ULL);
  const u128 big = (u128{1} << 100) + 5;
  CHECK_EQ(isqrt(big), uint64_t{1} << 50);
  CHECK(is_square(Int("152415787532388367501905199875019052100")));
}

TEST_CASE("radicals normalize and compare") {
  CHECK(RootExpr::sqrt(uint64_t{8}) == 2 * RootExpr::sqrt(uint64_t{2}));
  CHECK(RootExpr::sqrt(uint64_t{49}).is_rational());
  CHECK(algebraic_zero(RootExpr::sqrt(uint64_t{12}) - 2 * RootExpr::sqrt(uint64_t{3})));
  const auto r2 = RootExpr::sqrt(uint64_t{2});
  CHECK_EQ(cmp_root(r2, rat(14142, 10000)), Cmp::Greater);
  CHECK_EQ(cmp_root(r2, rat(14143, 10000)), Cmp::Less);
  // sqrt 11 - sqrt 7 against 7/10
  CHECK_EQ(cmp_root(RootExpr::sqrt(uint64_t{11}) - RootExpr::sqrt(uint64_t{7}), rat(7, 10)),
           Cmp::Less);
  CHECK_EQ(sign_of(RootExpr(0)), Cmp::Equal);
  const auto e = RootExpr::sqrt(uint64_t{3}) - RootExpr::sqrt(uint64_t{2});
  CHECK(algebraic_zero(e * e.inverse() - RootExpr(1)));
}

TEST_CASE("fixed point enclosures contain the value") {
  for (uint64_t m : {2ULL, 3ULL, 10ULL, 99991ULL, 1000000007ULL}) {
    const auto f = sqrt_fixed(to_int(m), 80);
    Int lo = f.mantissa * f.mantissa, hi = f.upper() * f.upper();
    const Int target = to_int(m) << 160;
    CHECK(lo <= target);
    CHECK(target <= hi);
  }
}

TEST_CASE("floor_root fast path matches the enclosure path") {
  std::mt19937_64 rng(20260);
  for (int i = 0; i < 2000; ++i) {
    const uint64_t a = rng() % 1000000 + 2, b = rng() % 1000000 + 2;
    const long k = static_cast<long>(rng() % 200) - 100;
    const RootExpr e = RootExpr::sqrt(a) - RootExpr::sqrt(b) + RootExpr(rat(k, 7));
    const auto f1 = floor_root(e), f2 = floor_root_approx(e);
    REQUIRE(f1);
    REQUIRE(f2);
    CHECK_EQ(*f1, *f2);
    const double v = std::sqrt(double(a)) - std::sqrt(double(b)) + double(k) / 7;
    if (std::abs(v - std::round(v)) > 1e-6) CHECK_EQ(f1->get_si(), long(std::floor(v)));
  }
}

TEST_CASE("decimal rendering") {
  CHECK_EQ(to_decimal(RootExpr::sqrt(uint64_t{2}), 6), "1.414213");
  CHECK_EQ(scaled_to_decimal(Int(40312), 5), "0.40312");
  const auto r = round_scaled(RootExpr::sqrt(uint64_t{5}) - RootExpr(2), 5);
  REQUIRE(r);
  CHECK_EQ(*r, 23607);
}

TEST_CASE("rat reduces to lowest terms") {
  const Rat a = rat(345, 1000), b = rat(Int(14), Int(-7));
  CHECK_EQ(a.get_num(), 69);
  CHECK_EQ(a.get_den(), 200);
  CHECK_EQ(b.get_num(), -2);
  CHECK_EQ(b.get_den(), 1);
  CHECK_EQ(cmp_root(RootExpr(rat(2, 4)), rat(1, 2)), Cmp::Equal);
}
