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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sqrtgap/exact.hpp"

namespace sqrtgap {

/// r = a/b in lowest terms with 0 <= a <= b.
struct RationalTarget {
  long a = 0;
  long b = 1;

  static RationalTarget make(long a, long b);    // throws std::invalid_argument
  static RationalTarget parse(const std::string& s);  // "a/b" or "a"
  Rat value() const { return rat(a, b); }
  std::string str() const;
  bool operator==(const RationalTarget&) const = default;
};

/// Values N^2 + 2rN + c over N = step, 2 step, ... with c possibly negative.
struct QuadraticFamily {
  RationalTarget r;
  long c = 1;
  uint64_t step = 1;      // smallest N making 2rN an integer, or 1
  uint64_t avoid_mod = 0;  // skip N divisible by this when nonzero
  std::string label;

  std::optional<uint64_t> value(uint64_t N) const;  // empty if not a positive integer
};

/// The family N^2 + 2(a/b)N + sign * c. A prime c > 1 also filters out N
/// divisible by c.
QuadraticFamily accum_family(RationalTarget r, int sign, long c = 1);

struct AccumRecord {
  uint64_t N = 0;
  uint64_t p = 0;
  RootExpr mu;       // {sqrt p}
  RootExpr abs_err;  // |mu - r|
  Int mu_scaled;     // floor(mu * 10^5)
  std::string mu_decimal;
  std::string err_decimal;
  bool on_side = false;      // mu > r for c > 0, mu < r for c < 0
  bool in_envelope = false;  // r - r/sqrt p + c/(2 sqrt p) < mu < r + c/(2N)
  bool closer = true;        // abs_err below the previous record's
};

struct AccumScan {
  QuadraticFamily family;
  std::vector<AccumRecord> records;
  uint64_t side_violations = 0;
  uint64_t envelope_violations = 0;
  std::optional<uint64_t> first_not_closer;  // N of the first record breaking the approach
  uint64_t undecided = 0;
};

constexpr unsigned kMuDigits = 5;

AccumScan accum_scan(RationalTarget r, int sign, long c, uint64_t N_max,
                     std::size_t max_records = 0);

enum class SpecialKind { kHFixed, kNearHalfMinus, kNearHalfPlus, kTopFamily };

/// kHFixed scans N^2 + h; the others N^2 + N - 1, N^2 + N + 1 and
/// N^2 + 2N - 1.
AccumScan special_scan(SpecialKind kind, uint64_t N_max, long h = 1,
                       std::size_t max_records = 0);

AccumScan scan_family(const QuadraticFamily& f, uint64_t N_max, std::size_t max_records = 0);

struct Disjointness {
  bool disjoint = true;
  std::optional<uint64_t> value;
  uint64_t N = 0, M = 0;  // N for r, M for s
};

/// Compares the value sets of N^2 + 2rN + 1 and M^2 + 2sM + 1 over
/// admissible 1 <= N, M <= limit. Requires r != s.
Disjointness disjointness(RationalTarget r, RationalTarget s, uint64_t limit);

void write_accum_csv(std::ostream& os, const AccumScan& scan);

}  // namespace sqrtgap
