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
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sqrtgap/exact.hpp"
#include "sqrtgap/primes.hpp"

namespace sqrtgap {

/// One row of the twin ledger. A and B are fixed-point sums (frac_bits
/// fractional bits) of sqrt2 delta_i over non-twin i <= n and of
/// 2 - sqrt2 delta_i over twin i <= n.
struct AlphaLedgerRow {
  uint64_t n = 0;
  uint64_t p = 0;       // p_n
  uint64_t q = 0;       // p_{n+1}
  uint64_t j_n = 0;     // twins (p_i, p_i + 2) with i < n
  uint64_t j_next = 0;  // j_{n+1}
  unsigned frac_bits = 0;
  Int A, B;                  // mantissas
  Int A_err, B_err;          // error bounds in ulps
  Int residual;              // |sqrt(2q) - (2 + 2 j_{n+1} - (B - A))| in ulps
  Int residual_bound;        // ulps
  bool certified = false;    // residual <= residual_bound
  std::optional<bool> b_gt_a;  // empty when the error intervals overlap
  bool sandwich = false;       // sqrt(2n - 1) <= sqrt p_n <= (n + 1) sqrt2 / 2

  std::string A_decimal(unsigned digits = 12) const;
  std::string B_decimal(unsigned digits = 12) const;
  double residual_bound_value() const;  // display only
};

struct AlphaLedgerSummary {
  uint64_t rows = 0;
  unsigned frac_bits = 0;
  bool all_certified = true;
  std::optional<uint64_t> first_uncertified;
  Int max_bound_ulps;
  uint64_t b_gt_a_rows = 0;
  uint64_t b_le_a_rows = 0;
  uint64_t undecided_rows = 0;
  std::optional<uint64_t> last_b_le_a;
  std::optional<uint64_t> first_sandwich_violation;
};

using LedgerSink = std::function<void(const AlphaLedgerRow&)>;

/// Rows n = 1..n_hi. Requires p_{n_hi + 1} within the store and
/// frac_bits >= 64.
AlphaLedgerSummary alpha_ledger(const PrimeStore& store, uint64_t n_hi, unsigned frac_bits = 64,
                                const LedgerSink& sink = {});

/// Certified bounds [lo, hi] on n (ln n + ln ln n - 1) at the given MPFR
/// precision, as exact rationals. n >= 2.
std::pair<Rat, Rat> dusart_bounds(uint64_t n, unsigned bits = 128);

enum class Tri { kTrue, kFalse, kUnknown };

/// Per-index outcome of the open questions; kUnknown outside the domain.
struct JnRow {
  uint64_t n = 0;
  uint64_t j_n = 0;
  Tri q92 = Tri::kUnknown;       // sqrt(2 p_{n+1}) / 2 < j_{n+1}, n >= 5
  Tri dusart = Tri::kUnknown;    // n (ln n + ln ln n - 1) < 2 j_n^2, n >= 3
  Tri abstract = Tri::kUnknown;  // p_n < 2 j_n^2, n >= 6
};

struct QuestionResult {
  uint64_t checked = 0;
  uint64_t violations = 0;
  uint64_t undecided = 0;
  std::optional<uint64_t> first_violation;
};

struct JnReport {
  uint64_t n_hi = 0;
  // d_n / 2 < sqrt p_{n+1} delta_n < sqrt(2 p_{n+1}) / 2 for every n.
  QuestionResult prefix;
  // The three readings of the j_{n+1} question, n >= 5.
  QuestionResult gap_lt_2j;    // d_n < 2 j_{n+1}
  QuestionResult root_lt_j;    // sqrt p_{n+1} delta_n < j_{n+1}
  QuestionResult q92;          // sqrt(2 p_{n+1}) < 2 j_{n+1}
  QuestionResult dusart;       // n >= 3
  QuestionResult abstract;     // n >= 6
  std::vector<JnRow> rows;     // kept only when requested
};

JnReport jn_questions(const PrimeStore& store, uint64_t n_hi, bool keep_rows = false);

/// Twins (p, p + 2) and (p', p' + 2), p = p_{m1} >= 5, with equal floor sqrt.
struct BandPair {
  uint64_t m1 = 0, p1 = 0, m2 = 0, p2 = 0;
};

struct BandTwinReport {
  uint64_t x_max = 0;
  uint64_t consecutive_pairs = 0;  // same-band consecutive twin pairs
  uint64_t bands = 0;              // bands with at least two twins
  std::vector<BandPair> first;     // earliest consecutive pairs, capped
  std::vector<BandPair> violations;  // 31 p1 <= 25 p2 (first/last per band)
};

/// Twin pairs with p + 2 <= x_max.
BandTwinReport band_twin_scan(const PrimeStore& store, uint64_t x_max, std::size_t keep = 8);

void write_twins_csv(std::ostream& os, const PrimeStore& store, uint64_t n_hi,
                     unsigned frac_bits = 64);

const char* to_string(Tri t);

}  // namespace sqrtgap
