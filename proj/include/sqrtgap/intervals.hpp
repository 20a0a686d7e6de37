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
#include <vector>

#include "sqrtgap/primes.hpp"

namespace sqrtgap {

/// Primes strictly between N^2 and (N+1)^2.
struct SquareWindowReport {
  uint64_t N = 0;
  uint64_t count = 0;
  std::vector<uint64_t> primes;    // filled only when requested
  std::vector<uint64_t> h_values;  // p - N^2, same condition
  uint64_t min_h = 0;              // zero when count == 0
  uint64_t max_h = 0;
  uint64_t lower_half = 0;    // primes in (N^2, N^2 + N)
  uint64_t upper_half = 0;    // primes in (N^2 + N, (N+1)^2)
  uint64_t oppermann_lo = 0;  // primes in (N^2 - N, N^2)
  uint64_t oppermann_hi = 0;  // primes in (N^2, N^2 + N), equal to lower_half
  uint64_t pi_square = 0;     // pi(N^2)

  bool legendre = false;     // count >= 1
  bool two_primes = false;   // count >= 2
  bool oppermann = false;    // pi(N^2 - N) < pi(N^2) < pi(N^2 + N)
  bool cumulative = false;   // pi(N^2) >= 2(N - 1)
  bool h_parity = false;     // every odd prime has h of parity opposite to N
  // Half-window claims for even N >= 4; empty when the trigger is absent.
  std::optional<bool> half_lo;  // N^2 + 1 prime => two primes in (N^2, N^2 + N]
  std::optional<bool> half_hi;  // N^2 + 2N - 1 prime, N > 4 => two in (N^2 + N, N^2 + 2N]
};

/// Requires (N_hi + 1)^2 <= store.limit(); throws CoverageError otherwise.
std::vector<SquareWindowReport> square_report(const PrimeStore& store, uint64_t N_lo,
                                              uint64_t N_hi, bool keep_primes = false);

struct BrocardRow {
  uint64_t n = 0;
  uint64_t p = 0;
  uint64_t q = 0;
  uint64_t count = 0;      // pi(q^2) - pi(p^2)
  uint64_t threshold = 0;  // 2 (q - p)
  bool ok() const { return count >= threshold; }
};

std::vector<BrocardRow> brocard_report(const PrimeStore& store, uint64_t n_lo, uint64_t n_hi);

/// Largest n with p_{n+1}^2 <= x.
uint64_t brocard_index_bound(const PrimeStore& store, uint64_t x);

/// Subinterval layouts between n^k and (n+1)^k.
enum class PowerScheme {
  kEqual,    // pi(2^k) equal steps of ((n+1)^k - n^k) / pi(2^k)
  kCubic,    // n^3 + {0, 1, 2, 4, 6} n(n+1)/2
  kQuartic,  // n^4 + {0, 1/2, 1, 2, 3, 4} n^3, then (n+1)^4
};

struct PowerGapReport {
  unsigned k = 0;
  uint64_t n = 0;
  PowerScheme scheme = PowerScheme::kEqual;
  std::vector<uint64_t> lower_counts;  // primes in (b_j, b_{j+1}]
  uint64_t total = 0;                  // pi((n+1)^k) - pi(n^k)
  uint64_t bound = 0;                  // pi(2^k)
  bool total_ok() const { return total >= bound; }
  bool occupied() const;
};

struct PowerScan {
  std::vector<PowerGapReport> rows;
  bool budget_hit = false;  // n_hi was lowered to respect the budget
  uint64_t n_last = 0;      // last n actually scanned
};

constexpr uint64_t kDefaultPowerBudget = 100'000'000;

/// Scans n in [n_lo, n_hi] while (n+1)^k <= budget. The budget must not
/// exceed store.limit().
PowerScan power_report(const PrimeStore& store, unsigned k, uint64_t n_lo, uint64_t n_hi,
                       uint64_t budget = kDefaultPowerBudget,
                       PowerScheme scheme = PowerScheme::kEqual);

/// Integer subinterval boundaries floor(b_0) < ... <= floor(b_m) for one n.
std::vector<uint64_t> power_boundaries(unsigned k, uint64_t n, uint64_t pi_2k,
                                       PowerScheme scheme);

struct Pow2Row {
  unsigned k = 0;
  uint64_t pi = 0;                    // pi(2^k)
  uint64_t phi_c = 0;                 // odd non-primes m < 2^k, m = 1 included
  bool identity = false;              // pi = 2^(k-1) + 1 - phi_c
  std::optional<uint64_t> increment;  // pi(2^(k+1)) - pi(2^k), when in the table
  bool lower_ok = false;              // pi >= 2(k - 1)
};

/// Rows for k = 1..k_max. Requires 2^k_max <= store.limit().
std::vector<Pow2Row> pow2_ladder(const PrimeStore& store, unsigned k_max);

/// Primes between (2N)^2 and (2N + 1)^2 and which of their h values are prime.
struct EvenSquareBatch {
  uint64_t N = 0;
  std::vector<uint64_t> primes;
  std::vector<uint64_t> h_values;
  std::vector<uint64_t> prime_h;
  bool all_prime() const { return !h_values.empty() && prime_h.size() == h_values.size(); }
};

EvenSquareBatch even_square_batch(const PrimeStore& store, uint64_t N);

struct EvenSquareSurvey {
  std::vector<uint64_t> all_prime;  // N whose h values are all prime
  std::vector<uint64_t> no_prime;   // N with no prime h value
  uint64_t checked = 0;
};

EvenSquareSurvey even_square_survey(const PrimeStore& store, uint64_t N_lo, uint64_t N_hi);

/// Smallest prime q with q - floor(sqrt q)^2 = m, searching floor(sqrt q) <= N_bound.
std::optional<uint64_t> first_prime_with_h(uint64_t m, uint64_t N_bound);

/// m in [1, m_max] without such a prime below the search bound.
std::vector<uint64_t> missing_h_values(uint64_t m_max, uint64_t N_bound);

/// Whether some h_i, h_j <= 2N - 1 of primes N^2 + h and some r >= 0 give
/// 2N = (h_i - r) + (h_j + r) with both parts prime.
bool split_holds(const PrimeStore& store, uint64_t N);

/// N in [N_lo, N_hi] (N >= 2) for which split_holds is false.
std::vector<uint64_t> split_deniers(const PrimeStore& store, uint64_t N_lo, uint64_t N_hi);

void write_squares_csv(std::ostream& os, const std::vector<SquareWindowReport>& rows);
void write_powers_jsonl(std::ostream& os, const PowerScan& scan);

const char* to_string(PowerScheme s);

}  // namespace sqrtgap
