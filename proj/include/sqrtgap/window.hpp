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
#include <stdexcept>
#include <string>
#include <vector>

#include "sqrtgap/exact.hpp"
#include "sqrtgap/primes.hpp"

namespace sqrtgap {

/// Integers derived from one pair of consecutive primes p = p_n, q = p_{n+1}.
struct GapWindow {
  uint64_t n = 0;
  uint64_t p = 0;
  uint64_t q = 0;
  uint64_t d = 0;
  uint64_t N = 0;   // floor(sqrt p)
  uint64_t Nq = 0;  // floor(sqrt q)
  uint64_t h = 0;   // p - N^2
  uint64_t hq = 0;  // q - Nq^2
  uint64_t s = 0;   // floor(sqrt(p q))
  uint64_t k = 0;   // q = k d + r, 1 <= r < d; zero for n = 1
  uint64_t r = 0;
  uint64_t tN = 0;  // floor(sqrt(N^2 p))
  uint64_t j = 0;   // twin pairs (p_i, p_i + 2) with i < n

  bool same_part() const { return Nq == N; }
  bool straddle() const { return Nq == N + 1; }
  bool operator==(const GapWindow&) const = default;
};

/// Which indices j_n counts: i < n (default) or i <= n.
enum class JConvention { kBelowIndex, kThroughIndex };

class CheckpointMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resume token for a window stream: j at index n of a run over a range
/// identified by range_hash.
struct JCheckpoint {
  uint64_t n = 0;
  uint64_t j = 0;
  uint64_t range_hash = 0;

  std::string token() const;
  static JCheckpoint parse(const std::string& token);
  bool operator==(const JCheckpoint&) const = default;
};

uint64_t range_hash(uint64_t limit, uint64_t n_lo, uint64_t n_hi);

GapWindow window_from_primes(uint64_t n, uint64_t p, uint64_t q, uint64_t j);

/// Random access; j comes from the store's twin index (absolute origin).
GapWindow make_window(const PrimeStore& store, uint64_t n);

/// j_n read from the store under either convention.
uint64_t j_index(const PrimeStore& store, uint64_t n,
                 JConvention conv = JConvention::kBelowIndex);

/// Ordered stream over [n_lo, n_hi].
class WindowStream {
 public:
  WindowStream(const PrimeStore& store, uint64_t n_lo, uint64_t n_hi,
               std::optional<JCheckpoint> checkpoint = std::nullopt,
               std::optional<uint64_t> expected_hash = std::nullopt);

  std::optional<GapWindow> next();
  JCheckpoint checkpoint(uint64_t hash) const;

 private:
  const PrimeStore* store_;
  uint64_t n_;
  uint64_t n_hi_;
  uint64_t p_;
  uint64_t j_;
  uint64_t last_n_ = 0;
  uint64_t last_j_ = 0;
};

std::vector<GapWindow> windows(const PrimeStore& store, uint64_t n_lo, uint64_t n_hi,
                               std::optional<JCheckpoint> checkpoint = std::nullopt);

/// Named exact views over one window.
struct RootViews {
  RootExpr sqrt_p, sqrt_q, sqrt_pq;
  RootExpr delta;        // sqrt q - sqrt p
  RootExpr D;            // sqrt q + sqrt p
  RootExpr mu, mu_q;     // fractional parts of sqrt p, sqrt q
  RootExpr sqrtq_delta;  // q - sqrt(pq)
  RootExpr sqrtp_delta;  // sqrt(pq) - p
  RootExpr mu_sqrtp;     // p - N sqrt p
  RootExpr muq_sqrtq;    // q - Nq sqrt q
  RootExpr ratio_frac;   // (sqrt(pq) - p) / p
};

RootViews root_views(const GapWindow& w);

/// Indices m in [n_lo, n_hi] with d_m = 2.
std::vector<uint64_t> twin_pairs(const PrimeStore& store, uint64_t n_lo, uint64_t n_hi);

void write_windows_csv(std::ostream& os, const std::vector<GapWindow>& ws);

}  // namespace sqrtgap
