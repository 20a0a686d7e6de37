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
#include <stdexcept>
#include <string>
#include <vector>

namespace sqrtgap {

/// Thrown when a requested sieve limit does not fit the memory budget.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when a query falls outside the range a store was built for.
class CoverageError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

struct StoreConfig {
  // Odd integers per sieve segment.
  uint64_t segment_size = uint64_t{1} << 20;
  uint64_t memory_budget = uint64_t{3} << 30;
  unsigned threads = 1;
};

/// Immutable table of primes in [2, limit].
///
/// Bit i of the sieve stands for the odd number 2i+1. A rank word per
/// 64-bit block makes pi() constant time; a second rank array counts
/// twin pairs so j_n can be read without a prefix scan.
class PrimeStore {
 public:
  static PrimeStore build(uint64_t limit, const StoreConfig& cfg = {});

  uint64_t limit() const { return limit_; }
  uint64_t segment_size() const { return segment_size_; }

  bool is_prime(uint64_t x) const;
  uint64_t pi(uint64_t x) const;
  uint64_t nth_prime(uint64_t n) const;

  // Smallest prime > x. Throws CoverageError if it lies beyond limit().
  uint64_t next_prime(uint64_t x) const;

  // #{p <= x : p and p + 2 both prime}. Requires x + 2 <= limit().
  uint64_t twin_count(uint64_t x) const;

  // pi at the end of every sieve segment.
  const std::vector<uint64_t>& segment_checkpoints() const {
    return segment_pi_;
  }

  std::size_t memory_bytes() const;

 private:
  PrimeStore() = default;
  bool odd_bit(uint64_t idx) const {
    return (bits_[idx >> 6] >> (idx & 63)) & 1U;
  }
  uint64_t twin_word(uint64_t w) const;

  uint64_t limit_ = 0;
  uint64_t segment_size_ = 0;
  std::vector<uint64_t> bits_;
  std::vector<uint64_t> rank_;       // odd primes strictly before word w
  std::vector<uint64_t> twin_rank_;  // twin starters strictly before word w
  std::vector<uint64_t> segment_pi_;
};

/// Deterministic Miller-Rabin over the full 64-bit range.
bool is_prime_word(uint64_t x);

/// An upper bound for p_n, used to size stores (valid for all n >= 1).
uint64_t nth_prime_upper_bound(uint64_t n);

}  // namespace sqrtgap
