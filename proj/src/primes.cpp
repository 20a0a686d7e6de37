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

#include "sqrtgap/primes.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <thread>

namespace sqrtgap {
namespace {

using u128 = unsigned __int128;

uint64_t isqrt_small(uint64_t x) {
  auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

// Odd primes up to bound via a plain sieve; seeds the segments.
std::vector<uint32_t> base_primes(uint64_t bound) {
  std::vector<uint32_t> out;
  if (bound < 3) return out;
  std::vector<uint8_t> comp(bound + 1, 0);
  for (uint64_t i = 3; i * i <= bound; i += 2)
    if (!comp[i])
      for (uint64_t j = i * i; j <= bound; j += 2 * i) comp[j] = 1;
  for (uint64_t i = 3; i <= bound; i += 2)
    if (!comp[i]) out.push_back(static_cast<uint32_t>(i));
  return out;
}

// Sieve odd indices [lo, hi) into bits (hi - lo is a multiple of 64 except
// possibly for the final segment).
void sieve_segment(uint64_t lo, uint64_t hi, const std::vector<uint32_t>& ps,
                   std::vector<uint8_t>& scratch, uint64_t* words) {
  const uint64_t len = hi - lo;
  scratch.assign(len, 1);
  for (uint32_t p : ps) {
    const uint64_t pp = uint64_t{p} * p;
    const uint64_t first_val = 2 * lo + 1;
    const uint64_t last_val = 2 * (hi - 1) + 1;
    if (pp > last_val) break;
    uint64_t start;
    if (pp >= first_val) {
      start = pp;
    } else {
      start = (first_val + p - 1) / p * p;
      if ((start & 1) == 0) start += p;
    }
    for (uint64_t v = (start - 1) / 2 - lo; v < len; v += p) scratch[v] = 0;
  }
  for (uint64_t i = 0; i < len; ++i) {
    if (scratch[i]) {
      const uint64_t idx = lo + i;
      words[idx >> 6] |= uint64_t{1} << (idx & 63);
    }
  }
}

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<u128>(a) * b % m);
}

uint64_t powmod(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

PrimeStore PrimeStore::build(uint64_t limit, const StoreConfig& cfg) {
  if (limit < 2) throw std::invalid_argument("prime store limit must be >= 2");
  if (cfg.segment_size == 0 || cfg.segment_size % 64 != 0)
    throw std::invalid_argument("segment size must be a positive multiple of 64");

  const uint64_t odd_count = (limit + 1) / 2;  // values 1, 3, ..., <= limit
  const uint64_t nwords = (odd_count + 63) / 64 + 1;
  const long double bytes = static_cast<long double>(nwords) * 8.0L * 3.0L;
  if (bytes > static_cast<long double>(cfg.memory_budget))
    throw CapacityError("sieve limit " + std::to_string(limit) +
                        " exceeds memory budget of " +
                        std::to_string(cfg.memory_budget) + " bytes");

  PrimeStore s;
  s.limit_ = limit;
  s.segment_size_ = cfg.segment_size;
  s.bits_.assign(nwords, 0);

  const auto ps = base_primes(isqrt_small(limit));
  const uint64_t nseg = (odd_count + cfg.segment_size - 1) / cfg.segment_size;

  // Segments write disjoint word ranges, so threads need no locking and
  // the result does not depend on scheduling.
  std::atomic<uint64_t> next{0};
  auto worker = [&]() {
    std::vector<uint8_t> scratch;
    for (uint64_t g = next++; g < nseg; g = next++) {
      const uint64_t lo = g * cfg.segment_size;
      const uint64_t hi = std::min(odd_count, lo + cfg.segment_size);
      sieve_segment(lo, hi, ps, scratch, s.bits_.data());
    }
  };
  const unsigned nthreads = std::max(1U, cfg.threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  s.bits_[0] &= ~uint64_t{1};  // 1 is not prime
  // Clear bits past the limit (value 2i+1 > limit).
  for (uint64_t idx = odd_count; idx < nwords * 64; ++idx)
    s.bits_[idx >> 6] &= ~(uint64_t{1} << (idx & 63));

  s.rank_.assign(nwords + 1, 0);
  s.twin_rank_.assign(nwords + 1, 0);
  for (uint64_t w = 0; w < nwords; ++w) {
    s.rank_[w + 1] = s.rank_[w] + std::popcount(s.bits_[w]);
    s.twin_rank_[w + 1] = s.twin_rank_[w] + std::popcount(s.twin_word(w));
  }

  s.segment_pi_.reserve(nseg);
  for (uint64_t g = 0; g < nseg; ++g) {
    const uint64_t hi_idx = std::min(odd_count, (g + 1) * cfg.segment_size) - 1;
    s.segment_pi_.push_back(s.pi(std::min(limit, 2 * hi_idx + 1)));
  }
  return s;
}

uint64_t PrimeStore::twin_word(uint64_t w) const {
  const uint64_t hi = (w + 1 < bits_.size()) ? bits_[w + 1] : 0;
  return bits_[w] & ((bits_[w] >> 1) | (hi << 63));
}

bool PrimeStore::is_prime(uint64_t x) const {
  if (x > limit_) throw CoverageError("is_prime query beyond store limit");
  if (x < 2) return false;
  if (x == 2) return true;
  if ((x & 1) == 0) return false;
  return odd_bit(x / 2);
}

uint64_t PrimeStore::pi(uint64_t x) const {
  if (x > limit_) throw CoverageError("pi query beyond store limit");
  if (x < 2) return 0;
  const uint64_t idx = (x - 1) / 2;  // last odd value <= x is 2*idx+1
  const uint64_t w = idx >> 6;
  const unsigned b = idx & 63;
  const uint64_t mask = (b == 63) ? ~uint64_t{0} : ((uint64_t{1} << (b + 1)) - 1);
  return 1 + rank_[w] + std::popcount(bits_[w] & mask);
}

uint64_t PrimeStore::nth_prime(uint64_t n) const {
  if (n == 0) throw std::invalid_argument("prime index is 1-based");
  if (n == 1) return 2;
  const uint64_t target = n - 1;  // rank among odd primes
  if (target > rank_.back())
    throw CoverageError("nth_prime index beyond store coverage");
  // Last word w with rank_[w] < target.
  auto it = std::lower_bound(rank_.begin(), rank_.end(), target);
  const uint64_t w = static_cast<uint64_t>(it - rank_.begin()) - 1;
  uint64_t word = bits_[w];
  for (uint64_t k = rank_[w] + 1; k < target; ++k) word &= word - 1;
  const uint64_t idx = w * 64 + std::countr_zero(word);
  return 2 * idx + 1;
}

uint64_t PrimeStore::next_prime(uint64_t x) const {
  if (x < 2) return 2;
  uint64_t idx = (x + 1) / 2;  // index of the first odd value > x
  uint64_t w = idx >> 6;
  if (w >= bits_.size()) throw CoverageError("next_prime beyond store limit");
  uint64_t word = bits_[w] & (~uint64_t{0} << (idx & 63));
  while (word == 0) {
    if (++w >= bits_.size()) throw CoverageError("next_prime beyond store limit");
    word = bits_[w];
  }
  return 2 * (w * 64 + std::countr_zero(word)) + 1;
}

uint64_t PrimeStore::twin_count(uint64_t x) const {
  if (x > limit_ || limit_ - x < 2)
    throw CoverageError("twin_count needs x + 2 within store limit");
  if (x < 3) return 0;
  const uint64_t idx = (x - 1) / 2;
  const uint64_t w = idx >> 6;
  const unsigned b = idx & 63;
  const uint64_t mask = (b == 63) ? ~uint64_t{0} : ((uint64_t{1} << (b + 1)) - 1);
  return twin_rank_[w] + std::popcount(twin_word(w) & mask);
}

std::size_t PrimeStore::memory_bytes() const {
  return (bits_.size() + rank_.size() + twin_rank_.size() + segment_pi_.size()) *
         sizeof(uint64_t);
}

bool is_prime_word(uint64_t x) {
  if (x < 2) return false;
  static constexpr uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (uint64_t p : small) {
    if (x == p) return true;
    if (x % p == 0) return false;
  }
  if (x < 41 * 41) return true;
  uint64_t d = x - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (uint64_t a : small) {
    uint64_t y = powmod(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      y = mulmod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t nth_prime_upper_bound(uint64_t n) {
  if (n < 6) return 13;
  const double ln = std::log(static_cast<double>(n));
  // p_n < n (ln n + ln ln n) for n >= 6; pad for float slop.
  return static_cast<uint64_t>(static_cast<double>(n) * (ln + std::log(ln))) + 64;
}

}  // namespace sqrtgap
