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

// Brute-force references that share no code with the library.

#pragma once

#include <cstdint>
#include <vector>

namespace oracle {

inline bool is_prime(uint64_t x) {
  if (x < 2) return false;
  for (uint64_t f = 2; f * f <= x; ++f)
    if (x % f == 0) return false;
  return true;
}

// primes[0] = 2, so p_n = primes[n - 1].
inline std::vector<uint64_t> primes_upto(uint64_t limit) {
  std::vector<uint64_t> out;
  for (uint64_t x = 2; x <= limit; ++x)
    if (is_prime(x)) out.push_back(x);
  return out;
}

inline uint64_t isqrt(uint64_t x) {
  uint64_t r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

inline uint64_t pi(const std::vector<uint64_t>& ps, uint64_t x) {
  uint64_t c = 0;
  for (auto p : ps) c += p <= x;
  return c;
}

}  // namespace oracle
