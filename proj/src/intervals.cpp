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

#include "sqrtgap/intervals.hpp"

#include <algorithm>
#include <json.hpp>
#include <limits>
#include <stdexcept>
#include <string>

#include "sqrtgap/exact.hpp"

namespace sqrtgap {
namespace {

// Primes in the half-open range (a, b].
uint64_t count_between(const PrimeStore& store, uint64_t a, uint64_t b) {
  return b > a ? store.pi(b) - store.pi(a) : 0;
}

// x^k, or nullopt once it leaves 64 bits.
std::optional<uint64_t> ipow(uint64_t x, unsigned k) {
  u128 acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= x;
    if (acc > std::numeric_limits<uint64_t>::max()) return std::nullopt;
  }
  return static_cast<uint64_t>(acc);
}

}  // namespace

std::vector<SquareWindowReport> square_report(const PrimeStore& store, uint64_t N_lo,
                                              uint64_t N_hi, bool keep_primes) {
  if (N_lo == 0) N_lo = 1;
  std::vector<SquareWindowReport> out;
  if (N_hi < N_lo) return out;
  if (N_hi >= (uint64_t{1} << 31) || (N_hi + 1) * (N_hi + 1) > store.limit())
    throw CoverageError("square_report needs (N_hi + 1)^2 within the store");
  out.reserve(N_hi - N_lo + 1);
  for (uint64_t N = N_lo; N <= N_hi; ++N) {
    SquareWindowReport r;
    r.N = N;
    const uint64_t lo = N * N, mid = lo + N, hi = (N + 1) * (N + 1);
    r.pi_square = store.pi(lo);
    r.lower_half = count_between(store, lo, mid);  // N^2 + N is never prime
    r.upper_half = count_between(store, mid, hi - 1);
    r.count = r.lower_half + r.upper_half;
    r.oppermann_lo = count_between(store, lo - N, lo - 1);
    r.oppermann_hi = r.lower_half;
    r.legendre = r.count >= 1;
    r.two_primes = r.count >= 2;
    r.oppermann = r.oppermann_lo > 0 && r.oppermann_hi > 0;
    r.cumulative = r.pi_square >= 2 * (N - 1);
    r.h_parity = true;
    bool first = true;
    for (uint64_t p = store.next_prime(lo); p < hi; p = store.next_prime(p)) {
      const uint64_t h = p - lo;
      if (first) r.min_h = h;
      first = false;
      r.max_h = h;
      if (p % 2 == 1 && h % 2 == N % 2) r.h_parity = false;
      if (keep_primes) {
        r.primes.push_back(p);
        r.h_values.push_back(h);
      }
    }
    if (N >= 4 && N % 2 == 0) {
      if (store.is_prime(lo + 1)) r.half_lo = count_between(store, lo, mid) >= 2;
      if (N > 4 && store.is_prime(hi - 2)) r.half_hi = count_between(store, mid, hi - 1) >= 2;
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<BrocardRow> brocard_report(const PrimeStore& store, uint64_t n_lo, uint64_t n_hi) {
  std::vector<BrocardRow> out;
  if (n_lo == 0) n_lo = 1;
  if (n_hi < n_lo) return out;
  uint64_t p = store.nth_prime(n_lo);
  for (uint64_t n = n_lo; n <= n_hi; ++n) {
    const uint64_t q = store.next_prime(p);
    if (q >= (uint64_t{1} << 32) || q * q > store.limit())
      throw CoverageError("brocard_report needs p_{n+1}^2 within the store");
    out.push_back({n, p, q, count_between(store, p * p, q * q), 2 * (q - p)});
    p = q;
  }
  return out;
}

uint64_t brocard_index_bound(const PrimeStore& store, uint64_t x) {
  const uint64_t r = isqrt(x);
  return r < 3 ? 0 : store.pi(r) - 1;
}

bool PowerGapReport::occupied() const {
  return std::all_of(lower_counts.begin(), lower_counts.end(),
                     [](uint64_t c) { return c >= 1; });
}

std::vector<uint64_t> power_boundaries(unsigned k, uint64_t n, uint64_t pi_2k,
                                       PowerScheme scheme) {
  const Int x = to_int(n);
  Int xk, next;
  mpz_pow_ui(xk.get_mpz_t(), x.get_mpz_t(), k);
  mpz_pow_ui(next.get_mpz_t(), Int(x + 1).get_mpz_t(), k);
  std::vector<Rat> offsets;
  switch (scheme) {
    case PowerScheme::kEqual: {
      const Int span = next - xk;
      for (uint64_t j = 0; j <= pi_2k; ++j) offsets.emplace_back(rat(span * to_int(j), to_int(pi_2k)));
      break;
    }
    case PowerScheme::kCubic: {
      if (k != 3) throw std::invalid_argument("cubic scheme needs k = 3");
      const Rat f = rat(x * (x + 1), Int(2));
      for (long m : {0, 1, 2, 4, 6}) offsets.push_back(f * m);
      break;
    }
    case PowerScheme::kQuartic: {
      if (k != 4) throw std::invalid_argument("quartic scheme needs k = 4");
      const Int x3 = x * x * x;
      offsets.emplace_back(0);
      offsets.emplace_back(rat(x3, Int(2)));
      for (long m : {1, 2, 3, 4}) offsets.emplace_back(x3 * m);
      offsets.emplace_back(next - xk);
      break;
    }
  }
  std::vector<uint64_t> out;
  out.reserve(offsets.size());
  for (auto& o : offsets) {
    o.canonicalize();
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), o.get_num_mpz_t(), o.get_den_mpz_t());
    out.push_back(static_cast<uint64_t>(Int(xk + fl).get_ui()));
  }
  return out;
}

PowerScan power_report(const PrimeStore& store, unsigned k, uint64_t n_lo, uint64_t n_hi,
                       uint64_t budget, PowerScheme scheme) {
  if (k < 2) throw std::invalid_argument("power_report needs k >= 2");
  if (budget > store.limit()) throw CoverageError("power budget exceeds the store");
  PowerScan scan;
  if (n_lo == 0) n_lo = 1;
  const auto two_k = ipow(2, k);
  if (!two_k || *two_k > budget) {
    scan.budget_hit = n_hi >= n_lo;
    return scan;
  }
  const uint64_t pi_2k = store.pi(*two_k);
  for (uint64_t n = n_lo; n <= n_hi; ++n) {
    const auto top = ipow(n + 1, k);
    if (!top || *top > budget) {
      scan.budget_hit = true;
      break;
    }
    PowerGapReport r;
    r.k = k;
    r.n = n;
    r.scheme = scheme;
    r.bound = pi_2k;
    r.total = count_between(store, *ipow(n, k), *top);
    const auto b = power_boundaries(k, n, pi_2k, scheme);
    for (std::size_t j = 0; j + 1 < b.size(); ++j)
      r.lower_counts.push_back(count_between(store, b[j], b[j + 1]));
    scan.rows.push_back(std::move(r));
    scan.n_last = n;
  }
  return scan;
}

std::vector<Pow2Row> pow2_ladder(const PrimeStore& store, unsigned k_max) {
  if (k_max >= 63 || (uint64_t{1} << k_max) > store.limit())
    throw CoverageError("pow2_ladder needs 2^k_max within the store");
  std::vector<Pow2Row> rows;
  uint64_t phi = 0;  // running count of odd non-primes below 2^k
  uint64_t m = 1;
  for (unsigned k = 1; k <= k_max; ++k) {
    const uint64_t top = uint64_t{1} << k;
    for (; m < top; m += 2)
      if (!store.is_prime(m)) ++phi;
    Pow2Row r;
    r.k = k;
    r.pi = store.pi(top);
    r.phi_c = phi;
    r.identity = r.pi + r.phi_c == (top >> 1) + 1;
    r.lower_ok = r.pi >= 2 * (uint64_t{k} - 1);
    rows.push_back(r);
  }
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) rows[i].increment = rows[i + 1].pi - rows[i].pi;
  return rows;
}

EvenSquareBatch even_square_batch(const PrimeStore& store, uint64_t N) {
  if (N == 0) throw std::invalid_argument("even_square_batch needs N >= 1");
  const auto r = square_report(store, 2 * N, 2 * N, true);
  EvenSquareBatch b;
  b.N = N;
  b.primes = r[0].primes;
  b.h_values = r[0].h_values;
  for (uint64_t h : b.h_values)
    if (is_prime_word(h)) b.prime_h.push_back(h);
  return b;
}

EvenSquareSurvey even_square_survey(const PrimeStore& store, uint64_t N_lo, uint64_t N_hi) {
  EvenSquareSurvey s;
  for (uint64_t N = std::max<uint64_t>(N_lo, 1); N <= N_hi; ++N) {
    const auto b = even_square_batch(store, N);
    ++s.checked;
    if (b.all_prime()) s.all_prime.push_back(N);
    if (b.prime_h.empty()) s.no_prime.push_back(N);
  }
  return s;
}

std::optional<uint64_t> first_prime_with_h(uint64_t m, uint64_t N_bound) {
  if (m == 0) return std::nullopt;
  // h <= 2N forces N >= m / 2.
  for (uint64_t N = std::max<uint64_t>(1, (m + 1) / 2); N <= N_bound; ++N) {
    const uint64_t q = N * N + m;
    if (q < (N + 1) * (N + 1) && is_prime_word(q)) return q;
  }
  return std::nullopt;
}

std::vector<uint64_t> missing_h_values(uint64_t m_max, uint64_t N_bound) {
  std::vector<uint64_t> out;
  for (uint64_t m = 1; m <= m_max; ++m)
    if (!first_prime_with_h(m, N_bound)) out.push_back(m);
  return out;
}

bool split_holds(const PrimeStore& store, uint64_t N) {
  const uint64_t base = N * N;
  if ((N + 1) * (N + 1) > store.limit()) throw CoverageError("split_holds beyond the store");
  std::vector<bool> in_h(2 * N, false);
  for (uint64_t h = 1; h < 2 * N; ++h) in_h[h] = store.is_prime(base + h);
  for (uint64_t hi = N; hi < 2 * N; ++hi) {
    const uint64_t hj = 2 * N - hi;
    if (!in_h[hi] || !in_h[hj]) continue;
    // Need a prime a = hi - r with 2N - a prime; hi is the larger value.
    for (uint64_t a = 2; a <= hi; ++a)
      if (store.is_prime(a) && store.is_prime(2 * N - a)) return true;
  }
  return false;
}

std::vector<uint64_t> split_deniers(const PrimeStore& store, uint64_t N_lo, uint64_t N_hi) {
  std::vector<uint64_t> out;
  for (uint64_t N = std::max<uint64_t>(N_lo, 2); N <= N_hi; ++N)
    if (!split_holds(store, N)) out.push_back(N);
  return out;
}

void write_squares_csv(std::ostream& os, const std::vector<SquareWindowReport>& rows) {
  os << "N,count,oppermann_lo,oppermann_hi,min_h,max_h\n";
  for (const auto& r : rows)
    os << r.N << ',' << r.count << ',' << r.oppermann_lo << ',' << r.oppermann_hi << ','
       << r.min_h << ',' << r.max_h << '\n';
}

void write_powers_jsonl(std::ostream& os, const PowerScan& scan) {
  for (const auto& r : scan.rows) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["n"] = r.n;
    j["scheme"] = to_string(r.scheme);
    j["lower_counts"] = r.lower_counts;
    j["total"] = r.total;
    j["bound"] = r.bound;
    j["total_ok"] = r.total_ok();
    j["occupied"] = r.occupied();
    j["budget_hit"] = false;
    os << j.dump() << '\n';
  }
  if (scan.budget_hit) {
    nlohmann::ordered_json j;
    j["budget_hit"] = true;
    j["n_last"] = scan.n_last;
    os << j.dump() << '\n';
  }
}

const char* to_string(PowerScheme s) {
  switch (s) {
    case PowerScheme::kEqual: return "equal";
    case PowerScheme::kCubic: return "cubic";
    case PowerScheme::kQuartic: return "quartic";
  }
  return "?";
}

}  // namespace sqrtgap
