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

#include "sqrtgap/window.hpp"

#include <sstream>

namespace sqrtgap {

std::string JCheckpoint::token() const {
  std::ostringstream os;
  os << n << ":" << j << ":" << std::hex << range_hash;
  return os.str();
}

JCheckpoint JCheckpoint::parse(const std::string& token) {
  JCheckpoint cp;
  char c1 = 0, c2 = 0;
  std::istringstream is(token);
  is >> cp.n >> c1 >> cp.j >> c2 >> std::hex >> cp.range_hash;
  if (!is || c1 != ':' || c2 != ':') throw CheckpointMismatch("malformed checkpoint token: " + token);
  return cp;
}

uint64_t range_hash(uint64_t limit, uint64_t n_lo, uint64_t n_hi) {
  // FNV-1a over the three words.
  uint64_t h = 1469598103934665603ULL;
  for (uint64_t v : {limit, n_lo, n_hi}) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xFF;
      h *= 1099511628211ULL;
    }
  }
  return h;
}

GapWindow window_from_primes(uint64_t n, uint64_t p, uint64_t q, uint64_t j) {
  GapWindow w;
  w.n = n;
  w.p = p;
  w.q = q;
  w.d = q - p;
  w.N = isqrt(p);
  w.Nq = isqrt(q);
  w.h = p - w.N * w.N;
  w.hq = q - w.Nq * w.Nq;
  w.s = isqrt(static_cast<u128>(p) * q);
  if (n >= 2) {
    w.k = q / w.d;
    w.r = q % w.d;
  }
  w.tN = isqrt(static_cast<u128>(w.N) * w.N * p);
  w.j = j;
  return w;
}

uint64_t j_index(const PrimeStore& store, uint64_t n, JConvention conv) {
  const uint64_t m = conv == JConvention::kBelowIndex ? n : n + 1;
  if (m <= 1) return 0;
  return store.twin_count(store.nth_prime(m) - 2);
}

GapWindow make_window(const PrimeStore& store, uint64_t n) {
  const uint64_t p = store.nth_prime(n);
  return window_from_primes(n, p, store.next_prime(p), j_index(store, n));
}

WindowStream::WindowStream(const PrimeStore& store, uint64_t n_lo, uint64_t n_hi,
                           std::optional<JCheckpoint> checkpoint,
                           std::optional<uint64_t> expected_hash)
    : store_(&store), n_(n_lo), n_hi_(n_hi) {
  if (n_lo == 0) throw std::invalid_argument("prime index is 1-based");
  if (n_lo > n_hi) {
    p_ = j_ = 0;
    return;
  }
  // Coverage: p_{n_hi + 1} must be inside the store.
  store.next_prime(store.nth_prime(n_hi));
  p_ = store.nth_prime(n_lo);
  if (checkpoint) {
    if (expected_hash && checkpoint->range_hash != *expected_hash)
      throw CheckpointMismatch("checkpoint belongs to a different range");
    if (checkpoint->n + 1 != n_lo)
      throw CheckpointMismatch("checkpoint index does not precede the stream start");
    if (checkpoint->n == 0) {
      if (checkpoint->j != 0) throw CheckpointMismatch("j at origin must be 0");
      j_ = 0;
    } else {
      if (j_index(store, checkpoint->n) != checkpoint->j)
        throw CheckpointMismatch("checkpoint j disagrees with the prime store");
      const uint64_t pc = store.nth_prime(checkpoint->n);
      j_ = checkpoint->j + (p_ - pc == 2 ? 1 : 0);
    }
  } else {
    j_ = j_index(store, n_lo);
  }
}

std::optional<GapWindow> WindowStream::next() {
  if (n_ > n_hi_) return std::nullopt;
  const uint64_t q = store_->next_prime(p_);
  GapWindow w = window_from_primes(n_, p_, q, j_);
  last_n_ = n_;
  last_j_ = j_;
  if (w.d == 2) ++j_;
  p_ = q;
  ++n_;
  return w;
}

JCheckpoint WindowStream::checkpoint(uint64_t hash) const { return {last_n_, last_j_, hash}; }

std::vector<GapWindow> windows(const PrimeStore& store, uint64_t n_lo, uint64_t n_hi,
                               std::optional<JCheckpoint> checkpoint) {
  std::vector<GapWindow> out;
  WindowStream ws(store, n_lo, n_hi, checkpoint);
  while (auto w = ws.next()) out.push_back(*w);
  return out;
}

RootViews root_views(const GapWindow& w) {
  RootViews v;
  v.sqrt_p = RootExpr::sqrt_squarefree(w.p);
  v.sqrt_q = RootExpr::sqrt_squarefree(w.q);
  v.sqrt_pq = RootExpr::sqrt_squarefree(to_int(static_cast<u128>(w.p) * w.q));
  v.delta = v.sqrt_q - v.sqrt_p;
  v.D = v.sqrt_q + v.sqrt_p;
  v.mu = v.sqrt_p - RootExpr(Rat(to_int(w.N)));
  v.mu_q = v.sqrt_q - RootExpr(Rat(to_int(w.Nq)));
  const RootExpr P(Rat(to_int(w.p)));
  const RootExpr Q(Rat(to_int(w.q)));
  v.sqrtq_delta = Q - v.sqrt_pq;
  v.sqrtp_delta = v.sqrt_pq - P;
  v.mu_sqrtp = P - v.sqrt_p * Rat(to_int(w.N));
  v.muq_sqrtq = Q - v.sqrt_q * Rat(to_int(w.Nq));
  v.ratio_frac = v.sqrtp_delta / Rat(to_int(w.p));
  return v;
}

std::vector<uint64_t> twin_pairs(const PrimeStore& store, uint64_t n_lo, uint64_t n_hi) {
  std::vector<uint64_t> out;
  WindowStream ws(store, n_lo, n_hi);
  while (auto w = ws.next())
    if (w->d == 2) out.push_back(w->n);
  return out;
}

void write_windows_csv(std::ostream& os, const std::vector<GapWindow>& ws) {
  os << "n,p,q,d,N,h,hq,s,k,r,j\n";
  for (const auto& w : ws)
    os << w.n << ',' << w.p << ',' << w.q << ',' << w.d << ',' << w.N << ',' << w.h << ','
       << w.hq << ',' << w.s << ',' << w.k << ',' << w.r << ',' << w.j << '\n';
}

}  // namespace sqrtgap
