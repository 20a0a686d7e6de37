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

#include "sqrtgap/accum.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "sqrtgap/primes.hpp"

namespace sqrtgap {
namespace {

constexpr unsigned kErrDigits = 8;

std::string certified_decimal(const RootExpr& e, unsigned digits, Int* scaled_out, bool& ok) {
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const auto f = floor_root(e * Rat(scale));
  if (!f) {
    ok = false;
    return to_decimal(e, digits);
  }
  if (scaled_out) *scaled_out = *f;
  return scaled_to_decimal(*f, digits);
}

}  // namespace

RationalTarget RationalTarget::make(long a, long b) {
  if (b < 1 || a < 0 || a > b) throw std::invalid_argument("target needs 0 <= a <= b, b >= 1");
  if (std::gcd(a, b) != 1 && !(a == 0 && b == 1))
    throw std::invalid_argument("target must be in lowest terms");
  return {a, b};
}

RationalTarget RationalTarget::parse(const std::string& s) {
  const auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const long a = std::stol(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return make(a, 1);
    }
    const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    const long a = std::stol(num, &used);
    if (used != num.size()) throw std::invalid_argument(s);
    const long b = std::stol(den, &used);
    if (used != den.size()) throw std::invalid_argument(s);
    return make(a, b);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad rational target '" + s + "'");
  }
}

std::string RationalTarget::str() const {
  return std::to_string(a) + "/" + std::to_string(b);
}

std::optional<uint64_t> QuadraticFamily::value(uint64_t N) const {
  // N^2 + (2a/b) N + c with b | 2aN guaranteed by step.
  const Int v = to_int(N) * to_int(N) + (2 * Int(r.a) * to_int(N)) / Int(r.b) + Int(c);
  if (v <= 0 || v > Int(std::numeric_limits<uint64_t>::max())) return std::nullopt;
  return v.get_ui();
}

QuadraticFamily accum_family(RationalTarget r, int sign, long c) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be + or -");
  if (c < 1) throw std::invalid_argument("c must be a positive integer");
  QuadraticFamily f;
  f.r = r;
  f.c = sign * c;
  f.step = static_cast<uint64_t>(r.b / std::gcd(r.b, 2 * r.a));
  if (c > 1) f.avoid_mod = static_cast<uint64_t>(c);
  f.label = "N^2 + 2(" + r.str() + ")N " + (sign > 0 ? "+ " : "- ") + std::to_string(c);
  return f;
}

AccumScan scan_family(const QuadraticFamily& f, uint64_t N_max, std::size_t max_records) {
  AccumScan scan;
  scan.family = f;
  const Rat r = f.r.value();
  std::optional<RootExpr> prev_err;
  for (uint64_t N = f.step; N <= N_max; N += f.step) {
    if (f.avoid_mod && N % f.avoid_mod == 0) continue;
    const auto v = f.value(N);
    if (!v || !is_prime_word(*v)) continue;
    AccumRecord rec;
    rec.N = N;
    rec.p = *v;
    const uint64_t M = isqrt(*v);
    const RootExpr root = RootExpr::sqrt_squarefree(*v);
    rec.mu = root - RootExpr(Rat(to_int(M)));
    const Cmp side = cmp_root(rec.mu, r);
    rec.abs_err = side == Cmp::Less ? RootExpr(r) - rec.mu : rec.mu - RootExpr(r);
    bool ok = true;
    rec.mu_decimal = certified_decimal(rec.mu, kMuDigits, &rec.mu_scaled, ok);
    rec.err_decimal = certified_decimal(rec.abs_err, kErrDigits, nullptr, ok);
    rec.on_side = f.c > 0 ? side == Cmp::Greater : side == Cmp::Less;
    // Both bounds assume floor(sqrt p) = N.
    if (M == N) {
      const RootExpr inv_root = root / Rat(to_int(*v));
      const RootExpr lower = RootExpr(r) + (rat(f.c, 2) - r) * inv_root;
      const Rat upper = r + rat(f.c, 2 * static_cast<long>(N));
      const Cmp lo = cmp_root(lower, rec.mu), hi = cmp_root(rec.mu, upper);
      if (lo == Cmp::Undecided || hi == Cmp::Undecided) ok = false;
      rec.in_envelope = lo == Cmp::Less && hi == Cmp::Less;
    }
    if (prev_err) {
      const Cmp c = cmp_root(rec.abs_err, *prev_err);
      if (c == Cmp::Undecided) ok = false;
      rec.closer = c == Cmp::Less;
    }
    if (side == Cmp::Undecided || !ok) ++scan.undecided;
    if (!rec.on_side) ++scan.side_violations;
    if (!rec.in_envelope) ++scan.envelope_violations;
    if (!rec.closer && !scan.first_not_closer) scan.first_not_closer = N;
    prev_err = rec.abs_err;
    scan.records.push_back(std::move(rec));
    if (max_records && scan.records.size() >= max_records) break;
  }
  return scan;
}

AccumScan accum_scan(RationalTarget r, int sign, long c, uint64_t N_max,
                     std::size_t max_records) {
  return scan_family(accum_family(r, sign, c), N_max, max_records);
}

AccumScan special_scan(SpecialKind kind, uint64_t N_max, long h, std::size_t max_records) {
  QuadraticFamily f;
  switch (kind) {
    case SpecialKind::kHFixed:
      if (h < 1) throw std::invalid_argument("h_fixed needs h >= 1");
      f.r = RationalTarget::make(0, 1);
      f.c = h;
      f.label = "N^2 + " + std::to_string(h);
      break;
    case SpecialKind::kNearHalfMinus:
      f.r = RationalTarget::make(1, 2);
      f.c = -1;
      f.label = "N^2 + N - 1";
      break;
    case SpecialKind::kNearHalfPlus:
      f.r = RationalTarget::make(1, 2);
      f.c = 1;
      f.label = "N^2 + N + 1";
      break;
    case SpecialKind::kTopFamily:
      f.r = RationalTarget::make(1, 1);
      f.c = -1;
      f.label = "N^2 + 2N - 1";
      break;
  }
  return scan_family(f, N_max, max_records);
}

Disjointness disjointness(RationalTarget r, RationalTarget s, uint64_t limit) {
  if (r == s) throw std::invalid_argument("disjointness needs r != s");
  const QuadraticFamily fr = accum_family(r, 1), fs = accum_family(s, 1);
  std::unordered_map<uint64_t, uint64_t> seen;
  for (uint64_t N = fr.step; N <= limit; N += fr.step)
    if (auto v = fr.value(N)) seen.emplace(*v, N);
  Disjointness out;
  for (uint64_t M = fs.step; M <= limit; M += fs.step) {
    const auto v = fs.value(M);
    if (!v) continue;
    if (auto it = seen.find(*v); it != seen.end()) {
      out.disjoint = false;
      out.value = *v;
      out.N = it->second;
      out.M = M;
      break;
    }
  }
  return out;
}

void write_accum_csv(std::ostream& os, const AccumScan& scan) {
  os << "N,p,mu,abs_err\n";
  for (const auto& r : scan.records)
    os << r.N << ',' << r.p << ',' << r.mu_decimal << ',' << r.err_decimal << '\n';
}

}  // namespace sqrtgap
