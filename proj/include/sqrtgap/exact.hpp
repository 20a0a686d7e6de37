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

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sqrtgap {

using Int = mpz_class;
using Rat = mpq_class;
using u128 = unsigned __int128;

uint64_t isqrt(uint64_t x);
uint64_t isqrt(u128 x);
Int isqrt(const Int& x);
bool is_square(const Int& x);

Int to_int(uint64_t v);
Int to_int(u128 v);
// Canonical num/den. Use these rather than the two-argument Rat constructor,
// which leaves the fraction unreduced.
Rat rat(long num, long den = 1);
Rat rat(const Int& num, const Int& den);

enum class Cmp { Less, Equal, Greater, Undecided };
const char* to_string(Cmp c);

/// Fractional-bit precisions tried in order before giving up.
struct PrecisionLadder {
  std::vector<unsigned> bits{64, 128, 256};
  static const PrecisionLadder& standard();
};

/// Certified fixed-point enclosure: the true value lies in
/// [mantissa, mantissa + error_ulps] * 2^-frac_bits.
struct FixedApprox {
  Int mantissa;
  unsigned frac_bits = 0;
  Int error_ulps;

  Int upper() const { return mantissa + error_ulps; }
};

FixedApprox sqrt_fixed(const Int& m, unsigned frac_bits);
FixedApprox add(const FixedApprox& a, const FixedApprox& b);
FixedApprox sub(const FixedApprox& a, const FixedApprox& b);
FixedApprox mul(const FixedApprox& a, const FixedApprox& b);

/// q0 + sum qi*sqrt(mi) with square-free radicands mi > 1, sorted and
/// merged, zero coefficients dropped. Equal values over the same basis have
/// identical representations.
class RootExpr {
 public:
  struct Term {
    Rat coef;
    Int radicand;
  };

  RootExpr() = default;
  RootExpr(const Rat& c) : constant_(c) {}  // NOLINT(implicit)
  RootExpr(long c) : constant_(c) {}        // NOLINT(implicit)

  // sqrt(m) for any m >= 0 below 2^64; square factors are extracted.
  static RootExpr sqrt(const Int& m);
  static RootExpr sqrt(uint64_t m) { return sqrt(to_int(m)); }
  // sqrt(m) where the caller guarantees m is square-free (e.g. a prime).
  static RootExpr sqrt_squarefree(const Int& m);
  static RootExpr sqrt_squarefree(uint64_t m) { return sqrt_squarefree(to_int(m)); }

  const Rat& constant() const { return constant_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_rational() const { return terms_.empty(); }
  std::size_t radicand_count() const { return terms_.size(); }

  RootExpr operator-() const;
  RootExpr& operator+=(const RootExpr& o);
  RootExpr& operator-=(const RootExpr& o);
  RootExpr& operator*=(const Rat& k);

  // Exact reciprocal; supported for at most two radicands.
  RootExpr inverse() const;

  bool operator==(const RootExpr& o) const;
  std::string str() const;

 private:
  void normalize();
  friend RootExpr operator*(const RootExpr& a, const RootExpr& b);

  Rat constant_;
  std::vector<Term> terms_;
};

RootExpr operator+(RootExpr a, const RootExpr& b);
RootExpr operator-(RootExpr a, const RootExpr& b);
RootExpr operator*(const RootExpr& a, const RootExpr& b);
RootExpr operator*(RootExpr a, const Rat& k);
RootExpr operator*(const Rat& k, RootExpr a);
RootExpr operator/(const RootExpr& a, const RootExpr& b);
RootExpr operator/(RootExpr a, const Rat& k);
inline RootExpr operator*(long k, RootExpr a) { return a * Rat(k); }
inline RootExpr operator*(RootExpr a, long k) { return a * Rat(k); }

/// Enclosure of e at the given precision; error_ulps is the width.
FixedApprox approx(const RootExpr& e, unsigned frac_bits);

/// True iff e == 0, decided by iterated squaring. At most two radicands.
bool algebraic_zero(const RootExpr& e);

Cmp sign_of(const RootExpr& e,
            const PrecisionLadder& ladder = PrecisionLadder::standard());
Cmp cmp_root(const RootExpr& e, const Rat& rhs,
             const PrecisionLadder& ladder = PrecisionLadder::standard());
Cmp cmp_root(const RootExpr& a, const RootExpr& b,
             const PrecisionLadder& ladder = PrecisionLadder::standard());

/// Exact floor. Single-radicand expressions use integer square roots only;
/// everything else goes through the enclosure ladder. nullopt = Undecided.
std::optional<Int> floor_root(const RootExpr& e,
                              const PrecisionLadder& ladder = PrecisionLadder::standard());
// The enclosure-ladder path alone, for cross-checking the fast path.
std::optional<Int> floor_root_approx(const RootExpr& e,
                                     const PrecisionLadder& ladder = PrecisionLadder::standard());

struct FracParts {
  Int floor;
  RootExpr frac;
};
std::optional<FracParts> frac_root(const RootExpr& e,
                                   const PrecisionLadder& ladder = PrecisionLadder::standard());

/// round(e * 10^digits), certified; nullopt = Undecided.
std::optional<Int> round_scaled(const RootExpr& e, unsigned digits,
                                const PrecisionLadder& ladder = PrecisionLadder::standard());

/// Presentation only: e truncated toward -inf to `digits` decimals.
std::string to_decimal(const RootExpr& e, unsigned digits = 6);
std::string scaled_to_decimal(const Int& scaled, unsigned digits);

}  // namespace sqrtgap
