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

#include "sqrtgap/twin.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "sqrtgap/window.hpp"

namespace sqrtgap {
namespace {

Int pow2(unsigned bits) {
  Int r = 1;
  r <<= bits;
  return r;
}

std::string fixed_decimal(const Int& mantissa, unsigned bits, unsigned digits) {
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  Int q;
  const Int num = mantissa * scale;
  mpz_fdiv_q_2exp(q.get_mpz_t(), num.get_mpz_t(), bits);
  return scaled_to_decimal(q, digits);
}

// RAII wrapper for one MPFR variable.
class Mpfr {
 public:
  explicit Mpfr(unsigned bits) { mpfr_init2(v_, bits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

  Rat to_rat() {
    Rat r;
    mpfr_get_q(r.get_mpq_t(), v_);
    return r;
  }

 private:
  mpfr_t v_;
};

void tally(QuestionResult& r, Tri t, uint64_t n) {
  ++r.checked;
  if (t == Tri::kUnknown) {
    ++r.undecided;
  } else if (t == Tri::kFalse) {
    ++r.violations;
    if (!r.first_violation) r.first_violation = n;
  }
}

Tri tri(Cmp c, Cmp want) {
  if (c == Cmp::Undecided) return Tri::kUnknown;
  return c == want ? Tri::kTrue : Tri::kFalse;
}

Tri dusart_holds(uint64_t n, uint64_t j) {
  const Int rhs = 2 * to_int(j) * to_int(j);
  for (unsigned bits : {128U, 512U}) {
    const auto [lo, hi] = dusart_bounds(n, bits);
    if (hi < rhs) return Tri::kTrue;
    if (lo >= rhs) return Tri::kFalse;
  }
  return Tri::kUnknown;
}

}  // namespace

std::string AlphaLedgerRow::A_decimal(unsigned digits) const {
  return fixed_decimal(A, frac_bits, digits);
}

std::string AlphaLedgerRow::B_decimal(unsigned digits) const {
  return fixed_decimal(B, frac_bits, digits);
}

double AlphaLedgerRow::residual_bound_value() const {
  return std::ldexp(residual_bound.get_d(), -static_cast<int>(frac_bits));
}

AlphaLedgerSummary alpha_ledger(const PrimeStore& store, uint64_t n_hi, unsigned frac_bits,
                                const LedgerSink& sink) {
  if (frac_bits < 64) throw std::invalid_argument("alpha_ledger needs frac_bits >= 64");
  AlphaLedgerSummary sum;
  sum.frac_bits = frac_bits;
  if (n_hi == 0) return sum;
  const Int one = pow2(frac_bits);

  AlphaLedgerRow row;
  row.frac_bits = frac_bits;
  FixedApprox s_p = sqrt_fixed(Int(4), frac_bits);  // sqrt(2 p_1)
  WindowStream ws(store, 1, n_hi);
  while (auto w = ws.next()) {
    const FixedApprox s_q = sqrt_fixed(2 * to_int(w->q), frac_bits);
    // Each sqrt lies in [m, m + 1) ulps, so their difference is off by
    // less than one ulp.
    const Int term = s_q.mantissa - s_p.mantissa;
    const Int err = std::max(s_q.error_ulps, s_p.error_ulps);
    if (w->d == 2) {
      row.B += 2 * one - term;
      row.B_err += err;
    } else {
      row.A += term;
      row.A_err += err;
    }
    row.n = w->n;
    row.p = w->p;
    row.q = w->q;
    row.j_n = w->j;
    row.j_next = w->j + (w->d == 2 ? 1 : 0);
    const Int rhs = one * (2 + 2 * to_int(row.j_next)) - (row.B - row.A);
    row.residual = abs(s_q.mantissa - rhs);
    row.residual_bound = s_q.error_ulps + row.A_err + row.B_err;
    row.certified = row.residual <= row.residual_bound;
    const Int gap = row.B - row.A, slack = row.A_err + row.B_err;
    if (gap > slack)
      row.b_gt_a = true;
    else if (-gap >= slack)
      row.b_gt_a = false;
    else
      row.b_gt_a.reset();
    const u128 pn = w->p, nn = w->n;
    row.sandwich = 2 * nn - 1 <= pn && 2 * pn <= (nn + 1) * (nn + 1);

    ++sum.rows;
    if (!row.certified && sum.all_certified) {
      sum.all_certified = false;
      sum.first_uncertified = row.n;
    }
    if (row.residual_bound > sum.max_bound_ulps) sum.max_bound_ulps = row.residual_bound;
    if (!row.b_gt_a) {
      ++sum.undecided_rows;
    } else if (*row.b_gt_a) {
      ++sum.b_gt_a_rows;
    } else {
      ++sum.b_le_a_rows;
      sum.last_b_le_a = row.n;
    }
    if (!row.sandwich && !sum.first_sandwich_violation) sum.first_sandwich_violation = row.n;
    if (sink) sink(row);
    s_p = s_q;
  }
  return sum;
}

std::pair<Rat, Rat> dusart_bounds(uint64_t n, unsigned bits) {
  if (n < 2) throw std::domain_error("dusart_bounds needs n >= 2");
  Mpfr x(64), ln_lo(bits), ln_hi(bits), ll_lo(bits), ll_hi(bits);
  mpfr_set_ui(x.get(), n, MPFR_RNDN);  // exact at 64 bits
  mpfr_log(ln_lo.get(), x.get(), MPFR_RNDD);
  mpfr_log(ln_hi.get(), x.get(), MPFR_RNDU);
  mpfr_log(ll_lo.get(), ln_lo.get(), MPFR_RNDD);
  mpfr_log(ll_hi.get(), ln_hi.get(), MPFR_RNDU);
  mpfr_add(ll_lo.get(), ll_lo.get(), ln_lo.get(), MPFR_RNDD);
  mpfr_add(ll_hi.get(), ll_hi.get(), ln_hi.get(), MPFR_RNDU);
  mpfr_sub_ui(ll_lo.get(), ll_lo.get(), 1, MPFR_RNDD);
  mpfr_sub_ui(ll_hi.get(), ll_hi.get(), 1, MPFR_RNDU);
  mpfr_mul_ui(ll_lo.get(), ll_lo.get(), n, MPFR_RNDD);
  mpfr_mul_ui(ll_hi.get(), ll_hi.get(), n, MPFR_RNDU);
  return {ll_lo.to_rat(), ll_hi.to_rat()};
}

JnReport jn_questions(const PrimeStore& store, uint64_t n_hi, bool keep_rows) {
  JnReport rep;
  rep.n_hi = n_hi;
  if (n_hi == 0) return rep;
  WindowStream ws(store, 1, n_hi);
  while (auto w = ws.next()) {
    const uint64_t n = w->n;
    const uint64_t j_next = w->j + (w->d == 2 ? 1 : 0);
    const RootExpr sq = RootExpr(Rat(to_int(w->q))) - RootExpr::sqrt(to_int(w->p) * to_int(w->q));
    const RootExpr half_root = RootExpr::sqrt(2 * to_int(w->q)) / Rat(2);
    const Cmp lo = cmp_root(sq, rat(to_int(w->d), Int(2)));
    const Cmp hi = cmp_root(sq, half_root);
    Tri prefix = tri(lo, Cmp::Greater);
    if (prefix == Tri::kTrue) prefix = tri(hi, Cmp::Less);
    tally(rep.prefix, prefix, n);

    JnRow row;
    row.n = n;
    row.j_n = w->j;
    if (n >= 5) {
      tally(rep.gap_lt_2j, w->d < 2 * j_next ? Tri::kTrue : Tri::kFalse, n);
      tally(rep.root_lt_j, tri(cmp_root(sq, Rat(to_int(j_next))), Cmp::Less), n);
      const u128 jj = j_next;
      row.q92 = u128{w->q} < 2 * jj * jj ? Tri::kTrue : Tri::kFalse;
      tally(rep.q92, row.q92, n);
    }
    if (n >= 3) {
      row.dusart = dusart_holds(n, w->j);
      tally(rep.dusart, row.dusart, n);
    }
    if (n >= 6) {
      const u128 j = w->j;
      row.abstract = u128{w->p} < 2 * j * j ? Tri::kTrue : Tri::kFalse;
      tally(rep.abstract, row.abstract, n);
    }
    if (keep_rows) rep.rows.push_back(row);
  }
  return rep;
}

BandTwinReport band_twin_scan(const PrimeStore& store, uint64_t x_max, std::size_t keep) {
  if (x_max > store.limit()) throw CoverageError("band_twin_scan beyond the store");
  BandTwinReport rep;
  rep.x_max = x_max;
  struct Twin {
    uint64_t m, p;
  };
  std::optional<Twin> first, last;
  uint64_t band = 0;
  bool counted = false;
  uint64_t m = 3;
  const uint64_t pi_max = store.pi(x_max);
  auto step = [&](uint64_t p) { return store.pi(p) == pi_max ? x_max : store.next_prime(p); };
  for (uint64_t p = 5; p + 2 <= x_max; p = step(p), ++m) {
    if (!store.is_prime(p + 2)) continue;
    const uint64_t N = isqrt(p);
    if (N != band) {
      band = N;
      first = last = Twin{m, p};
      counted = false;
      continue;
    }
    ++rep.consecutive_pairs;
    if (!counted) ++rep.bands;
    counted = true;
    if (rep.first.size() < keep) rep.first.push_back({last->m, last->p, m, p});
    if (u128{31} * first->p <= u128{25} * p) rep.violations.push_back({first->m, first->p, m, p});
    last = Twin{m, p};
  }
  return rep;
}

void write_twins_csv(std::ostream& os, const PrimeStore& store, uint64_t n_hi,
                     unsigned frac_bits) {
  const JnReport q = jn_questions(store, n_hi, true);
  os << "n,j_n,A_n,B_n,identity_residual_bound,q92_holds,dusart_holds,abstract_holds\n";
  char bound[32];
  alpha_ledger(store, n_hi, frac_bits, [&](const AlphaLedgerRow& r) {
    const JnRow& jr = q.rows[r.n - 1];
    std::snprintf(bound, sizeof bound, "%.3e", r.residual_bound_value());
    os << r.n << ',' << r.j_n << ',' << r.A_decimal() << ',' << r.B_decimal() << ',' << bound
       << ',' << to_string(jr.q92) << ',' << to_string(jr.dusart) << ','
       << to_string(jr.abstract) << '\n';
  });
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::kTrue: return "true";
    case Tri::kFalse: return "false";
    case Tri::kUnknown: return "na";
  }
  return "na";
}

}  // namespace sqrtgap
