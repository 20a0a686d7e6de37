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

// Gaps against the offsets h, h_q: extremal gaps on either side of a square,
// and bounds when both primes share floor sqrt.

#include "checkers/support.hpp"

namespace sqrtgap::detail {
namespace {

CheckerSpec spec(std::string id, Kind kind, std::string claim, std::string domain, Fn fn) {
  CheckerSpec s;
  s.id = std::move(id);
  s.kind = kind;
  s.claim = std::move(claim);
  s.domain = std::move(domain);
  s.make = stateless(std::move(fn));
  return s;
}

CheckerSpec with_exceptions(CheckerSpec s, std::vector<uint64_t> e) {
  s.kind = Kind::ExceptionSet;
  s.expected_exceptions = std::move(e);
  return s;
}

RootExpr S(int64_t v) { return RootExpr(Rat(Int(static_cast<long>(v)))); }

// Primes in (a, b]; falls back to trial by Miller-Rabin past the sieve.
uint64_t primes_between(const PrimeStore& store, uint64_t a, uint64_t b) {
  if (b <= store.limit()) return store.pi(b) - store.pi(a);
  uint64_t c = 0;
  for (uint64_t x = a + 1; x <= b; ++x) c += is_prime_word(x) ? 1 : 0;
  return c;
}

bool even_same(const GapWindow& w) { return w.same_part() && is_even(w.N); }
bool odd_same(const GapWindow& w) { return w.same_part() && !is_even(w.N); }

}  // namespace

void register_extremal(std::vector<CheckerSpec>& out) {
  out.push_back(spec(
      "eq-61", Kind::Universal,
      "2 sqrt p delta = d - delta^2; same part: delta = (h_q - h)/(2 sqrt p) - delta^2/"
      "(2 sqrt p); straddle: delta = 1 - (h - h_q - 1)/(2 sqrt p) - (2mu + delta^2)/(2 sqrt p)",
      "n >= 1", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        const auto& v = nb.cur.views();
        const RootExpr d2 = v.delta * v.delta;
        const RootExpr inv = (2 * v.sqrt_p).inverse();
        Clauses c;
        c.require(ctx.dec.eq(2 * v.sqrt_p * v.delta, I(w.d) - d2), "2 sqrt p delta = d - delta^2");
        c.require(ctx.dec.eq(I(w.d), v.delta * (2 * v.sqrt_p + v.delta)), "d = delta(2 sqrt p + delta)");
        if (w.same_part()) {
          c.require(ctx.dec.eq(v.delta, (S(int64_t(w.hq) - int64_t(w.h)) - d2) * inv),
                    "same-part form");
        } else {
          const RootExpr rhs = Q(1) - S(int64_t(w.h) - int64_t(w.hq) - 1) * inv -
                               (2 * v.mu + d2) * inv;
          c.require(ctx.dec.eq(v.delta, rhs), "straddle form");
        }
        return c.done();
      }));

  out.push_back(spec(
      "dnh-forms", Kind::Universal,
      "d = h_q - h (same part) or 2N + 1 + h_q - h (straddle); d < h_q in the first case, "
      "d > h_q in the second; d = h <=> 2h = h_q or 2h = 2N + 1 + h_q",
      "n >= 1", [](const EvalContext&, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        Clauses c;
        if (w.same_part()) {
          c.require(w.d + w.h == w.hq, "d = h_q - h");
          c.require(w.d < w.hq, "d < h_q");
        } else {
          c.require(w.d + w.h == 2 * w.N + 1 + w.hq, "d = 2N + 1 + h_q - h");
          c.require(w.d > w.hq, "d > h_q");
        }
        c.require(w.d != w.hq, "d != h_q");
        c.iff(w.d == w.h, 2 * w.h == w.hq || 2 * w.h == 2 * w.N + 1 + w.hq, "d = h criterion");
        return c.done();
      }));

  out.push_back(spec("survey-dh", Kind::Survey,
                     "collect n with d = h; hard: 2h = h_q => 2mu > mu_q", "n >= 1",
                     [](const EvalContext& ctx, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       Clauses c;
                       if (2 * w.h == w.hq) {
                         const auto& v = nb.cur.views();
                         c.require_hard(ctx.dec.gt(2 * v.mu, v.mu_q), "2h = h_q => 2mu > mu_q");
                       }
                       if (!c.ok()) return c.done();
                       if (w.d == w.h) return holds("d = h = " + std::to_string(w.d));
                       return fails({});
                     }));

  out.push_back(spec(
      "eq-64", Kind::Universal,
      "straddle: d >= 2 + h_q (N >= 2 even), d >= 3 + h_q (N >= 3 odd), d >= 2 (N = 1); "
      "2N - (h - 2) <= d <= 2N",
      "straddle", [](const EvalContext&, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (!w.straddle()) return out_of_domain();
        Clauses c;
        if (w.N == 1)
          c.require(w.d >= 2, "d >= 2");
        else if (is_even(w.N))
          c.require(w.d >= 2 + w.hq, "d >= 2 + h_q");
        else
          c.require(w.d >= 3 + w.hq, "d >= 3 + h_q");
        c.require(w.d + w.h >= 2 * w.N + 2, "2N - (h - 2) <= d");
        c.require(w.d <= 2 * w.N, "d <= 2N");
        return c.done();
      }));

  out.push_back(spec("max-gap-61", Kind::Universal,
                     "d <= 2 floor sqrt p; d = 2 floor sqrt p only on straddle windows",
                     "n >= 1", [](const EvalContext&, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       Clauses c;
                       c.require(w.d <= 2 * w.N, "d <= 2N");
                       if (w.d == 2 * w.N) c.require(w.straddle(), "d = 2N => straddle");
                       return c.done();
                     }));

  out.push_back(with_exceptions(
      spec("max-gap-tail", Kind::ExceptionSet, "straddle, n > 2: d <= 2N - 2 and h >= 4",
           "n > 2, straddle",
           [](const EvalContext&, const Neighborhood& nb) {
             const GapWindow& w = *nb.cur;
             if (w.n <= 2 || !w.straddle()) return out_of_domain();
             Clauses c;
             c.require(w.d + 2 <= 2 * w.N, "d <= 2N - 2");
             c.require(w.h >= 4, "h >= 4");
             return c.done();
           }),
      {4}));

  out.push_back(spec("cor-62", Kind::Universal, "straddle: h >= h_q + 1", "n >= 2, straddle",
                     [](const EvalContext&, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       if (w.n < 2 || !w.straddle()) return out_of_domain();
                       Clauses c;
                       c.require(w.h >= w.hq + 1, "h >= h_q + 1");
                       return c.done();
                     }));

  out.push_back(with_exceptions(
      spec("ext-63", Kind::ExceptionSet,
           "straddle: h != h_q + 1 (equality exactly for N = 1, 2); hard: h = h_q + 1 <=> d = 2N",
           "straddle",
           [](const EvalContext&, const Neighborhood& nb) {
             const GapWindow& w = *nb.cur;
             if (!w.straddle()) return out_of_domain();
             const bool tight = w.h == w.hq + 1;
             Clauses c;
             c.require_hard(tight == (w.d == 2 * w.N), "h = h_q + 1 <=> d = 2N");
             c.require(!tight, "h != h_q + 1");
             return c.done();
           }),
      {2, 4}));

  out.push_back(with_exceptions(
      spec("ext-64", Kind::ExceptionSet,
           "d != 2 floor sqrt p except n = 2, 4; hard: d = 2N <=> (h = N + 1 and h_q = N)",
           "n >= 1",
           [](const EvalContext&, const Neighborhood& nb) {
             const GapWindow& w = *nb.cur;
             const bool max = w.d == 2 * w.N;
             Clauses c;
             c.require_hard(max == (w.h == w.N + 1 && w.hq == w.N), "d = 2N <=> h = N+1, h_q = N");
             c.require(!max, "d != 2N");
             return c.done();
           }),
      {2, 4}));

  out.push_back(spec(
      "straddle-65", Kind::Universal,
      "straddle, N >= 2: h_q <= N < sqrt p < N + 1 <= h; (N + 1/2)^2 < p, q < (N + 3/2)^2",
      "straddle, N >= 2", [](const EvalContext&, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (!w.straddle() || w.N < 2) return out_of_domain();
        Clauses c;
        c.require(w.hq <= w.N, "h_q <= N");
        c.require(w.h >= w.N + 1, "h >= N + 1");
        c.require(mul(4, w.p) > mul(2 * w.N + 1, 2 * w.N + 1), "p > (N + 1/2)^2");
        c.require(mul(4, w.q) < mul(2 * w.N + 3, 2 * w.N + 3), "q < (N + 3/2)^2");
        return c.done();
      }));

  out.push_back(spec("straddle-66", Kind::Universal, "straddle, N >= 2: mu > 1/2 > mu_q",
                     "straddle, N >= 2", [](const EvalContext& ctx, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       if (!w.straddle() || w.N < 2) return out_of_domain();
                       const auto& v = nb.cur.views();
                       Clauses c;
                       c.require(ctx.dec.gt(v.mu, Q(1, 2)), "mu > 1/2");
                       c.require(ctx.dec.lt(v.mu_q, Q(1, 2)), "mu_q < 1/2");
                       return c.done();
                     }));

  out.push_back(spec(
      "cor-67", Kind::Universal,
      "straddle: 2 + h_q <= d <= N + h_q < sqrt p + h_q; mu > 3/4 => d <= N/2 + h_q",
      "n >= 4, straddle", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 4 || !w.straddle()) return out_of_domain();
        const auto& v = nb.cur.views();
        Clauses c;
        c.require(2 + w.hq <= w.d, "2 + h_q <= d");
        c.require(w.d <= w.N + w.hq, "d <= N + h_q");
        c.require(ctx.dec.lt(I(w.N + w.hq), v.sqrt_p + I(w.hq)), "N + h_q < sqrt p + h_q");
        if (ctx.dec.gt(v.mu, Q(3, 4))) c.require(2 * w.d <= w.N + 2 * w.hq, "d <= N/2 + h_q");
        return c.done();
      }));

  {
    auto s = spec("survey-dsq-p", Kind::Survey,
                  "collect n with d^2 > q; hard: each hit has delta > 1/2", "n >= 1",
                  [](const EvalContext& ctx, const Neighborhood& nb) {
                    const GapWindow& w = *nb.cur;
                    if (mul(w.d, w.d) <= w.q) return fails({});
                    Clauses c;
                    c.require_hard(ctx.dec.gt(nb.cur.views().delta, Q(1, 2)), "delta > 1/2");
                    if (!c.ok()) return c.done();
                    return holds();
                  });
    s.expected_hits = {4, 9, 30};
    out.push_back(std::move(s));
  }

  out.push_back(spec("survey-d-gt-sqrtp", Kind::Survey, "collect n with d > sqrt p", "n >= 1",
                     [](const EvalContext&, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       return mul(w.d, w.d) > w.p ? holds() : fails({});
                     }));

  {
    auto s = spec("delta-gt-half", Kind::Survey,
                  "collect n with delta > 1/2; hard: each hit is a straddle window with d > "
                  "sqrt p",
                  "n >= 1", [](const EvalContext& ctx, const Neighborhood& nb) {
                    const GapWindow& w = *nb.cur;
                    if (!ctx.dec.gt(nb.cur.views().delta, Q(1, 2))) return fails({});
                    Clauses c;
                    c.require_hard(w.straddle(), "straddle");
                    c.require_hard(mul(w.d, w.d) > w.p, "d > sqrt p");
                    if (!c.ok()) return c.done();
                    return holds();
                  });
    s.expected_hits = {2, 4, 6, 9, 11, 30};
    out.push_back(std::move(s));
  }

  out.push_back(spec("same-71", Kind::Universal,
                     "same part: d <= N <=> delta < 1/2; d < sqrt p", "same part",
                     [](const EvalContext& ctx, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       if (!w.same_part()) return out_of_domain();
                       Clauses c;
                       c.iff(w.d <= w.N, ctx.dec.lt(nb.cur.views().delta, Q(1, 2)),
                             "d <= N <=> delta < 1/2");
                       c.require(mul(w.d, w.d) < w.p, "d < sqrt p");
                       return c.done();
                     }));

  out.push_back(with_exceptions(
      spec("even-72", Kind::ExceptionSet, "N even, same part: d != 2N - 2", "N even, same part",
           [](const EvalContext&, const Neighborhood& nb) {
             const GapWindow& w = *nb.cur;
             if (!even_same(w)) return out_of_domain();
             Clauses c;
             c.require(w.d + 2 != 2 * w.N, "d != 2N - 2");
             return c.done();
           }),
      {3}));

  out.push_back(spec("even-73", Kind::Equivalence,
                     "N even, same part: d = N <=> (h_q = 2N - 1 and h = N - 1)",
                     "n >= 2, N even, same part",
                     [](const EvalContext&, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       if (w.n < 2 || !even_same(w)) return out_of_domain();
                       Clauses c;
                       c.iff(w.d == w.N, w.hq + 1 == 2 * w.N && w.h + 1 == w.N,
                             "d = N <=> h_q = 2N - 1, h = N - 1");
                       return c.done();
                     }));

  out.push_back(with_exceptions(
      spec("even-74", Kind::ExceptionSet,
           "N even, same part: d != floor sqrt p; hard: d <= N < sqrt p", "N even, same part",
           [](const EvalContext&, const Neighborhood& nb) {
             const GapWindow& w = *nb.cur;
             if (!even_same(w)) return out_of_domain();
             Clauses c;
             c.require_hard(w.d <= w.N, "d <= N");
             c.require(w.d != w.N, "d != N");
             return c.done();
           }),
      {3, 8}));

  out.push_back(spec("even-75", Kind::Universal,
                     "N even, same part: 0 < mu_q - mu < 1/2 - delta^2/(2 sqrt p)",
                     "N even, same part", [](const EvalContext& ctx, const Neighborhood& nb) {
                       if (!even_same(*nb.cur)) return out_of_domain();
                       const auto& v = nb.cur.views();
                       const RootExpr diff = v.mu_q - v.mu;
                       const RootExpr bound =
                           Q(1, 2) - v.delta * v.delta * (2 * v.sqrt_p).inverse();
                       Clauses c;
                       c.require(ctx.dec.gt(diff, Q(0)), "mu_q > mu");
                       c.require(ctx.dec.lt(diff, bound), "upper bound");
                       return c.done();
                     }));

  out.push_back(spec(
      "even-76", Kind::Universal,
      "N even, same part: h_q < N => d < sqrt p - 1 - h; h > sqrt p => d < h_q - sqrt p",
      "N even, same part", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (!even_same(w)) return out_of_domain();
        const auto& v = nb.cur.views();
        Clauses c;
        if (w.hq < w.N)
          c.require(ctx.dec.lt(I(w.d), v.sqrt_p - I(1 + w.h)), "d < sqrt p - 1 - h");
        if (mul(w.h, w.h) > w.p)
          c.require(ctx.dec.lt(I(w.d), I(w.hq) - v.sqrt_p), "d < h_q - sqrt p");
        return c.done();
      }));

  out.push_back(with_exceptions(
      spec("even-77", Kind::ExceptionSet,
           "N even, same part: d <= N - 2; hard: N - 2 < sqrt p_{n-1} - 2 when floor sqrt "
           "p_{n-1} = N, else N - 2 < sqrt p_{n-1} - 1",
           "n >= 2, N even, same part",
           [](const EvalContext& ctx, const Neighborhood& nb) {
             const GapWindow& w = *nb.cur;
             if (w.n < 2 || !even_same(w)) return out_of_domain();
             const GapWindow& pw = **nb.prev;
             const RootExpr rp = root_prime(pw.p);
             const RootExpr N2 = S(int64_t(w.N) - 2);
             Clauses c;
             if (pw.N == w.N)
               c.require_hard(ctx.dec.lt(N2, rp - Q(2)), "N - 2 < sqrt p_{n-1} - 2");
             else
               c.require_hard(ctx.dec.lt(N2, rp - Q(1)), "N - 2 < sqrt p_{n-1} - 1");
             c.require(w.d + 2 <= w.N, "d <= N - 2");
             return c.done();
           }),
      {3, 8}));

  out.push_back(spec(
      "thm-78", Kind::Universal,
      "N >= 4 even, same part: h = 1 => pi(N^2 + N) - pi(N^2) >= 2; h_q = 2N - 1 and N > 4 "
      "=> pi(N^2 + 2N) - pi(N^2 + N) >= 2",
      "N >= 4 even, same part", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (!even_same(w) || w.N < 4) return out_of_domain();
        const uint64_t N2 = w.N * w.N;
        Clauses c;
        if (w.h == 1)
          c.require(primes_between(ctx.store, N2, N2 + w.N) >= 2, "two primes in (N^2, N^2+N]");
        if (w.hq + 1 == 2 * w.N && w.N > 4)
          c.require(primes_between(ctx.store, N2 + w.N, N2 + 2 * w.N) >= 2,
                    "two primes in (N^2+N, N^2+2N]");
        return c.done();
      }));

  out.push_back(with_exceptions(
      spec("odd-79", Kind::ExceptionSet, "N >= 3 odd, same part: d != 2N - 4",
           "N >= 3 odd, same part",
           [](const EvalContext&, const Neighborhood& nb) {
             const GapWindow& w = *nb.cur;
             if (!odd_same(w) || w.N < 3) return out_of_domain();
             Clauses c;
             c.require(w.d + 4 != 2 * w.N, "d != 2N - 4");
             return c.done();
           }),
      {5}));

  out.push_back(with_exceptions(
      spec("odd-710", Kind::ExceptionSet,
           "N odd, same part: d != N - 1; hard: d <= N - 1 < sqrt p - 1 < sqrt p_{n-1}",
           "n >= 2, N odd, same part",
           [](const EvalContext& ctx, const Neighborhood& nb) {
             const GapWindow& w = *nb.cur;
             if (w.n < 2 || !odd_same(w)) return out_of_domain();
             const auto& v = nb.cur.views();
             Clauses c;
             c.require_hard(w.d + 1 <= w.N, "d <= N - 1");
             c.require_hard(ctx.dec.lt(v.sqrt_p - Q(1), root_prime((*nb.prev)->p)),
                            "sqrt p - 1 < sqrt p_{n-1}");
             c.require(w.d + 1 != w.N, "d != N - 1");
             return c.done();
           }),
      {5, 16, 24}));

  out.push_back(spec(
      "odd-711", Kind::Universal,
      "N odd, same part: 0 < mu_q - mu < 1/2 - delta^2/(2 sqrt p) - 1/(2 sqrt p)",
      "n >= 2, N odd, same part", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2 || !odd_same(w)) return out_of_domain();
        const auto& v = nb.cur.views();
        const RootExpr inv = (2 * v.sqrt_p).inverse();
        const RootExpr diff = v.mu_q - v.mu;
        Clauses c;
        c.require(ctx.dec.gt(diff, Q(0)), "mu_q > mu");
        c.require(ctx.dec.lt(diff, Q(1, 2) - v.delta * v.delta * inv - inv), "upper bound");
        return c.done();
      }));

  out.push_back(spec(
      "odd-712", Kind::Universal,
      "N odd, same part: d <= N - 1 < sqrt p_{n-1} - 1 when floor sqrt p_{n-1} = N, else "
      "< sqrt p_{n-1}",
      "n >= 2, N odd, same part", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2 || !odd_same(w)) return out_of_domain();
        const GapWindow& pw = **nb.prev;
        const RootExpr rp = root_prime(pw.p);
        Clauses c;
        c.require(w.d + 1 <= w.N, "d <= N - 1");
        if (pw.N == w.N)
          c.require(ctx.dec.lt(I(w.N - 1), rp - Q(1)), "N - 1 < sqrt p_{n-1} - 1");
        else
          c.require(ctx.dec.lt(I(w.N - 1), rp), "N - 1 < sqrt p_{n-1}");
        return c.done();
      }));

  out.push_back(spec(
      "odd-713", Kind::Universal,
      "N odd, same part, h_q < N: d < sqrt p - 1 - h, and d < sqrt p_{n-1} - 1 - h (floor sqrt "
      "p_{n-1} = N) or d < sqrt p_{n-1} - h (otherwise); h > sqrt p => d < h_q - sqrt p",
      "n >= 2, N odd, same part", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2 || !odd_same(w)) return out_of_domain();
        const auto& v = nb.cur.views();
        const GapWindow& pw = **nb.prev;
        const RootExpr rp = root_prime(pw.p);
        const RootExpr d = I(w.d);
        Clauses c;
        if (w.hq < w.N) {
          c.require(ctx.dec.lt(d, v.sqrt_p - I(1 + w.h)), "d < sqrt p - 1 - h");
          if (pw.N == w.N)
            c.require(ctx.dec.lt(d, rp - I(1 + w.h)), "d < sqrt p_{n-1} - 1 - h");
          else
            c.require(ctx.dec.lt(d, rp - I(w.h)), "d < sqrt p_{n-1} - h");
        }
        if (mul(w.h, w.h) > w.p) c.require(ctx.dec.lt(d, I(w.hq) - v.sqrt_p), "d < h_q - sqrt p");
        return c.done();
      }));

  out.push_back(spec(
      "first-after-square", Kind::Universal,
      "p the smallest prime above N^2 (N >= 2): floor sqrt q = N and floor D is even",
      "N >= 2, p_{n-1} < N^2", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2 || w.N < 2 || (*nb.prev)->N == w.N) return out_of_domain();
        const auto& v = nb.cur.views();
        Clauses c;
        c.require(w.same_part(), "floor sqrt q = N");
        c.require(mpz_even_p(ctx.dec.floor(v.D).get_mpz_t()) != 0, "floor D even");
        return c.done();
      }));

  out.push_back(spec("half-square-odd", Kind::Universal,
                     "same part with p > (N + 1/2)^2: floor D is odd", "same part",
                     [](const EvalContext& ctx, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       if (!w.same_part() || mul(4, w.p) <= mul(2 * w.N + 1, 2 * w.N + 1))
                         return out_of_domain();
                       Clauses c;
                       c.require(mpz_odd_p(ctx.dec.floor(nb.cur.views().D).get_mpz_t()) != 0,
                                 "floor D odd");
                       return c.done();
                     }));

  out.push_back(spec("survey-last-before-square", Kind::Survey,
                     "collect n where p is the largest prime below (N + 1)^2 and floor D is even",
                     "straddle", [](const EvalContext& ctx, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       if (!w.straddle()) return out_of_domain();
                       if (mpz_even_p(ctx.dec.floor(nb.cur.views().D).get_mpz_t()) != 0)
                         return holds("N = " + std::to_string(w.N));
                       return fails({});
                     }));
}

}  // namespace sqrtgap::detail
