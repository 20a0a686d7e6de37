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

// Gap-size bounds and their integer reformulations.

#include "checkers/support.hpp"

namespace sqrtgap::detail {
namespace {

using i128 = __int128;

// The gap conjecture against the following prime.
bool base_gap_sq(const GapWindow& w) { return mul(w.d, w.d) < 2 * static_cast<u128>(w.q); }

// The gap conjecture against the preceding prime.
bool base_gap_sq2(const GapWindow& w) { return mul(w.d, w.d) < 2 * static_cast<u128>(w.p); }

class RunningSum : public Evaluator {
 public:
  void prepare(const EvalContext& ctx, uint64_t n_lo) override {
    sum_ = ctx.store.nth_prime(n_lo) - 2;  // d_1 + ... + d_{n_lo - 1}
  }
  Outcome evaluate(const EvalContext&, const Neighborhood& nb) override {
    const GapWindow& w = *nb.cur;
    sum_ += w.d;
    // d(d+1)/2 - sum < d/2 + 2, doubled.
    const i128 lhs = static_cast<i128>(mul(w.d, w.d + 1)) - 2 * static_cast<i128>(sum_);
    const bool item = lhs < static_cast<i128>(w.d) + 4;
    Clauses c;
    c.iff(item, base_gap_sq(w), "sum form <=> d^2 < 2q");
    return c.done();
  }

 private:
  uint64_t sum_ = 0;
};

CheckerSpec spec(std::string id, Kind kind, std::string claim, std::string domain, Fn fn) {
  CheckerSpec s;
  s.id = std::move(id);
  s.kind = kind;
  s.claim = std::move(claim);
  s.domain = std::move(domain);
  s.make = stateless(std::move(fn));
  return s;
}

}  // namespace

void register_gaps(std::vector<CheckerSpec>& out) {
  {
    auto s = spec("conj-gap-sq", Kind::ExceptionSet, "d^2 < q; hard: d^2 < 2q", "n >= 1",
                  [](const EvalContext&, const Neighborhood& nb) {
                    const GapWindow& w = *nb.cur;
                    Clauses c;
                    c.require_hard(base_gap_sq(w), "d^2 < 2q");
                    c.require(mul(w.d, w.d) < w.q, "d^2 < q");
                    return c.done();
                  });
    s.expected_exceptions = {4, 9, 30};
    s.conjecture = true;
    out.push_back(std::move(s));
  }

  out.push_back(spec("cor-12", Kind::Universal, "d^2 <= 2(q-1) < 4(p-1/2)", "n >= 1",
                     [](const EvalContext&, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       Clauses c;
                       c.require(mul(w.d, w.d) <= 2 * static_cast<u128>(w.q - 1), "d^2 <= 2(q-1)");
                       c.require(w.q < 2 * w.p, "2(q-1) < 4p-2");
                       return c.done();
                     }));

  out.push_back(spec(
      "cor-13", Kind::Equivalence,
      "no multiple of q in ]p^2-d^2, p^2[ <=> d^2 < q; top multiple is (p-d+1)q <=> q < d^2 < 2q",
      "n >= 2", [](const EvalContext&, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2) return out_of_domain();
        const u128 p2 = mul(w.p, w.p);
        const u128 d2 = mul(w.d, w.d);
        const u128 top = p2 / w.q * w.q;  // largest multiple of q below p^2
        Clauses c;
        c.iff(top <= p2 - d2, d2 < w.q, "empty window <=> d^2 < q");
        c.iff(top == mul(w.p - w.d + 1, w.q), d2 > w.q && d2 < 2 * static_cast<u128>(w.q),
              "top multiple (p-d+1)q <=> q < d^2 < 2q");
        return c.done();
      }));

  out.push_back(spec("eq-15-1", Kind::Equivalence, "p > d(d/2 - 1) <=> d^2 < 2q", "n >= 1",
                     [](const EvalContext&, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       const i128 rhs = static_cast<i128>(w.d) * (static_cast<i128>(w.d) - 2);
                       Clauses c;
                       c.iff(2 * static_cast<i128>(w.p) > rhs, base_gap_sq(w), "item <=> base");
                       return c.done();
                     }));

  {
    CheckerSpec s;
    s.id = "eq-15-2";
    s.kind = Kind::Equivalence;
    s.claim = "d(d+1)/2 - (d_1 + ... + d_n) < d/2 + 2 <=> d^2 < 2q";
    s.domain = "n >= 1";
    s.make = stateful<RunningSum>();
    out.push_back(std::move(s));
  }

  out.push_back(spec("eq-15-3", Kind::Equivalence, "sqrt q < sqrt(p + 1/2) + sqrt2/2 <=> d^2 < 2q",
                     "n >= 1", [](const EvalContext& ctx, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       const RootExpr rhs = root(4 * w.p + 2) / Rat(2) + root(2) / Rat(2);
                       Clauses c;
                       c.iff(ctx.dec.lt(nb.cur.views().sqrt_q, rhs), base_gap_sq(w),
                             "item <=> base");
                       return c.done();
                     }));

  out.push_back(spec(
      "eq-15-4", Kind::Equivalence,
      "(1 + 1/(2p)) q < (sqrt p + sqrt2 sqrt(pq)/(2p))^2 <=> d^2 < 2q", "n >= 1",
      [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        const auto& v = nb.cur.views();
        const RootExpr lhs = I(w.q) * (Rat(1) + Rat(1) / (2 * R(w.p)));
        const RootExpr t = v.sqrt_p + root(2) * v.sqrt_pq / (2 * R(w.p));
        Clauses c;
        c.iff(ctx.dec.lt(lhs, t * t), base_gap_sq(w), "item <=> base");
        return c.done();
      }));

  out.push_back(spec("eq-16-1", Kind::Equivalence,
                     "smallest odd m with mq > p^2 is p - d + 2 <=> d^2 < 2q", "n >= 2",
                     [](const EvalContext&, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       if (w.n < 2) return out_of_domain();
                       u128 m = mul(w.p, w.p) / w.q + 1;
                       if ((m & 1) == 0) ++m;
                       Clauses c;
                       c.iff(m == w.p - w.d + 2, base_gap_sq(w), "item <=> base");
                       return c.done();
                     }));

  out.push_back(spec("eq-16-2", Kind::Equivalence,
                     "largest even m with mq <= dp is d - 2 <=> d^2 < 2q", "n >= 2",
                     [](const EvalContext&, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       if (w.n < 2) return out_of_domain();
                       u128 m = mul(w.d, w.p) / w.q;
                       if (m & 1) --m;
                       Clauses c;
                       c.iff(m + 2 == w.d, base_gap_sq(w), "item <=> base");
                       return c.done();
                     }));

  out.push_back(spec("eq-16-3", Kind::Equivalence, "k >= d/2 <=> d^2 < 2q", "n >= 2",
                     [](const EvalContext&, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       if (w.n < 2) return out_of_domain();
                       Clauses c;
                       c.iff(2 * w.k >= w.d, base_gap_sq(w), "item <=> base");
                       return c.done();
                     }));

  out.push_back(spec(
      "eq-qr", Kind::Equivalence,
      "(d^2/4)^2 in {1^2, ..., ((q-1)/2)^2} <=> d^2 < 2q; d_1^2 in {1^2, ..., ((p_2-1)/2)^2}",
      "n >= 1", [](const EvalContext&, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        const uint64_t half = (w.q - 1) / 2;
        Clauses c;
        if (w.n == 1) {
          c.require(1 <= half && w.d * w.d <= half, "d_1^2 in residue squares");
          return c.done();
        }
        // x^2 is in the set iff 1 <= x <= (q-1)/2.
        const u128 x = mul(w.d, w.d) / 4;
        c.iff(x >= 1 && x <= half, base_gap_sq(w), "item <=> base");
        return c.done();
      }));

  out.push_back(spec("cor-14", Kind::Universal, "d < 2 sqrt p", "n >= 1",
                     [](const EvalContext& ctx, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       Clauses c;
                       c.require(mul(w.d, w.d) < 4 * static_cast<u128>(w.p), "d^2 < 4p");
                       c.require(ctx.dec.lt(I(w.d), 2 * nb.cur.views().sqrt_p), "d < 2 sqrt p");
                       return c.done();
                     }));

  // Ratios of consecutive primes.
  out.push_back(spec("inv-diff", Kind::Universal, "1/p - 1/q <= 1/6, equality iff n = 1",
                     "n >= 1", [](const EvalContext&, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       const u128 lhs = 6 * static_cast<u128>(w.d);
                       Clauses c;
                       c.require(lhs <= mul(w.p, w.q), "6d <= pq");
                       c.iff(lhs == mul(w.p, w.q), w.n == 1, "equality iff n = 1");
                       return c.done();
                     }));

  out.push_back(spec("ratio-53", Kind::Universal, "q/p <= 5/3, equality iff n = 2", "n >= 1",
                     [](const EvalContext&, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       Clauses c;
                       c.require(mul(3, w.q) <= mul(5, w.p), "3q <= 5p");
                       c.iff(mul(3, w.q) == mul(5, w.p), w.n == 2, "equality iff n = 2");
                       return c.done();
                     }));

  out.push_back(spec("ratio-sqrt", Kind::Universal,
                     "q/p < 1 + 2/sqrt p (n >= 2); q/p < 3/2 (n >= 5)", "n >= 2",
                     [](const EvalContext& ctx, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       if (w.n < 2) return out_of_domain();
                       const auto& v = nb.cur.views();
                       Clauses c;
                       c.require(ctx.dec.lt(I(w.q) / R(w.p), Q(1) + 2 * v.sqrt_p / R(w.p)),
                                 "q/p < 1 + 2/sqrt p");
                       if (w.n >= 5) c.require(mul(2, w.q) < mul(3, w.p), "2q < 3p");
                       return c.done();
                     }));

  out.push_back(spec("gap-next", Kind::Universal, "p_n >= d_{n+1}, equality iff n = 1",
                     "n >= 1", [](const EvalContext&, const Neighborhood& nb) {
                       const uint64_t p = nb.cur->p;
                       const uint64_t d1 = nb.next->d;
                       Clauses c;
                       c.require(p >= d1, "p >= next d");
                       c.iff(p == d1, nb.cur->n == 1, "equality iff n = 1");
                       return c.done();
                     }));

  out.push_back(spec("andrica", Kind::Universal, "sqrt q - sqrt p < 1", "n >= 1",
                     [](const EvalContext& ctx, const Neighborhood& nb) {
                       Clauses c;
                       c.require(ctx.dec.lt(nb.cur.views().delta, Q(1)), "delta < 1");
                       return c.done();
                     }));

  out.push_back(spec("andrica-form", Kind::Equivalence,
                     "sqrt q - sqrt p < 1 <=> d < 2 sqrt p + 1", "n >= 1",
                     [](const EvalContext& ctx, const Neighborhood& nb) {
                       const auto& v = nb.cur.views();
                       Clauses c;
                       c.iff(ctx.dec.lt(I(nb.cur->d), 2 * v.sqrt_p + Q(1)),
                             ctx.dec.lt(v.delta, Q(1)), "item <=> base");
                       return c.done();
                     }));

  {
    auto s = spec("gap-half", Kind::ExceptionSet, "d <= (p - 1)/2", "n >= 1",
                  [](const EvalContext&, const Neighborhood& nb) {
                    Clauses c;
                    c.require(2 * nb.cur->d + 1 <= nb.cur->p, "2d <= p - 1");
                    return c.done();
                  });
    s.expected_exceptions = {1, 2, 4};
    out.push_back(std::move(s));
  }
  {
    auto s = spec("conj-gap-sq2", Kind::ExceptionSet, "d^2 < 2p", "n >= 1",
                  [](const EvalContext&, const Neighborhood& nb) {
                    Clauses c;
                    c.require(base_gap_sq2(*nb.cur), "d^2 < 2p");
                    return c.done();
                  });
    s.expected_exceptions = {4};
    s.conjecture = true;
    out.push_back(std::move(s));
  }
  {
    auto s = spec("cor-26", Kind::ExceptionSet, "d^2 <= 2(p - 1)", "n >= 1",
                  [](const EvalContext&, const Neighborhood& nb) {
                    const GapWindow& w = *nb.cur;
                    Clauses c;
                    c.require(mul(w.d, w.d) <= 2 * static_cast<u128>(w.p - 1), "d^2 <= 2(p-1)");
                    return c.done();
                  });
    s.expected_exceptions = {4};
    out.push_back(std::move(s));
  }
  {
    // Integer x = p is the worst point of (p, q); the real threshold
    // t = 12 - sqrt 23 solves t + sqrt(2t) = 11.
    auto s = spec(
        "cor-27", Kind::ExceptionSet,
        "(x, x + sqrt(2x)) holds a prime except 7 <= x <= 12 - sqrt23 = 7.2041684766...",
        "x = p_n", [](const EvalContext& ctx, const Neighborhood& nb) {
          const GapWindow& w = *nb.cur;
          Clauses c;
          c.require(ctx.dec.lt(I(w.q), I(w.p) + root(2 * w.p)), "q < p + sqrt(2p)");
          if (w.n == 4) {
            const RootExpr t = Q(12) - root(23);
            c.require_hard(ctx.dec.eq(t * t - 24 * t + Q(121), Q(0)), "t^2 - 24t + 121 = 0");
            c.require_hard(ctx.dec.gt(t, Q(72041684766, 10000000000)) &&
                               ctx.dec.lt(t, Q(72041684767, 10000000000)),
                           "t in [7.2041684766, 7.2041684767]");
            c.require_hard(ctx.dec.lt(Q(7) + root(14), I(w.q)), "7 + sqrt14 < 11");
            c.require_hard(ctx.dec.gt(Q(8) + root(16), I(w.q)), "x = 8 reaches 11");
          }
          return c.done();
        });
    s.expected_exceptions = {4};
    out.push_back(std::move(s));
  }

  for (int item = 1; item <= 3; ++item) {
    static const char* claims[] = {
        "(q + d) p is the largest odd multiple of p up to q^2 <=> d^2 < 2p",
        "]p^2, q^2[ holds d odd multiples of p <=> d^2 < 2p",
        "d/2 + (1 + ... + (d-1)) < p <=> d^2 < 2p"};
    out.push_back(spec("eq-28-" + std::to_string(item), Kind::Equivalence, claims[item - 1],
                       "n >= 2, n != 4", [item](const EvalContext&, const Neighborhood& nb) {
                         const GapWindow& w = *nb.cur;
                         if (w.n < 2 || w.n == 4) return out_of_domain();
                         const u128 q2 = mul(w.q, w.q);
                         bool ok = false;
                         if (item == 1) {
                           u128 m = q2 / w.p;  // m p <= q^2, q^2 not a multiple of p
                           if ((m & 1) == 0) --m;
                           ok = m == w.q + w.d;
                         } else if (item == 2) {
                           // odd m with p < m < q^2/p
                           const u128 hi = (q2 - 1) / w.p;
                           const u128 count = (hi + 1) / 2 - (w.p + 1) / 2;
                           ok = count == w.d;
                         } else {
                           // d/2 + d(d-1)/2 < p, doubled
                           ok = w.d + mul(w.d, w.d - 1) < 2 * static_cast<u128>(w.p);
                         }
                         Clauses c;
                         c.iff(ok, base_gap_sq2(w), "item <=> base");
                         return c.done();
                       }));
  }

  out.push_back(spec(
      "andrica-sharp", Kind::Universal,
      "sqrt q - sqrt p <= sqrt11 - sqrt7 < 7/10 < sqrt2/2, equality iff n = 4", "n >= 1",
      [](const EvalContext& ctx, const Neighborhood& nb) {
        const RootExpr d4 = root(11) - root(7);
        const Cmp k = ctx.dec.cmp(nb.cur.views().delta, d4);
        Clauses c;
        c.require(k != Cmp::Greater, "delta <= sqrt11 - sqrt7");
        c.iff(k == Cmp::Equal, nb.cur->n == 4, "equality iff n = 4");
        if (nb.cur->n == 4) {
          c.require_hard(ctx.dec.lt(d4, Q(7, 10)), "sqrt11 - sqrt7 < 7/10");
          c.require_hard(ctx.dec.lt(Q(7, 10), root(2) / Rat(2)), "7/10 < sqrt2/2");
          c.note("max delta = sqrt11 - sqrt7 = " + to_decimal(d4, 10));
          c.mark();
        }
        return c.done();
      }));

  out.push_back(spec("sq-in-gap", Kind::Universal,
                     "the composites strictly between p and q contain at most one square",
                     "n >= 1", [](const EvalContext&, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       // squares in ]p, q[ are (N+1)^2 .. Nq^2
                       Clauses c;
                       c.require(w.Nq <= w.N + 1, "at most one square");
                       return c.done();
                     }));

  {
    auto s = spec("gap-85", Kind::Universal, "d < (8/5) sqrt p", "n >= 1",
                  [](const EvalContext& ctx, const Neighborhood& nb) {
                    const GapWindow& w = *nb.cur;
                    Clauses c;
                    c.require(mul(25 * w.d, w.d) < mul(64, w.p), "25 d^2 < 64 p");
                    c.require(ctx.dec.lt(I(w.d), nb.cur.views().sqrt_p * rat(8, 5)),
                              "d < 8/5 sqrt p");
                    return c.done();
                  });
    s.conjecture = true;
    out.push_back(std::move(s));
  }

  out.push_back(spec(
      "prop-212", Kind::Universal,
      "a = sqrt2: d < a sqrt p => delta < a/2 and D < 2 sqrt p + a/2", "n >= 1",
      [](const EvalContext& ctx, const Neighborhood& nb) {
        const auto& v = nb.cur.views();
        const RootExpr a = root(2);
        Clauses c;
        if (!ctx.dec.lt(I(nb.cur->d), a * v.sqrt_p)) {
          c.note("premise false");
          return c.done();
        }
        c.require(ctx.dec.lt(v.delta, a / Rat(2)), "delta < a/2");
        c.require(ctx.dec.lt(v.D, 2 * v.sqrt_p + a / Rat(2)), "D < 2 sqrt p + a/2");
        return c.done();
      }));

  out.push_back(spec(
      "prop-213", Kind::Universal,
      "a = sqrt2/2: delta < a => d < 2a sqrt p + a^2 and D < 2 sqrt p + a", "n >= 1",
      [](const EvalContext& ctx, const Neighborhood& nb) {
        const auto& v = nb.cur.views();
        const RootExpr a = root(2) / Rat(2);
        Clauses c;
        if (!ctx.dec.lt(v.delta, a)) {
          c.note("premise false");
          return c.done();
        }
        c.require(ctx.dec.lt(I(nb.cur->d), 2 * a * v.sqrt_p + a * a), "d < 2a sqrt p + a^2");
        c.require(ctx.dec.lt(v.D, 2 * v.sqrt_p + a), "D < 2 sqrt p + a");
        return c.done();
      }));

  out.push_back(spec("gap-transfer", Kind::Universal, "d < sqrt2 sqrt p + 1/2", "n >= 1",
                     [](const EvalContext& ctx, const Neighborhood& nb) {
                       Clauses c;
                       c.require(ctx.dec.lt(I(nb.cur->d), root(2 * nb.cur->p) + Q(1, 2)),
                                 "d < sqrt(2p) + 1/2");
                       return c.done();
                     }));

  out.push_back(spec("ishikawa-plus", Kind::Universal, "p_{n+2} < p_n + 1 + 2 sqrt(2 p_n)",
                     "n >= 1", [](const EvalContext& ctx, const Neighborhood& nb) {
                       const uint64_t p = nb.cur->p;
                       Clauses c;
                       c.require(ctx.dec.lt(I(nb.next->q), I(p + 1) + 2 * root(2 * p)),
                                 "p_{n+2} < p + 1 + 2 sqrt(2p)");
                       return c.done();
                     }));

  {
    auto s = spec("ishikawa-emp", Kind::Survey, "collect n with p_{n+2} >= p_n + 2 sqrt(2 p_n)",
                  "n >= 1", [](const EvalContext& ctx, const Neighborhood& nb) {
                    const uint64_t p = nb.cur->p;
                    const bool below = ctx.dec.lt(I(nb.next->q), I(p) + 2 * root(2 * p));
                    return below ? fails("below") : holds("p_{n+2} >= p + 2 sqrt(2p)");
                  });
    s.conjecture = true;
    out.push_back(std::move(s));
  }

  out.push_back(spec("gap-ratio-decay", Kind::Universal, "d/p < sqrt(2q)/p < 2/sqrt p",
                     "n >= 1", [](const EvalContext& ctx, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       const RootExpr mid = root(2 * w.q) / R(w.p);
                       Clauses c;
                       c.require(ctx.dec.lt(I(w.d) / R(w.p), mid), "d/p < sqrt(2q)/p");
                       c.require(ctx.dec.lt(mid, 2 * nb.cur.views().sqrt_p / R(w.p)),
                                 "sqrt(2q)/p < 2/sqrt p");
                       return c.done();
                     }));
}

}  // namespace sqrtgap::detail
