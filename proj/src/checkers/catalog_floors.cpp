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

// Floors and fractional parts of sqrt(q) delta and sqrt(p) delta.
//
// With s = isqrt(pq) every floor here is an integer expression:
//   floor(sqrt q delta)  = q - s - 1      floor(sqrt p delta)  = s - p
//   floor(2 sqrt q delta) = 2q - s2 - 1   floor(2 sqrt p delta) = s2 - 2p
// where s2 = isqrt(4pq). The kernel forms are evaluated alongside.

#include <map>

#include "checkers/support.hpp"

namespace sqrtgap::detail {
namespace {

using i128 = __int128;

i128 s2_of(const GapWindow& w) { return static_cast<i128>(isqrt(4 * mul(w.p, w.q))); }

i128 floor_div2(i128 a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

// Indices up to this bound also run the enclosure path of the kernel.
constexpr uint64_t kApproxCrossCheck = 10000;

CheckerSpec spec(std::string id, Kind kind, std::string claim, std::string domain, Fn fn) {
  CheckerSpec s;
  s.id = std::move(id);
  s.kind = kind;
  s.claim = std::move(claim);
  s.domain = std::move(domain);
  s.make = stateless(std::move(fn));
  return s;
}

// Keeps the last window of every gap size seen so far.
class FixedGapMono : public Evaluator {
 public:
  void prepare(const EvalContext& ctx, uint64_t n_lo) override {
    last_.clear();
    if (n_lo <= 1) return;
    WindowStream ws(ctx.store, 1, n_lo - 1);
    while (auto w = ws.next()) last_.insert_or_assign(w->d, *w);
  }

  Outcome evaluate(const EvalContext& ctx, const Neighborhood& nb) override {
    const GapWindow& w = *nb.cur;
    auto it = last_.find(w.d);
    Clauses c;
    if (it != last_.end()) {
      const Win prev(it->second);
      const auto& a = prev.views();
      const auto& b = nb.cur.views();
      c.require(ctx.dec.lt(b.delta, a.delta), "delta decreasing");
      c.require(ctx.dec.lt(ctx.dec.frac(b.sqrtq_delta), ctx.dec.frac(a.sqrtq_delta)),
                "{sqrt q delta} decreasing");
      if (w.n >= 2 && it->second.n >= 2)
        c.require(ctx.dec.gt(ctx.dec.frac(b.sqrtp_delta), ctx.dec.frac(a.sqrtp_delta)),
                  "{sqrt p delta} increasing");
    }
    last_.insert_or_assign(w.d, w);
    return c.done();
  }

 private:
  std::map<uint64_t, GapWindow> last_;
};

}  // namespace

void register_floors(std::vector<CheckerSpec>& out) {
  out.push_back(spec(
      "floor-31", Kind::Universal,
      "d = floor(2 sqrt q delta); d = floor(2 sqrt p delta) + 1 (n >= 2)", "n >= 1",
      [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        const i128 s2 = s2_of(w);
        const i128 d = w.d;
        const RootExpr e = 2 * nb.cur.views().sqrtq_delta;
        Clauses c;
        c.require(d == 2 * static_cast<i128>(w.q) - s2 - 1, "d = 2q - isqrt(4pq) - 1");
        c.require(ctx.dec.floor(e) == to_int(w.d), "kernel floor");
        if (w.n <= kApproxCrossCheck) {
          auto g = floor_root_approx(e, ctx.dec.ladder());
          c.require(g && *g == to_int(w.d), "enclosure floor");
        }
        if (w.n >= 2) {
          c.require(d == s2 - 2 * static_cast<i128>(w.p) + 1, "d = isqrt(4pq) - 2p + 1");
          c.require(ctx.dec.floor(2 * nb.cur.views().sqrtp_delta) + 1 == to_int(w.d),
                    "kernel floor, lower form");
        }
        return c.done();
      }));

  out.push_back(spec("floor-32", Kind::Universal, "d/2 - 1 = floor(sqrt p delta - 1/2)", "n >= 2",
                     [](const EvalContext& ctx, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       if (w.n < 2) return out_of_domain();
                       const i128 lhs = static_cast<i128>(w.d / 2) - 1;
                       Clauses c;
                       c.require(lhs == floor_div2(s2_of(w) - 2 * static_cast<i128>(w.p) - 1),
                                 "integer form");
                       c.require(ctx.dec.floor(nb.cur.views().sqrtp_delta - Q(1, 2)) ==
                                     Int(static_cast<long>(lhs)),
                                 "kernel floor");
                       return c.done();
                     }));

  out.push_back(spec("frac-33", Kind::Universal, "{sqrt p delta - 1/2} < 1/2", "n >= 2",
                     [](const EvalContext& ctx, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       if (w.n < 2) return out_of_domain();
                       // floor(2x) even <=> {x} < 1/2, with 2x = 2 sqrt(pq) - 2p - 1
                       const i128 f2 = s2_of(w) - 2 * static_cast<i128>(w.p) - 1;
                       Clauses c;
                       c.require(f2 % 2 == 0, "floor(2 sqrt p delta - 1) even");
                       c.require(ctx.dec.lt(ctx.dec.frac(nb.cur.views().sqrtp_delta - Q(1, 2)),
                                            Q(1, 2)),
                                 "kernel fraction");
                       return c.done();
                     }));

  out.push_back(spec(
      "thm-34", Kind::Universal,
      "d = floor(sqrt q delta) + floor(sqrt p delta) + 1; n >= 2: d = 2 floor(sqrt q delta) = "
      "2(floor(sqrt p delta) + 1), floors of opposite parity, 0 < {sqrt q delta} < 1/2",
      "n >= 1", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        const auto& v = nb.cur.views();
        const uint64_t fq = w.q - w.s - 1;
        const uint64_t fp = w.s - w.p;
        Clauses c;
        c.require(w.d == fq + fp + 1, "d = fq + fp + 1");
        c.require(ctx.dec.floor(v.sqrtq_delta) == to_int(fq), "kernel floor sqrt q delta");
        c.require(ctx.dec.floor(v.sqrtp_delta) == to_int(fp), "kernel floor sqrt p delta");
        if (w.n >= 2) {
          c.require(w.d == 2 * fq, "d = 2(q - s - 1)");
          c.require(w.d == 2 * (fp + 1), "d = 2(s - p + 1)");
          c.require(is_even(fq) != is_even(fp), "opposite parities");
          const RootExpr f = ctx.dec.frac(v.sqrtq_delta);
          c.require(ctx.dec.gt(f, Q(0)) && ctx.dec.lt(f, Q(1, 2)), "0 < {sqrt q delta} < 1/2");
        }
        return c.done();
      }));

  {
    auto s = spec(
        "thm-35", Kind::ExceptionSet,
        "{sqrt q delta} < 1/4; hard for n >= 2: delta^2 = 2{sqrt q delta}, "
        "delta^2 + 2{sqrt p delta} = 2, {sqrt p delta} > 3/4",
        "n >= 1", [](const EvalContext& ctx, const Neighborhood& nb) {
          const GapWindow& w = *nb.cur;
          const auto& v = nb.cur.views();
          const RootExpr fq = ctx.dec.frac(v.sqrtq_delta);
          const RootExpr d2 = v.delta * v.delta;
          Clauses c;
          if (w.n >= 2) {
            const RootExpr fp = ctx.dec.frac(v.sqrtp_delta);
            c.require_hard(ctx.dec.eq(d2, 2 * fq), "delta^2 = 2{sqrt q delta}");
            c.require_hard(ctx.dec.eq(d2 + 2 * fp, Q(2)), "delta^2 + 2{sqrt p delta} = 2");
            c.require_hard(ctx.dec.gt(fp, Q(3, 4)), "{sqrt p delta} > 3/4");
            // p + q = 2s + 2 is the same identity in integers.
            c.require_hard(w.p + w.q == 2 * w.s + 2, "p + q = 2s + 2");
          }
          const u128 t = 4 * static_cast<u128>(w.s) + 3;
          const bool quarter = 16 * mul(w.p, w.q) > t * t;
          c.require_hard(quarter == ctx.dec.lt(fq, Q(1, 4)), "integer and kernel forms agree");
          c.require(quarter, "{sqrt q delta} < 1/4");
          return c.done();
        });
    s.expected_exceptions = {1};
    out.push_back(std::move(s));
  }

  out.push_back(spec(
      "cor-36", Kind::Universal,
      "{1 + 2 sqrt p delta} = 2{sqrt p delta} - 1 = 1 - {2 sqrt q delta}", "n >= 2",
      [](const EvalContext& ctx, const Neighborhood& nb) {
        if (nb.cur->n < 2) return out_of_domain();
        const auto& v = nb.cur.views();
        const RootExpr a = ctx.dec.frac(Q(1) + 2 * v.sqrtp_delta);
        const RootExpr b = 2 * ctx.dec.frac(v.sqrtp_delta) - Q(1);
        const RootExpr e = Q(1) - ctx.dec.frac(2 * v.sqrtq_delta);
        Clauses c;
        c.require(ctx.dec.eq(a, b), "first identity");
        c.require(ctx.dec.eq(b, e), "second identity");
        return c.done();
      }));

  out.push_back(spec(
      "chain-37", Kind::Universal,
      "sqrt p delta < d/2 < sqrt q delta < d/2 + 1/4 < sqrt p delta + 1/2 < sqrt(2p)/2 + 1/2",
      "n >= 1", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        const auto& v = nb.cur.views();
        const RootExpr chain[] = {v.sqrtp_delta,           Q(w.d, 2),
                                  v.sqrtq_delta,           Q(2 * w.d + 1, 4),
                                  v.sqrtp_delta + Q(1, 2), root(2 * w.p) / Rat(2) + Q(1, 2)};
        Clauses c;
        for (int i = 0; i < 5; ++i)
          c.require(ctx.dec.lt(chain[i], chain[i + 1]), "link " + std::to_string(i + 1));
        return c.done();
      }));

  out.push_back(spec(
      "eq-33", Kind::Universal,
      "d/2 = sqrt q delta - {sqrt q delta} = sqrt q delta - 1 + {sqrt p delta} "
      "= sqrt p delta + 1 - {sqrt p delta} = sqrt p delta + {sqrt q delta} "
      "= sqrt p delta + delta^2 - {sqrt q delta} = sqrt p delta + 1/2 - {sqrt p delta - 1/2}",
      "n >= 2", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2) return out_of_domain();
        const auto& v = nb.cur.views();
        const RootExpr fq = ctx.dec.frac(v.sqrtq_delta);
        const RootExpr fp = ctx.dec.frac(v.sqrtp_delta);
        const RootExpr forms[] = {
            v.sqrtq_delta - fq,
            v.sqrtq_delta - Q(1) + fp,
            v.sqrtp_delta + Q(1) - fp,
            v.sqrtp_delta + fq,
            v.sqrtp_delta + v.delta * v.delta - fq,
            v.sqrtp_delta + Q(1, 2) - ctx.dec.frac(v.sqrtp_delta - Q(1, 2)),
        };
        const RootExpr half = Q(w.d, 2);
        Clauses c;
        for (int i = 0; i < 6; ++i)
          c.require(ctx.dec.eq(forms[i], half), "form " + std::to_string(i + 1));
        return c.done();
      }));

  {
    auto s = spec("survey-quarter", Kind::Survey, "collect n with delta^2 > 1/4", "n >= 1",
                  [](const EvalContext& ctx, const Neighborhood& nb) {
                    const auto& v = nb.cur.views();
                    if (ctx.dec.gt(v.delta * v.delta, Q(1, 4)))
                      return holds("delta^2 = " + to_decimal(v.delta * v.delta, 6));
                    return fails({});
                  });
    s.expected_hits = {2, 4, 6, 9, 11, 30};
    out.push_back(std::move(s));
  }

  out.push_back(spec("survey-prod", Kind::Survey, "collect n with {sqrt q delta} > 2/d",
                     "n >= 2", [](const EvalContext& ctx, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       if (w.n < 2) return out_of_domain();
                       const RootExpr f = ctx.dec.frac(nb.cur.views().sqrtq_delta);
                       if (ctx.dec.gt(f, Q(2, static_cast<long>(w.d))))
                         return holds("{sqrt q delta} = " + to_decimal(f, 6));
                       return fails({});
                     }));

  {
    CheckerSpec s;
    s.id = "fixedgap-mono";
    s.kind = Kind::Universal;
    s.claim =
        "along n with d_n = g: delta and {sqrt q delta} decrease, {sqrt p delta} increases";
    s.domain = "n >= 1, compared with the previous index of the same gap";
    s.make = stateful<FixedGapMono>();
    out.push_back(std::move(s));
  }
}

}  // namespace sqrtgap::detail
