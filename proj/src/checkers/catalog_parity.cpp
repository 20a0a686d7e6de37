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

// Parity of h and of floor(D) against mu sqrt p and mu_q sqrt q.

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

RootExpr delta4() { return root(11) - root(7); }

// Floor of mu sqrt p from tN = isqrt(N^2 p); N^2 p is never a square.
Int floor_mu_sqrtp(const GapWindow& w) { return to_int(w.p - w.tN - 1); }

// Shared pieces of the two products mu sqrt p and mu_q sqrt q.
struct Products {
  RootExpr P, Q;    // mu sqrt p, mu_q sqrt q
  Int fl_P, fl_Q;   // floors
  RootExpr fP, fQ;  // fractional parts
};

Products products(const EvalContext& ctx, const Win& cur) {
  const auto& v = cur.views();
  Products r{v.mu_sqrtp, v.muq_sqrtq, ctx.dec.floor(v.mu_sqrtp), ctx.dec.floor(v.muq_sqrtq),
             {}, {}};
  r.fP = v.mu_sqrtp - RootExpr(Rat(r.fl_P));
  r.fQ = v.muq_sqrtq - RootExpr(Rat(r.fl_Q));
  return r;
}

bool floor_D_even(const EvalContext& ctx, const RootViews& v) {
  return mpz_even_p(ctx.dec.floor(v.D).get_mpz_t()) != 0;
}

}  // namespace

void register_parity(std::vector<CheckerSpec>& out) {
  out.push_back(spec(
      "par-51", Kind::Universal,
      "{2 mu sqrt p} = mu^2 < mu; h even <=> 2{mu sqrt p} = {2 mu sqrt p} <=> {mu sqrt p} < 1/2; "
      "then floor(mu sqrt p) = h/2 and mu^2 = 2{mu sqrt p}",
      "n >= 2", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2) return out_of_domain();
        const auto& v = nb.cur.views();
        const Products x = products(ctx, nb.cur);
        const RootExpr mu2 = v.mu * v.mu;
        const RootExpr f2 = ctx.dec.frac(2 * x.P);
        const bool even = is_even(w.h);
        Clauses c;
        c.require_hard(x.fl_P == floor_mu_sqrtp(w), "kernel floor agrees with p - tN - 1");
        c.require(ctx.dec.eq(f2, mu2), "{2 mu sqrt p} = mu^2");
        c.require(ctx.dec.lt(mu2, v.mu), "mu^2 < mu");
        c.iff(ctx.dec.eq(2 * x.fP, f2), even, "2{mu sqrt p} = {2 mu sqrt p} <=> h even");
        c.iff(ctx.dec.lt(x.fP, Q(1, 2)), even, "{mu sqrt p} < 1/2 <=> h even");
        if (even) {
          c.require(2 * x.fl_P == to_int(w.h), "floor(mu sqrt p) = h/2");
          c.require(ctx.dec.eq(mu2, 2 * x.fP), "mu^2 = 2{mu sqrt p}");
        }
        return c.done();
      }));

  {
    auto s = spec("par-51-odd-gt1", Kind::ExceptionSet,
                  "floor sqrt p is odd and greater than 1 <=> mu^2 = 2{mu sqrt p}", "n >= 1",
                  [](const EvalContext& ctx, const Neighborhood& nb) {
                    const GapWindow& w = *nb.cur;
                    const Products x = products(ctx, nb.cur);
                    const RootExpr& mu = nb.cur.views().mu;
                    Clauses c;
                    c.iff(!is_even(w.N) && w.N > 1, ctx.dec.eq(mu * mu, 2 * x.fP),
                          "N odd > 1 <=> mu^2 = 2{mu sqrt p}");
                    return c.done();
                  });
    s.expected_exceptions = {2};
    out.push_back(std::move(s));
  }

  out.push_back(spec("par-52", Kind::Equivalence, "h even <=> mu > 2{mu sqrt p}", "n >= 2",
                     [](const EvalContext& ctx, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       if (w.n < 2) return out_of_domain();
                       const Products x = products(ctx, nb.cur);
                       Clauses c;
                       c.iff(ctx.dec.gt(nb.cur.views().mu, 2 * x.fP), is_even(w.h),
                             "mu > 2{mu sqrt p} <=> h even");
                       return c.done();
                     }));

  out.push_back(spec(
      "par-53", Kind::Universal,
      "h odd <=> 2{mu sqrt p} - 1 = {2 mu sqrt p} <=> {mu sqrt p} > 1/2; N even <=> mu^2 = "
      "2{mu sqrt p} - 1; h odd => floor(mu sqrt p) = (h - 1)/2",
      "n >= 2", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2) return out_of_domain();
        const auto& v = nb.cur.views();
        const Products x = products(ctx, nb.cur);
        const bool odd = !is_even(w.h);
        Clauses c;
        c.iff(ctx.dec.eq(2 * x.fP - Q(1), ctx.dec.frac(2 * x.P)), odd,
              "2{mu sqrt p} - 1 = {2 mu sqrt p} <=> h odd");
        c.iff(ctx.dec.gt(x.fP, Q(1, 2)), odd, "{mu sqrt p} > 1/2 <=> h odd");
        c.iff(ctx.dec.eq(v.mu * v.mu, 2 * x.fP - Q(1)), is_even(w.N),
              "mu^2 = 2{mu sqrt p} - 1 <=> N even");
        if (odd) c.require(2 * x.fl_P == to_int(w.h - 1), "floor(mu sqrt p) = (h - 1)/2");
        return c.done();
      }));

  out.push_back(spec("par-54", Kind::Equivalence, "h odd <=> mu < {mu sqrt p}", "n >= 2",
                     [](const EvalContext& ctx, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       if (w.n < 2) return out_of_domain();
                       const Products x = products(ctx, nb.cur);
                       Clauses c;
                       c.iff(ctx.dec.lt(nb.cur.views().mu, x.fP), !is_even(w.h),
                             "mu < {mu sqrt p} <=> h odd");
                       return c.done();
                     }));

  out.push_back(spec(
      "mono-55", Kind::Universal,
      "odd M with M^2 < p < q < (M+2)^2: {mu sqrt p} < {mu_q sqrt q}",
      "n >= 2; floor sqrt p odd, or floor sqrt p even with floor sqrt q equal",
      [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2 || (is_even(w.N) && w.straddle())) return out_of_domain();
        const Products x = products(ctx, nb.cur);
        Clauses c;
        c.require(ctx.dec.lt(x.fP, x.fQ), "{mu sqrt p} < {mu_q sqrt q}");
        return c.done();
      }));

  out.push_back(spec(
      "cor-56", Kind::Universal,
      "{mu_q sqrt q} - {mu sqrt p} < 1/2 when floor sqrt p = floor sqrt q",
      "n >= 2, same part", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2 || !w.same_part()) return out_of_domain();
        const Products x = products(ctx, nb.cur);
        Clauses c;
        c.require(ctx.dec.lt(x.fQ - x.fP, Q(1, 2)), "difference < 1/2");
        return c.done();
      }));

  out.push_back(spec(
      "cor-56-literal", Kind::Universal,
      "{mu_q sqrt q} - {mu sqrt p} < 1/2 when floor(mu sqrt p) = floor(mu sqrt q), the "
      "condition as printed; the proof uses floor sqrt p = floor sqrt q (see cor-56)",
      "n >= 2, floor(mu sqrt p) = floor(mu sqrt q)",
      [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2) return out_of_domain();
        const auto& v = nb.cur.views();
        const Products x = products(ctx, nb.cur);
        const RootExpr mu_sqrtq = v.sqrt_pq - I(w.N) * v.sqrt_q;
        if (ctx.dec.floor(mu_sqrtq) != x.fl_P) return out_of_domain();
        Clauses c;
        c.require(ctx.dec.lt(x.fQ - x.fP, Q(1, 2)), "difference < 1/2");
        return c.done();
      }));

  out.push_back(spec(
      "dpar-same-57", Kind::Universal,
      "D - (mu_q + mu) = 2N; sqrt p = D/2 - (mu_q + mu)/2 + mu; sqrt q = D/2 - (mu_q + mu)/2 "
      "+ mu_q",
      "same part", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (!w.same_part()) return out_of_domain();
        const auto& v = nb.cur.views();
        const RootExpr half = (v.D - v.mu_q - v.mu) / Rat(2);
        Clauses c;
        c.require(ctx.dec.eq(v.D - (v.mu_q + v.mu), I(2 * w.N)), "D - (mu_q + mu) = 2N");
        c.require(ctx.dec.eq(v.sqrt_p, half + v.mu), "sqrt p");
        c.require(ctx.dec.eq(v.sqrt_q, half + v.mu_q), "sqrt q");
        return c.done();
      }));

  out.push_back(spec(
      "dpar-same-58", Kind::Universal,
      "floor D even <=> mu_q + mu < 1, then {D} = mu_q + mu and D = 2(sqrt p - mu) + mu_q + mu "
      "= 2(sqrt q - mu_q) + mu_q + mu; odd <=> {D} = mu_q + mu - 1 = delta + 2mu - 1, then "
      "D = d/delta = 1 + 2(sqrt p - mu) + (mu_q + mu - 1) = 1 + 2(sqrt q - mu_q) + "
      "(mu_q + mu - 1)",
      "same part", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (!w.same_part()) return out_of_domain();
        const auto& v = nb.cur.views();
        const bool even = floor_D_even(ctx, v);
        const RootExpr sum = v.mu_q + v.mu;
        const RootExpr fD = ctx.dec.frac(v.D);
        Clauses c;
        c.iff(ctx.dec.lt(sum, Q(1)), even, "floor D even <=> mu_q + mu < 1");
        if (even) {
          c.require(ctx.dec.eq(fD, sum), "{D} = mu_q + mu");
          c.require(ctx.dec.eq(v.D, 2 * (v.sqrt_p - v.mu) + sum), "D via sqrt p");
          c.require(ctx.dec.eq(v.D, 2 * (v.sqrt_q - v.mu_q) + sum), "D via sqrt q");
        } else {
          c.require(ctx.dec.eq(fD, sum - Q(1)), "{D} = mu_q + mu - 1");
          c.require(ctx.dec.eq(fD, v.delta + 2 * v.mu - Q(1)), "{D} = delta + 2mu - 1");
          c.require(ctx.dec.eq(v.D, I(w.d) / v.delta), "D = d/delta");
          c.require(ctx.dec.eq(v.D, Q(1) + 2 * (v.sqrt_p - v.mu) + sum - Q(1)), "D via sqrt p");
          c.require(ctx.dec.eq(v.D, Q(1) + 2 * (v.sqrt_q - v.mu_q) + sum - Q(1)),
                    "D via sqrt q");
        }
        return c.done();
      }));

  out.push_back(spec(
      "dpar-same-59", Kind::Universal,
      "floor D even <=> 2mu < 1 - delta, then mu < 1/2; floor D odd <=> 2mu > 1 - delta",
      "same part", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (!w.same_part()) return out_of_domain();
        const auto& v = nb.cur.views();
        const bool even = floor_D_even(ctx, v);
        const Cmp k = ctx.dec.cmp(2 * v.mu, Q(1) - v.delta);
        Clauses c;
        c.iff(k == Cmp::Less, even, "2mu < 1 - delta <=> even");
        c.iff(k == Cmp::Greater, !even, "2mu > 1 - delta <=> odd");
        if (even) c.require(ctx.dec.lt(v.mu, Q(1, 2)), "mu < 1/2");
        return c.done();
      }));

  out.push_back(spec(
      "ids-510", Kind::Universal,
      "d = h_q - h; {h/mu} = mu; delta = mu_q - mu = h_q/mu_q - h/mu = {h_q/mu_q} - {h/mu}; "
      "d/2 = floor(mu_q sqrt q - mu sqrt p) with fractional part (mu_q^2 - mu^2)/2",
      "n >= 2, same part", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2 || !w.same_part()) return out_of_domain();
        const auto& v = nb.cur.views();
        const RootExpr rp = I(w.h) / v.mu;
        const RootExpr rq = I(w.hq) / v.mu_q;
        const RootExpr X = v.muq_sqrtq - v.mu_sqrtp;
        const RootExpr half_sq = (v.mu_q * v.mu_q - v.mu * v.mu) / Rat(2);
        Clauses c;
        c.require(w.d + w.h == w.hq, "d = h_q - h");
        c.require(ctx.dec.eq(ctx.dec.frac(rp), v.mu), "{h/mu} = mu");
        c.require(ctx.dec.eq(v.delta, v.mu_q - v.mu), "delta = mu_q - mu");
        c.require(ctx.dec.eq(v.delta, rq - rp), "delta = h_q/mu_q - h/mu");
        c.require(ctx.dec.eq(v.delta, ctx.dec.frac(rq) - ctx.dec.frac(rp)),
                  "delta = {h_q/mu_q} - {h/mu}");
        c.require(2 * ctx.dec.floor(X) == to_int(w.d), "floor = d/2");
        c.require(ctx.dec.eq(ctx.dec.frac(X), half_sq), "fractional part");
        c.require(ctx.dec.eq(X - half_sq, Q(static_cast<long>(w.d / 2))), "d/2 identity");
        return c.done();
      }));

  out.push_back(spec(
      "ids-511", Kind::Universal,
      "floor sqrt p = floor sqrt q => {mu_q sqrt q - mu sqrt p} = {mu_q sqrt q} - "
      "{mu sqrt p} and floor(mu_q sqrt q - mu sqrt p) = d/2 = floor(mu_q sqrt q) - "
      "floor(mu sqrt p)",
      "n >= 2, same part", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2 || !w.same_part()) return out_of_domain();
        const Products x = products(ctx, nb.cur);
        const RootExpr X = x.Q - x.P;
        const Int fl = ctx.dec.floor(X);
        Clauses c;
        c.require(ctx.dec.eq(X - RootExpr(Rat(fl)), x.fQ - x.fP), "fractional difference");
        c.require(2 * fl == to_int(w.d), "floor = d/2");
        c.require(fl == x.fl_Q - x.fl_P, "floor of difference = difference of floors");
        return c.done();
      }));

  out.push_back(spec(
      "ids-511-converse", Kind::Survey,
      "collect straddle n where {mu_q sqrt q - mu sqrt p} = {mu_q sqrt q} - {mu sqrt p} still "
      "holds; each hit contradicts the 'only if' direction",
      "n >= 2, straddle", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2 || !w.straddle()) return out_of_domain();
        const Products x = products(ctx, nb.cur);
        const RootExpr X = x.Q - x.P;
        if (ctx.dec.eq(ctx.dec.frac(X), x.fQ - x.fP))
          return holds("N = " + std::to_string(w.N) + (is_even(w.N) ? " even" : " odd"));
        return fails({});
      }));

  out.push_back(spec(
      "ids-512", Kind::Universal,
      "delta = mu_q + 1 - mu = h_q/mu_q - 1 - h/mu = {h_q/mu_q} + 1 - {h/mu}; d/2 - (sqrt p - "
      "mu) = mu_q sqrt q - mu sqrt p - (mu_q^2 - mu^2 - 1)/2",
      "n >= 2, straddle", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2 || !w.straddle()) return out_of_domain();
        const auto& v = nb.cur.views();
        const RootExpr rp = I(w.h) / v.mu;
        const RootExpr rq = I(w.hq) / v.mu_q;
        Clauses c;
        c.require(ctx.dec.eq(v.delta, v.mu_q + Q(1) - v.mu), "delta = mu_q + 1 - mu");
        c.require(ctx.dec.eq(v.delta, rq - Q(1) - rp), "delta = h_q/mu_q - 1 - h/mu");
        c.require(ctx.dec.eq(v.delta, ctx.dec.frac(rq) + Q(1) - ctx.dec.frac(rp)),
                  "fractional form");
        const RootExpr lhs = Q(static_cast<long>(w.d), 2) - (v.sqrt_p - v.mu);
        const RootExpr rhs = v.muq_sqrtq - v.mu_sqrtp -
                             (v.mu_q * v.mu_q - v.mu * v.mu - Q(1)) / Rat(2);
        c.require(ctx.dec.eq(lhs, rhs), "d/2 - (sqrt p - mu) identity");
        return c.done();
      }));

  out.push_back(spec(
      "ids-513", Kind::Universal,
      "Y = mu sqrt p - mu_q sqrt q: h even <=> {Y} = 1 + {mu sqrt p} - {mu_q sqrt q}, then "
      "floor Y = floor(mu sqrt p) - floor(mu_q sqrt q) - 1; h odd => {Y} = {mu sqrt p} - "
      "{mu_q sqrt q} and floor Y = floor(mu sqrt p) - floor(mu_q sqrt q)",
      "n >= 2, straddle", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2 || !w.straddle()) return out_of_domain();
        const Products x = products(ctx, nb.cur);
        const RootExpr Y = x.P - x.Q;
        const Int fl = ctx.dec.floor(Y);
        const RootExpr fY = Y - RootExpr(Rat(fl));
        const bool even = is_even(w.h);
        Clauses c;
        c.iff(ctx.dec.eq(fY, Q(1) + x.fP - x.fQ), even, "{Y} = 1 + ... <=> h even");
        if (even) {
          c.require(fl == x.fl_P - x.fl_Q - 1, "floor Y, h even");
        } else {
          c.require(ctx.dec.eq(fY, x.fP - x.fQ), "{Y}, h odd");
          c.require(fl == x.fl_P - x.fl_Q, "floor Y, h odd");
        }
        return c.done();
      }));

  out.push_back(spec(
      "ids-514", Kind::Universal,
      "sqrt p - mu = d/(2 delta) - (mu_q + mu + 1)/2 = D/2 - (mu_q + mu + 1)/2 = D/2 - (delta "
      "+ 2mu)/2; sqrt q = d/(2 delta) - (mu_q + mu - 1)/2 + mu_q = D/2 - (delta + 2mu - 2)/2 + "
      "mu_q",
      "n >= 2, straddle", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2 || !w.straddle()) return out_of_domain();
        const auto& v = nb.cur.views();
        const RootExpr d2 = I(w.d) / (2 * v.delta);
        const RootExpr hD = v.D / Rat(2);
        const RootExpr lhs = v.sqrt_p - v.mu;
        Clauses c;
        c.require(ctx.dec.eq(lhs, d2 - (v.mu_q + v.mu + Q(1)) / Rat(2)), "via d/(2 delta)");
        c.require(ctx.dec.eq(lhs, hD - (v.mu_q + v.mu + Q(1)) / Rat(2)), "via D/2");
        c.require(ctx.dec.eq(lhs, hD - (v.delta + 2 * v.mu) / Rat(2)), "via delta");
        c.require(ctx.dec.eq(v.sqrt_q, d2 - (v.mu_q + v.mu - Q(1)) / Rat(2) + v.mu_q),
                  "sqrt q via d/(2 delta)");
        c.require(ctx.dec.eq(v.sqrt_q, hD - (v.delta + 2 * v.mu - Q(2)) / Rat(2) + v.mu_q),
                  "sqrt q via delta");
        return c.done();
      }));

  out.push_back(spec(
      "ids-515", Kind::Universal,
      "floor D even <=> mu_q + mu > 1, then {D} = mu_q + mu - 1 = delta + 2mu - 2 and D = 2 + "
      "2(sqrt p - mu) + (mu_q + mu - 1) = 2(sqrt q - mu_q) + (mu_q + mu - 1); odd <=> "
      "{D} = mu_q + mu = delta + 2mu - 1, then D = 1 + 2(sqrt p - mu) + (mu_q + mu) = "
      "2(sqrt q - mu_q) - 1 + (mu_q + mu)",
      "straddle", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (!w.straddle()) return out_of_domain();
        const auto& v = nb.cur.views();
        const bool even = floor_D_even(ctx, v);
        const RootExpr sum = v.mu_q + v.mu;
        const RootExpr fD = ctx.dec.frac(v.D);
        const RootExpr bp = 2 * (v.sqrt_p - v.mu);
        const RootExpr bq = 2 * (v.sqrt_q - v.mu_q);
        Clauses c;
        c.iff(ctx.dec.gt(sum, Q(1)), even, "floor D even <=> mu_q + mu > 1");
        if (even) {
          c.require(ctx.dec.eq(fD, sum - Q(1)), "{D} = mu_q + mu - 1");
          c.require(ctx.dec.eq(fD, v.delta + 2 * v.mu - Q(2)), "{D} = delta + 2mu - 2");
          c.require(ctx.dec.eq(v.D, Q(2) + bp + sum - Q(1)), "D via sqrt p");
          c.require(ctx.dec.eq(v.D, bq + sum - Q(1)), "D via sqrt q");
        } else {
          c.require(ctx.dec.floor(v.D) == to_int(2 * w.N + 1), "floor D = 2N + 1");
          c.require(ctx.dec.eq(fD, sum), "{D} = mu_q + mu");
          c.require(ctx.dec.eq(fD, v.delta + 2 * v.mu - Q(1)), "{D} = delta + 2mu - 1");
          c.require(ctx.dec.eq(v.D, Q(1) + bp + sum), "D via sqrt p");
          c.require(ctx.dec.eq(v.D, bq - Q(1) + sum), "D via sqrt q");
        }
        return c.done();
      }));

  out.push_back(spec(
      "ids-516", Kind::Universal,
      "floor D even <=> 2mu_q > delta, then mu > 1 - delta/2 >= 1 - delta_4/2; odd <=> 2mu_q < "
      "delta, then mu < 1 - delta/2 and mu_q < delta_4/2",
      "straddle", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (!w.straddle()) return out_of_domain();
        const auto& v = nb.cur.views();
        const bool even = floor_D_even(ctx, v);
        const Cmp k = ctx.dec.cmp(2 * v.mu_q, v.delta);
        const RootExpr edge = Q(1) - v.delta / Rat(2);
        Clauses c;
        c.iff(k == Cmp::Greater, even, "2mu_q > delta <=> even");
        c.iff(k == Cmp::Less, !even, "2mu_q < delta <=> odd");
        if (even) {
          c.require(ctx.dec.gt(v.mu, edge), "mu > 1 - delta/2");
          c.require(ctx.dec.ge(edge, Q(1) - delta4() / Rat(2)), "1 - delta/2 >= 1 - delta_4/2");
        } else {
          c.require(ctx.dec.lt(v.mu, edge), "mu < 1 - delta/2");
          c.require(ctx.dec.lt(v.mu_q, delta4() / Rat(2)), "mu_q < delta_4/2");
        }
        return c.done();
      }));

  out.push_back(spec("survey-2mu", Kind::Survey,
                     "collect straddle n with mu <= 2 mu_q (the question asks whether mu > "
                     "2 mu_q always holds)",
                     "straddle", [](const EvalContext& ctx, const Neighborhood& nb) {
                       if (!nb.cur->straddle()) return out_of_domain();
                       const auto& v = nb.cur.views();
                       if (ctx.dec.le(v.mu, 2 * v.mu_q)) return holds();
                       return fails({});
                     }));

  out.push_back(spec("survey-muq-drop", Kind::Survey,
                     "collect straddle n with mu_q >= 1 - delta_4, where the sufficient "
                     "condition for mu > 2 mu_q is unavailable",
                     "straddle", [](const EvalContext& ctx, const Neighborhood& nb) {
                       if (!nb.cur->straddle()) return out_of_domain();
                       const auto& v = nb.cur.views();
                       if (ctx.dec.ge(v.mu_q, Q(1) - delta4()))
                         return holds(ctx.dec.gt(v.mu, 2 * v.mu_q) ? "mu > 2 mu_q"
                                                                    : "mu <= 2 mu_q");
                       return fails({});
                     }));
}

}  // namespace sqrtgap::detail
