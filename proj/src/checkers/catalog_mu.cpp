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

// The fractional part mu = sqrt p - N and the offset h = p - N^2.

#include <array>
#include <map>
#include <set>

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

// Binomial series coefficients of sqrt(1 + x) - 1, k = 1..9.
const std::array<Rat, 10>& series_coefs() {
  static const std::array<Rat, 10> c = [] {
    std::array<Rat, 10> out;
    Int fact2k = 1, factk = 1, four = 1;
    for (int k = 1; k <= 9; ++k) {
      fact2k *= (2 * k - 1) * (2 * k);
      factk *= k;
      four *= 4;
      Rat v(fact2k, four * (2 * k - 1) * factk * factk);
      v.canonicalize();
      out[k] = (k % 2 == 1) ? v : Rat(-v);
    }
    return out;
  }();
  return c;
}

bool is_pow2(uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

uint64_t block_start(uint64_t n) {
  uint64_t b = 1;
  while (b <= n / 2) b *= 2;
  return b;
}

// Running extremum of one quantity over dyadic blocks [2^b, 2^{b+1} - 1].
// A note is emitted at each block end together with the previous block's
// extremum, so the trend across blocks can be read off the witnesses.
class DyadicTrend : public Evaluator {
 public:
  using Value = std::function<RootExpr(const EvalContext&, const Win&)>;

  DyadicTrend(std::string label, bool maximum, Value f)
      : label_(std::move(label)), maximum_(maximum), f_(std::move(f)) {}

  void prepare(const EvalContext& ctx, uint64_t n_lo) override {
    best_.reset();
    prev_.reset();
    if (n_lo <= 1) return;
    const uint64_t b = block_start(n_lo);
    const uint64_t from = b >= 2 ? b / 2 : 1;
    if (from >= n_lo) return;
    WindowStream ws(ctx.store, from, n_lo - 1);
    while (auto w = ws.next()) update(ctx, Win(*w));
  }

  Outcome evaluate(const EvalContext& ctx, const Neighborhood& nb) override {
    const bool end = update(ctx, nb.cur);
    if (!end) return holds();
    const uint64_t n = nb.cur->n;
    std::string note = "block [" + std::to_string(block_start(n)) + ", " + std::to_string(n) +
                       "]: " + (maximum_ ? "max " : "min ") + label_ + " at n=" +
                       std::to_string(prev_->n) + " = " + to_decimal(prev_->v, 8);
    if (before_) {
      const Cmp c = ctx.dec.cmp(prev_->v, before_->v);
      note += c == Cmp::Less ? " (below previous block)"
                             : c == Cmp::Greater ? " (above previous block)" : " (equal)";
    }
    return notable(note);
  }

 private:
  struct Best {
    uint64_t n;
    RootExpr v;
  };

  // Returns true when w closes a block; the closed extremum moves to prev_.
  bool update(const EvalContext& ctx, const Win& w) {
    const RootExpr v = f_(ctx, w);
    if (!best_ || (maximum_ ? ctx.dec.gt(v, best_->v) : ctx.dec.lt(v, best_->v)))
      best_ = Best{w->n, v};
    if (!is_pow2(w->n + 1)) return false;
    before_ = prev_;
    prev_ = best_;
    best_.reset();
    return true;
  }

  std::string label_;
  bool maximum_;
  Value f_;
  std::optional<Best> best_;
  std::optional<Best> prev_;
  std::optional<Best> before_;
};

CheckerSpec trend(std::string id, std::string claim, std::string label, bool maximum,
                  DyadicTrend::Value f) {
  CheckerSpec s;
  s.id = std::move(id);
  s.kind = Kind::Trend;
  s.claim = std::move(claim);
  s.domain = "dyadic blocks of n";
  s.make = [label, maximum, f]() { return std::make_unique<DyadicTrend>(label, maximum, f); };
  return s;
}

// Windows with p = N^2 + 1: mu decreases along them.
class NSquarePlusOne : public Evaluator {
 public:
  void prepare(const EvalContext& ctx, uint64_t n_lo) override {
    last_N_ = 0;
    if (n_lo <= 2) return;
    const uint64_t p = ctx.store.nth_prime(n_lo);
    for (uint64_t N = isqrt(p - 1); N >= 2; --N) {
      if (N * N + 1 < p && ctx.store.is_prime(N * N + 1)) {
        last_N_ = N;
        return;
      }
    }
  }

  Outcome evaluate(const EvalContext& ctx, const Neighborhood& nb) override {
    const GapWindow& w = *nb.cur;
    if (w.n < 2) return out_of_domain();
    const auto& v = nb.cur.views();
    const RootExpr mu2 = v.mu * v.mu;
    const RootExpr N = I(w.N);
    const bool h1 = w.h == 1;
    Clauses c;
    c.require(ctx.dec.floor(2 * v.mu * N) == to_int(w.h - 1), "floor(2 mu N) = h - 1");
    c.require(ctx.dec.eq(ctx.dec.frac(2 * v.mu * N), Q(1) - mu2), "{2 mu N} = 1 - mu^2");
    c.iff(ctx.dec.eq(v.sqrt_p, (Q(1) - mu2) / (2 * v.mu) + v.mu), h1,
          "sqrt p = (1 - mu^2)/(2 mu) + mu <=> h = 1");
    c.iff(ctx.dec.eq(mu2 + 2 * v.mu * N - Q(1), Q(0)), h1, "mu^2 + 2 mu N = 1 <=> h = 1");
    const RootExpr ms = v.mu * v.sqrt_p;
    c.iff(ctx.dec.eq(ms, ctx.dec.frac(ms)), h1, "mu sqrt p = {mu sqrt p} <=> h = 1");
    c.iff(ctx.dec.eq(2 * ms - Q(1), ctx.dec.frac(2 * ms)), h1,
          "2 mu sqrt p - 1 = {2 mu sqrt p} <=> h = 1");
    if (h1) {
      c.require(ctx.dec.lt(v.mu, Q(1, 4)), "mu < 1/4");
      c.require(ctx.dec.eq(ctx.dec.frac(4 * v.sqrt_p), 4 * v.mu), "{4 sqrt p} = 4 mu");
      c.require(w.same_part(), "floor sqrt q = N");
      if (last_N_ != 0) {
        const RootExpr prev_mu = root(last_N_ * last_N_ + 1) - I(last_N_);
        c.require(ctx.dec.lt(v.mu, prev_mu), "mu below previous N^2 + 1 prime");
      }
      last_N_ = w.N;
    }
    return c.done();
  }

 private:
  uint64_t last_N_ = 0;
};

// For every offset h >= 1, mu decreases along primes N^2 + h.
class FixedOffsetMono : public Evaluator {
 public:
  void prepare(const EvalContext& ctx, uint64_t n_lo) override {
    last_.clear();
    if (n_lo <= 2) return;
    WindowStream ws(ctx.store, 2, n_lo - 1);
    while (auto w = ws.next()) last_.insert_or_assign(w->h, w->N);
  }

  Outcome evaluate(const EvalContext& ctx, const Neighborhood& nb) override {
    const GapWindow& w = *nb.cur;
    if (w.n < 2) return out_of_domain();
    Clauses c;
    auto it = last_.find(w.h);
    if (it != last_.end()) {
      const uint64_t M = it->second;
      const RootExpr prev_mu = root(M * M + w.h) - I(M);
      c.require(ctx.dec.lt(nb.cur.views().mu, prev_mu), "mu decreasing for fixed h");
    }
    last_.insert_or_assign(w.h, w.N);
    return c.done();
  }

 private:
  std::map<uint64_t, uint64_t> last_;  // h -> N of the latest prime N^2 + h
};

class NewOffsets : public Evaluator {
 public:
  void prepare(const EvalContext& ctx, uint64_t n_lo) override {
    seen_.clear();
    if (n_lo <= 1) return;
    WindowStream ws(ctx.store, 1, n_lo - 1);
    while (auto w = ws.next()) seen_.insert(w->h);
  }
  Outcome evaluate(const EvalContext&, const Neighborhood& nb) override {
    if (seen_.insert(nb.cur->h).second) return holds("first h = " + std::to_string(nb.cur->h));
    return fails({});
  }

 private:
  std::set<uint64_t> seen_;
};

}  // namespace

void register_mu(std::vector<CheckerSpec>& out) {
  out.push_back(spec(
      "h-def", Kind::Universal,
      "1 <= h <= 2N, h != N, h and N of opposite parity, (h - mu^2)/mu = 2N", "n >= 2",
      [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2) return out_of_domain();
        const auto& v = nb.cur.views();
        Clauses c;
        c.require(w.h >= 1 && w.h <= 2 * w.N, "1 <= h <= 2N");
        c.require(w.h != w.N, "h != N");
        c.require(is_even(w.h) != is_even(w.N), "opposite parity");
        c.require(ctx.dec.eq((I(w.h) - v.mu * v.mu) / v.mu, I(2 * w.N)),
                  "(h - mu^2)/mu = 2N");
        c.require(ctx.dec.eq(v.sqrt_p, (I(w.h) / v.mu - v.mu) / Rat(2) + v.mu),
                  "sqrt p = (h/mu - mu)/2 + mu");
        return c.done();
      }));

  out.push_back(spec(
      "mu-bounds", Kind::Universal,
      "h/(2 sqrt p) < mu < h/(2N) <= 1; 2 mu N < h < 2 mu sqrt p; mu < h/(D - 1) (same part) "
      "or h/(2 sqrt p - 1) (straddle); h/(2N) - h^2/(8N^3) < mu",
      "n >= 2", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2) return out_of_domain();
        const auto& v = nb.cur.views();
        const RootExpr h = I(w.h);
        const Rat upper = rat(to_int(w.h), to_int(2 * w.N));
        Clauses c;
        c.require(ctx.dec.lt(h / (2 * v.sqrt_p), v.mu), "h/(2 sqrt p) < mu");
        c.require(ctx.dec.lt(v.mu, upper), "mu < h/(2N)");
        c.require(upper <= 1, "h/(2N) <= 1");
        c.require(ctx.dec.lt(2 * v.mu * I(w.N), h), "2 mu N < h");
        c.require(ctx.dec.lt(h, 2 * v.mu * v.sqrt_p), "h < 2 mu sqrt p");
        c.require(ctx.dec.eq(2 * v.mu * v.sqrt_p, 2 * v.mu * I(w.N) + 2 * v.mu * v.mu),
                  "2 mu sqrt p = 2 mu N + 2 mu^2");
        if (w.same_part())
          c.require(ctx.dec.lt(v.mu, h / (v.D - Q(1))), "mu < h/(D - 1)");
        else
          c.require(ctx.dec.lt(v.mu, h / (2 * v.sqrt_p - Q(1))), "mu < h/(2 sqrt p - 1)");
        const Rat N3 = R(w.N) * R(w.N) * R(w.N);
        c.require(ctx.dec.lt(RootExpr(upper - R(w.h) * R(w.h) / (8 * N3)), v.mu),
                  "h/(2N) - h^2/(8N^3) < mu");
        return c.done();
      }));

  out.push_back(spec("mu-taylor-literal", Kind::Survey,
                     "collect n with h/(2N) - h^2/(8N^4) < mu (the N^4 variant)", "n >= 2",
                     [](const EvalContext& ctx, const Neighborhood& nb) {
                       const GapWindow& w = *nb.cur;
                       if (w.n < 2) return out_of_domain();
                       const Rat N2 = R(w.N) * R(w.N);
                       const Rat lower =
                           rat(to_int(w.h), to_int(2 * w.N)) - R(w.h) * R(w.h) / (8 * N2 * N2);
                       if (ctx.dec.lt(RootExpr(lower), nb.cur.views().mu)) return holds();
                       return fails({});
                     }));

  out.push_back(spec(
      "lemma-42", Kind::Universal,
      "delta = mu_q - mu <=> same part; else delta = 1 + mu_q - mu and mu > mu_q, with "
      "mu - mu_q >= 1 - delta_4, equality iff n = 4",
      "n >= 1", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        const auto& v = nb.cur.views();
        Clauses c;
        c.iff(ctx.dec.eq(v.delta, v.mu_q - v.mu), w.same_part(), "delta = mu_q - mu <=> same");
        if (!w.same_part()) {
          c.require(ctx.dec.eq(v.delta, Q(1) + v.mu_q - v.mu), "delta = 1 + mu_q - mu");
          c.require(ctx.dec.gt(v.mu, v.mu_q), "mu > mu_q");
          const Cmp k = ctx.dec.cmp(v.mu - v.mu_q, Q(1) - delta4());
          c.require(k != Cmp::Less, "mu - mu_q >= 1 - delta_4");
          c.iff(k == Cmp::Equal, w.n == 4, "equality iff n = 4");
        }
        return c.done();
      }));

  {
    auto s = spec("mu-drop-strict", Kind::ExceptionSet,
                  "straddle: mu - mu_q > 1 - delta_4 (strict)", "straddle windows",
                  [](const EvalContext& ctx, const Neighborhood& nb) {
                    if (!nb.cur->straddle()) return out_of_domain();
                    const auto& v = nb.cur.views();
                    Clauses c;
                    c.require(ctx.dec.gt(v.mu - v.mu_q, Q(1) - delta4()),
                              "mu - mu_q > 1 - delta_4");
                    return c.done();
                  });
    s.expected_exceptions = {4};
    out.push_back(std::move(s));
  }

  out.push_back(spec(
      "thm-43", Kind::Universal,
      "floor(h/mu) = 2N, {h/mu} = mu, h/mu = 2 sqrt(p - h) + mu, "
      "mu = h/(sqrt p + N) = h/(2 sqrt p - mu)",
      "n >= 2", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2) return out_of_domain();
        const auto& v = nb.cur.views();
        const RootExpr h = I(w.h);
        const RootExpr r = h / v.mu;
        Clauses c;
        c.require(ctx.dec.floor(r) == to_int(2 * w.N), "floor(h/mu) = 2N");
        c.require(ctx.dec.eq(ctx.dec.frac(r), v.mu), "{h/mu} = mu");
        c.require(ctx.dec.eq(r, 2 * root(w.p - w.h) + v.mu), "h/mu = 2 sqrt(p - h) + mu");
        c.require(ctx.dec.eq(v.mu, h / (v.sqrt_p + I(w.N))), "mu = h/(sqrt p + N)");
        c.require(ctx.dec.eq(v.mu, h / (2 * v.sqrt_p - v.mu)), "mu = h/(2 sqrt p - mu)");
        return c.done();
      }));

  out.push_back(spec(
      "mu-series", Kind::Universal,
      "mu = sum_k (-1)^(k-1) (2k)! / (4^k (2k-1) (k!)^2) h^k / N^(2k-1); for K = 1..8 the "
      "remainder has the sign of term K+1 and is smaller in size",
      "n >= 3", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 3) return out_of_domain();
        const auto& coef = series_coefs();
        const RootExpr& mu = nb.cur.views().mu;
        const Rat x = rat(to_int(w.h), to_int(w.N * w.N));
        std::array<Rat, 10> term;
        Rat xk = R(w.N);  // N x^k = h^k / N^(2k-1)
        for (int k = 1; k <= 9; ++k) {
          xk *= x;
          term[k] = coef[k] * xk;
        }
        Clauses c;
        Rat partial = 0;
        for (int K = 1; K <= 8; ++K) {
          partial += term[K];
          const RootExpr rem = mu - RootExpr(partial);
          const Rat next = term[K + 1];
          const Cmp s = ctx.dec.cmp(rem, Q(0));
          const bool sign_ok = (sgn(next) > 0) ? s == Cmp::Greater : s == Cmp::Less;
          c.require(sign_ok, "sign of remainder, K = " + std::to_string(K));
          c.require(ctx.dec.lt(sgn(next) > 0 ? rem : -rem, RootExpr(abs(next))),
                    "size of remainder, K = " + std::to_string(K));
        }
        return c.done();
      }));

  out.push_back(spec(
      "ratio-frac", Kind::Universal,
      "{sqrt(q/p)} = delta/sqrt p <= sqrt(5/3) - 1 < 1/3 (equality iff n = 2), < 1/4 for "
      "n >= 5; 1 = sqrt(q/p) - delta/sqrt p = d/(sqrt p delta) - sqrt(q/p) = D/sqrt p - "
      "sqrt(q/p) = d/(sqrt q delta) - sqrt(p/q); n >= 2: 1 = sqrt(q/p) - 2{sqrt q delta}/"
      "(sqrt p delta) = sqrt(q/p) + 2{sqrt p delta}/(sqrt p delta) - 2/(sqrt p delta)",
      "n >= 1", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        const auto& v = nb.cur.views();
        const RootExpr ratio = v.sqrt_pq / R(w.p);  // sqrt(q/p)
        const RootExpr rf = v.ratio_frac;
        const RootExpr bound = root(15) / Rat(3) - Q(1);
        const RootExpr one = Q(1);
        const RootExpr d = I(w.d);
        Clauses c;
        c.require(ctx.dec.eq(ctx.dec.frac(ratio), rf), "{sqrt(q/p)} = ratio_frac");
        c.require(ctx.dec.eq(rf, v.delta / v.sqrt_p), "ratio_frac = delta/sqrt p");
        const Cmp k = ctx.dec.cmp(rf, bound);
        c.require(k != Cmp::Greater, "<= sqrt(5/3) - 1");
        c.iff(k == Cmp::Equal, w.n == 2, "equality iff n = 2");
        c.require(ctx.dec.lt(bound, Q(1, 3)), "sqrt(5/3) - 1 < 1/3");
        if (w.n >= 5) c.require(ctx.dec.lt(rf, Q(1, 4)), "< 1/4");
        c.require(ctx.dec.eq(ratio - rf, one), "sqrt(q/p) - delta/sqrt p = 1");
        c.require(ctx.dec.eq(d / v.sqrtp_delta - ratio, one), "d/(sqrt p delta) - sqrt(q/p)");
        c.require(ctx.dec.eq(v.D / v.sqrt_p - ratio, one), "D/sqrt p - sqrt(q/p)");
        c.require(ctx.dec.eq(d / v.sqrtq_delta - v.sqrt_pq / R(w.q), one),
                  "d/(sqrt q delta) - sqrt(p/q)");
        c.require(ctx.dec.eq(ctx.dec.frac(d / v.sqrtp_delta), rf), "{d/(sqrt p delta)}");
        if (w.n >= 2) {
          const RootExpr fq = ctx.dec.frac(v.sqrtq_delta);
          const RootExpr fp = ctx.dec.frac(v.sqrtp_delta);
          c.require(ctx.dec.eq(ratio - 2 * fq / v.sqrtp_delta, one), "fractional form q");
          c.require(
              ctx.dec.eq(ratio + 2 * fp / v.sqrtp_delta - Q(2) / v.sqrtp_delta, one),
              "fractional form p");
        }
        return c.done();
      }));

  out.push_back(trend("trend-delta",
                      "largest delta per dyadic block of n; informational, not a limit proof",
                      "delta", true, [](const EvalContext&, const Win& w) {
                        return w.views().delta;
                      }));
  out.push_back(trend("trend-mu-min", "smallest mu per dyadic block of n; informational", "mu",
                      false, [](const EvalContext&, const Win& w) { return w.views().mu; }));
  out.push_back(trend("trend-mu-max", "largest mu per dyadic block of n; informational", "mu",
                      true, [](const EvalContext&, const Win& w) { return w.views().mu; }));
  out.push_back(trend("trend-frac",
                      "largest {sqrt q delta} per dyadic block of n; informational",
                      "{sqrt q delta}", true, [](const EvalContext& ctx, const Win& w) {
                        return ctx.dec.frac(w.views().sqrtq_delta);
                      }));

  {
    CheckerSpec s;
    s.id = "n2p1-family";
    s.kind = Kind::Universal;
    s.claim =
        "floor(2 mu N) = h - 1 and {2 mu N} = 1 - mu^2; h = 1 <=> sqrt p = (1 - mu^2)/(2 mu) + "
        "mu <=> mu^2 + 2 mu N = 1 <=> mu sqrt p < 1 <=> floor(2 mu sqrt p) = 1; along h = 1: "
        "mu decreasing, mu < 1/4, {4 sqrt p} = 4 mu, floor sqrt q = N";
    s.domain = "n >= 2";
    s.make = stateful<NSquarePlusOne>();
    out.push_back(std::move(s));
  }

  {
    auto s = spec("twin-sq", Kind::ExceptionSet,
                  "twin (p, p + 2): p + 2 is not M^2 + 1; hard: n >= 3 twins share floor sqrt, "
                  "p + 2 = (N+1)^2 + 1 <=> h = 2N",
                  "d = 2", [](const EvalContext&, const Neighborhood& nb) {
                    const GapWindow& w = *nb.cur;
                    if (w.d != 2) return out_of_domain();
                    const bool square_plus_one = w.hq == 1;
                    Clauses c;
                    if (w.n >= 3) c.require_hard(w.same_part(), "same floor sqrt");
                    c.require_hard((w.q == (w.N + 1) * (w.N + 1) + 1) == (w.h == 2 * w.N),
                                   "q = (N+1)^2 + 1 <=> h = 2N");
                    c.require(!square_plus_one, "q != M^2 + 1");
                    return c.done();
                  });
    s.expected_exceptions = {2};
    out.push_back(std::move(s));
  }

  {
    CheckerSpec s;
    s.id = "h-fixed-mono";
    s.kind = Kind::Universal;
    s.claim = "for fixed h, mu decreases along primes N^2 + h as N grows";
    s.domain = "n >= 2";
    s.make = stateful<FixedOffsetMono>();
    out.push_back(std::move(s));
  }

  {
    CheckerSpec s;
    s.id = "survey-h-values";
    s.kind = Kind::Survey;
    s.claim = "collect n where h = p - N^2 takes a value not seen before";
    s.domain = "n >= 1";
    s.make = stateful<NewOffsets>();
    out.push_back(std::move(s));
  }
}

}  // namespace sqrtgap::detail
