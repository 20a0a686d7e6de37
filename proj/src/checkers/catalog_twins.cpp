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

// Orderings of delta along twin prime indices (d = 2).

#include <deque>

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

template <class T>
CheckerSpec spec_of(std::string id, Kind kind, std::string claim, std::string domain) {
  CheckerSpec s;
  s.id = std::move(id);
  s.kind = kind;
  s.claim = std::move(claim);
  s.domain = std::move(domain);
  s.make = stateful<T>();
  return s;
}

bool twin(const GapWindow& w) { return w.d == 2; }

// Up to `count` twin windows with index below n_lo, oldest first.
std::deque<GapWindow> twins_before(const PrimeStore& store, uint64_t n_lo, std::size_t count) {
  std::deque<GapWindow> out;
  for (uint64_t k = n_lo; k-- > 1 && out.size() < count;) {
    GapWindow w = make_window(store, k);
    if (twin(w)) out.push_front(w);
  }
  return out;
}

// sqrt(a) * sqrt(b) for primes a != b.
RootExpr rr(uint64_t a, uint64_t b) { return RootExpr::sqrt(to_int(a) * to_int(b)); }

// ---------------------------------------------------------------- sampled pairs

// Each twin m2 is paired with m1 = 2 and with the three twins before it.
class TwinPairs : public Evaluator {
 public:
  void prepare(const EvalContext& ctx, uint64_t n_lo) override {
    recent_ = twins_before(ctx.store, n_lo, kRecent);
    first_.reset();
    if (n_lo > 2) first_ = make_window(ctx.store, 2);
  }

  Outcome evaluate(const EvalContext& ctx, const Neighborhood& nb) override {
    const GapWindow& w = *nb.cur;
    if (!twin(w) || w.n < 3) {
      if (twin(w)) remember(w);
      return out_of_domain();
    }
    std::vector<GapWindow> firsts;
    if (first_) firsts.push_back(*first_);
    for (const auto& t : recent_)
      if (!first_ || t.n != first_->n) firsts.push_back(t);
    Clauses c;
    for (const auto& m1 : firsts) check(ctx, Win(m1), nb.cur, c);
    remember(w);
    return c.done();
  }

 protected:
  virtual void check(const EvalContext& ctx, const Win& m1, const Win& m2, Clauses& c) = 0;

 private:
  static constexpr std::size_t kRecent = 3;
  void remember(const GapWindow& w) {
    if (w.n == 2) first_ = w;
    recent_.push_back(w);
    if (recent_.size() > kRecent) recent_.pop_front();
  }
  std::deque<GapWindow> recent_;
  std::optional<GapWindow> first_;
};

class Chain92 : public TwinPairs {
  void check(const EvalContext& ctx, const Win& a, const Win& b, Clauses& c) override {
    const auto& u = a.views();
    const auto& v = b.views();
    const uint64_t P1 = a->p, Q1 = a->q, P2 = b->p;
    const Rat d1 = R(a->d), d2 = R(b->d);
    const RootExpr t1 = rr(P2, Q1) / R(Q1);
    const RootExpr t2 = root_prime(Q1) * v.D / (R(Q1) * d2);
    const RootExpr t3 = Rat(2) * (u.delta / d1) * (v.D / d2);
    const RootExpr t4 = u.delta * v.D / d2;
    const RootExpr t5 = v.D * u.delta / d1;
    const RootExpr t6 = root_prime(P1) * v.D / (R(P1) * d2);
    const RootExpr t7 = v.D * root_prime(P1) / (Rat(2) * R(P1));
    c.require(ctx.dec.eq(u.delta * u.D, Q(2)) && ctx.dec.eq(v.delta * v.D, Q(2)),
              "delta D = 2 at both twins");
    c.require(P2 >= Q1 && ctx.dec.le(Q(1), t1), "1 <= sqrt(p_m2/p_{m1+1})");
    c.require(ctx.dec.lt(t1, t2), "t1 < t2");
    c.require(ctx.dec.lt(t2, t3), "t2 < t3");
    c.require(ctx.dec.eq(t3, t4) && ctx.dec.eq(t4, t5), "t3 = t4 = t5");
    c.require(ctx.dec.lt(t5, t6), "t5 < t6");
    c.require(ctx.dec.eq(t6, t7), "t6 = t7");
  }
};

class Chain93 : public TwinPairs {
  void check(const EvalContext& ctx, const Win& a, const Win& b, Clauses& c) override {
    const auto& u = a.views();
    const auto& v = b.views();
    const RootExpr s12 = rr(a->q, b->q) - rr(a->q, b->p);  // sqrt p_{m1+1} delta_m2
    const RootExpr s21 = rr(b->q, a->q) - rr(b->q, a->p);  // sqrt p_{m2+1} delta_m1
    c.require(ctx.dec.lt(s12, Q(1)), "sqrt p_{m1+1} delta_m2 < 1");
    c.require(ctx.dec.lt(Q(1), v.sqrtq_delta), "1 < sqrt p_{m2+1} delta_m2");
    c.require(ctx.dec.lt(v.sqrtq_delta, u.sqrtq_delta), "... < sqrt p_{m1+1} delta_m1");
    c.require(ctx.dec.lt(u.sqrtq_delta, s21), "... < sqrt p_{m2+1} delta_m1");
    c.require(ctx.dec.lt(u.sqrtq_delta, Q(5, 4)), "sqrt p_{m1+1} delta_m1 < 5/4");
  }
};

class Ineq94 : public TwinPairs {
  void check(const EvalContext& ctx, const Win& a, const Win& b, Clauses& c) override {
    const RootExpr ratio = rr(a->p, a->q) / R(a->q);  // sqrt(p_m1 / p_{m1+1})
    c.require(ctx.dec.lt(2 * b.views().delta, a.views().delta * (Q(1) + ratio)),
              "2 delta_m2 < delta_m1 (1 + sqrt(p_m1/p_{m1+1}))");
  }
};

// ---------------------------------------------------------------- record lows

// Extremes over all n below the current index, for the twin record claims.
class Records : public Evaluator {
 public:
  void prepare(const EvalContext& ctx, uint64_t n_lo) override {
    min_delta_.reset();
    min_fq_.reset();
    max_fp_.reset();
    if (n_lo <= 1) return;
    WindowStream ws(ctx.store, 1, n_lo - 1);
    while (auto w = ws.next()) absorb(ctx, Win(*w));
  }

 protected:
  struct Vals {
    RootExpr delta, fq, fp;
  };
  static Vals vals(const EvalContext& ctx, const Win& w) {
    const auto& v = w.views();
    return {v.delta, ctx.dec.frac(v.sqrtq_delta), ctx.dec.frac(v.sqrtp_delta)};
  }
  void absorb(const EvalContext& ctx, const Win& w) { absorb(ctx, vals(ctx, w)); }
  void absorb(const EvalContext& ctx, const Vals& x) {
    if (!min_delta_ || ctx.dec.lt(x.delta, *min_delta_)) min_delta_ = x.delta;
    if (!min_fq_ || ctx.dec.lt(x.fq, *min_fq_)) min_fq_ = x.fq;
    if (!max_fp_ || ctx.dec.gt(x.fp, *max_fp_)) max_fp_ = x.fp;
  }
  std::optional<RootExpr> min_delta_, min_fq_, max_fp_;
};

class LowAtTwin : public Records {
 public:
  Outcome evaluate(const EvalContext& ctx, const Neighborhood& nb) override {
    const GapWindow& w = *nb.cur;
    const Vals x = vals(ctx, nb.cur);
    Outcome o = out_of_domain();
    if (w.n >= 5 && twin(w)) {
      Clauses c;
      c.require(ctx.dec.lt(x.delta, *min_delta_), "delta_m below every earlier delta");
      o = c.done();
    }
    absorb(ctx, x);
    return o;
  }
};

class Cor96 : public Records {
 public:
  Outcome evaluate(const EvalContext& ctx, const Neighborhood& nb) override {
    const GapWindow& w = *nb.cur;
    const Vals x = vals(ctx, nb.cur);
    Outcome o = out_of_domain();
    if (w.n >= 5 && twin(w)) {
      Clauses c;
      c.require(ctx.dec.lt(x.fq, *min_fq_), "{sqrt q delta} below every earlier value");
      c.require(ctx.dec.gt(x.fp, *max_fp_), "{sqrt p delta} above every earlier value");
      o = c.done();
    }
    absorb(ctx, x);
    return o;
  }
};

class Cor910 : public Records {
 public:
  Outcome evaluate(const EvalContext& ctx, const Neighborhood& nb) override {
    const GapWindow& w = *nb.cur;
    const Vals x = vals(ctx, nb.cur);
    Outcome o = out_of_domain();
    if (w.n >= 5) {
      Clauses c;
      if (ctx.dec.lt(x.delta, *min_delta_)) c.require(twin(w), "record low delta => d = 2");
      o = c.done();
    }
    absorb(ctx, x);
    return o;
  }
};

// ---------------------------------------------------------------- twin gaps

// Buffers the indices strictly between consecutive twins m1 < m2 and checks
// them when m2 arrives; the outcome is recorded at m2.
class TwinGaps : public Evaluator {
 public:
  void prepare(const EvalContext& ctx, uint64_t n_lo) override {
    m1_.reset();
    pending_.clear();
    auto prev = twins_before(ctx.store, n_lo, 1);
    if (prev.empty()) return;
    m1_ = prev.front();
    if (m1_->n + 1 <= n_lo - 1) {
      WindowStream ws(ctx.store, m1_->n + 1, n_lo - 1);
      while (auto w = ws.next()) pending_.emplace_back(*w);
    }
  }

  Outcome evaluate(const EvalContext& ctx, const Neighborhood& nb) override {
    const GapWindow& w = *nb.cur;
    if (!twin(w)) {
      if (m1_) pending_.push_back(nb.cur);
      return out_of_domain();
    }
    Outcome o = out_of_domain();
    if (m1_ && m1_->n >= 2) o = check(ctx, Win(*m1_), nb.cur, pending_);
    m1_ = w;
    pending_.clear();
    return o;
  }

 protected:
  virtual Outcome check(const EvalContext& ctx, const Win& m1, const Win& m2,
                        const std::vector<Win>& between) = 0;

 private:
  std::optional<GapWindow> m1_;
  std::vector<Win> pending_;
};

class GapsBetweenTwins : public TwinGaps {
  Outcome check(const EvalContext& ctx, const Win& a, const Win&,
                const std::vector<Win>& between) override {
    const auto& u = a.views();
    Clauses c;
    for (const auto& n : between) {
      const auto& v = n.views();
      c.require_hard(n->d >= 4, "d_n >= 4 between consecutive twins");
      c.require(ctx.dec.gt(I(n->d) * u.D, 2 * v.D), "d_n D_m1 > 2 D_n");
      c.require(ctx.dec.gt(v.delta, u.delta), "delta_n > delta_m1");
    }
    return c.done();
  }
};

class Cor99 : public TwinGaps {
  Outcome check(const EvalContext& ctx, const Win& a, const Win& b,
                const std::vector<Win>& between) override {
    const auto& u = a.views();
    const auto& v2 = b.views();
    Clauses c;
    for (const auto& n : between) {
      const auto& v = n.views();
      const RootExpr two_over_D = Rat(2) * v.delta / R(n->d);
      c.require(ctx.dec.gt(v.delta, u.delta), "delta_n > delta_m1");
      c.require(ctx.dec.gt(u.delta, two_over_D), "delta_m1 > 2/D_n");
      c.require(ctx.dec.gt(two_over_D, v2.delta), "2/D_n > delta_m2");
      c.require(ctx.dec.gt(v.delta - v2.delta, v.delta - u.delta), "delta_n - delta_m2 larger");
    }
    return c.done();
  }
};

class AlphaProps : public TwinGaps {
  Outcome check(const EvalContext& ctx, const Win& a, const Win& b,
                const std::vector<Win>& between) override {
    const RootExpr half_root2 = root(2) / Rat(2);
    const RootExpr a1 = half_root2 - a.views().delta;
    const RootExpr a2 = half_root2 - b.views().delta;
    const RootExpr inv_D1 = a.views().delta / R(a->d);
    Clauses c;
    for (const auto& n : between) {
      const auto& v = n.views();
      const RootExpr an = half_root2 - v.delta;
      const RootExpr dn_Dn = R(n->d) * (v.delta / R(n->d));
      c.require(ctx.dec.eq(a1, an + (v.delta - a.views().delta)), "alpha_m1 = alpha_n + diff");
      c.require(ctx.dec.eq(a1, an + (dn_Dn - 2 * inv_D1)), "alpha_m1 via d/D");
      c.require(ctx.dec.gt(a1, an), "alpha_m1 > alpha_n");
      const RootExpr mid = an + v.delta * (Q(1) - Q(2) / R(n->d));
      c.require(ctx.dec.eq(mid, an + Rat(to_int(n->d - 2)) * v.delta / R(n->d)),
                "alpha_n + (d_n - 2)/D_n form");
      c.require(ctx.dec.gt(a2, mid), "alpha_m2 > alpha_n + delta_n(1 - 2/d_n)");
      c.require(ctx.dec.gt(mid, a1), "... > alpha_m1");
    }
    return c.done();
  }
};

class Postulate : public TwinGaps {
  Outcome check(const EvalContext& ctx, const Win& a, const Win& b,
                const std::vector<Win>&) override {
    const auto& u = a.views();
    const auto& v = b.views();
    std::string note;
    auto flag = [&note](bool bad, const char* what) {
      if (bad) note += (note.empty() ? "" : ", ") + std::string(what);
    };
    flag(ctx.dec.ge(2 * u.delta, 3 * v.delta), "delta_m1/delta_m2 >= 3/2");
    flag(ctx.dec.le(v.delta, u.delta - v.delta), "delta_m2 <= delta_m1 - delta_m2");
    flag(ctx.dec.ge(root(2) * v.D, 2 * u.D), "D_m1/D_m2 <= sqrt2/2");
    if (note.empty()) return fails({});
    return holds("m1 = " + std::to_string(a->n) + ": " + note);
  }
};

// ---------------------------------------------------------------- same band

class Band913 : public Evaluator {
 public:
  void prepare(const EvalContext& ctx, uint64_t n_lo) override {
    band_.clear();
    band_N_ = 0;
    if (n_lo <= 3) return;
    const uint64_t p = ctx.store.nth_prime(n_lo);
    band_N_ = isqrt(p);
    const uint64_t first = ctx.store.pi(band_N_ * band_N_) + 1;
    if (first > n_lo - 1) return;
    WindowStream ws(ctx.store, first, n_lo - 1);
    while (auto w = ws.next())
      if (twin(*w) && w->n >= 3) band_.push_back(w->p);
  }

  Outcome evaluate(const EvalContext&, const Neighborhood& nb) override {
    const GapWindow& w = *nb.cur;
    if (w.N != band_N_) {
      band_N_ = w.N;
      band_.clear();
    }
    if (!twin(w) || w.n < 3) return out_of_domain();
    Outcome o = out_of_domain();
    if (!band_.empty()) {
      Clauses c;
      for (uint64_t p1 : band_) c.require(mul(31, p1) > mul(25, w.p), "31 p_m1 > 25 p_m2");
      c.note("p_m1 = " + std::to_string(band_.front()) + ", p_m2 = " + std::to_string(w.p));
      c.mark();
      o = c.done();
    }
    band_.push_back(w.p);
    return o;
  }

 private:
  uint64_t band_N_ = 0;
  std::vector<uint64_t> band_;
};

}  // namespace

void register_twins(std::vector<CheckerSpec>& out) {
  out.push_back(spec(
      "twin-91", Kind::Equivalence,
      "d = 2 <=> sqrt p delta = {sqrt p delta} <=> sqrt q delta = 1 + {sqrt q delta} <=> "
      "delta^2 + 2 sqrt p delta = 2 <=> 1/delta - 1/D = sqrt p <=> sqrt q delta + "
      "{sqrt p delta} = 2",
      "n >= 2", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2) return out_of_domain();
        const auto& v = nb.cur.views();
        const bool t = twin(w);
        const RootExpr fp = ctx.dec.frac(v.sqrtp_delta);
        const RootExpr fq = ctx.dec.frac(v.sqrtq_delta);
        const Rat d = R(w.d);
        Clauses c;
        c.iff(ctx.dec.eq(v.sqrtp_delta, fp), t, "item 2");
        c.iff(ctx.dec.eq(v.sqrtq_delta, Q(1) + fq), t, "item 3");
        c.iff(ctx.dec.eq(v.delta * v.delta + 2 * v.sqrtp_delta, Q(2)), t, "item 4");
        c.iff(ctx.dec.eq(v.D / d - v.delta / d, v.sqrt_p), t, "1/delta - 1/D = sqrt p");
        c.iff(ctx.dec.eq(v.D, v.delta / (Q(1) - v.sqrtp_delta)), t,
              "D = delta/(1 - sqrt p delta)");
        c.iff(ctx.dec.eq(v.sqrtq_delta + fp, Q(2)), t, "sqrt q delta + {sqrt p delta} = 2");
        return c.done();
      }));

  out.push_back(spec_of<Chain92>(
      "twin-92", Kind::Universal,
      "twins m1 < m2: 1 <= sqrt(p_m2/p_{m1+1}) < 1/(sqrt p_{m1+1} delta_m2) < 2/(D_m1 delta_m2) "
      "= delta_m1/delta_m2 = D_m2/D_m1 < 1/(sqrt p_m1 delta_m2) = D_m2/(2 sqrt p_m1)",
      "twin m2 >= 3 paired with m1 = 2 and the three preceding twins"));

  out.push_back(spec_of<Chain93>(
      "twin-93", Kind::Universal,
      "twins m1 < m2: sqrt p_{m1+1} delta_m2 < 1 < sqrt p_{m2+1} delta_m2 < sqrt p_{m1+1} "
      "delta_m1 < sqrt p_{m2+1} delta_m1; sqrt p_{m1+1} delta_m1 < 5/4",
      "twin m2 >= 3 paired with m1 = 2 and the three preceding twins"));

  out.push_back(spec_of<Ineq94>(
      "twin-94", Kind::Universal,
      "twins m1 < m2: 2 delta_m2 < delta_m1 (1 + sqrt(p_m1/p_{m1+1}))",
      "twin m2 >= 3 paired with m1 = 2 and the three preceding twins"));

  out.push_back(spec_of<LowAtTwin>("twin-95", Kind::Universal,
                               "d_m = 2, m >= 5 => delta_n > delta_m for all n < m",
                               "twin m >= 5"));

  out.push_back(spec_of<Cor96>(
      "twin-96", Kind::Universal,
      "d_m = 2, m >= 5, n < m: {sqrt p_{n+1} delta_n} > {sqrt p_{m+1} delta_m} and "
      "{sqrt p_m delta_m} > {sqrt p_n delta_n}",
      "twin m >= 5"));

  out.push_back(spec(
      "twin-97", Kind::Universal,
      "delta = (d/2 - 1)/sqrt p + {sqrt p delta}/sqrt p >= {sqrt p delta}/sqrt p, equality iff "
      "d = 2",
      "n >= 2", [](const EvalContext& ctx, const Neighborhood& nb) {
        const GapWindow& w = *nb.cur;
        if (w.n < 2) return out_of_domain();
        const auto& v = nb.cur.views();
        const RootExpr inv = v.sqrt_p.inverse();
        const RootExpr fp = ctx.dec.frac(v.sqrtp_delta);
        const RootExpr lower = fp * inv;
        Clauses c;
        c.require(ctx.dec.eq(v.delta, Q(static_cast<long>(w.d / 2 - 1)) * inv + lower),
                  "decomposition");
        const Cmp k = ctx.dec.cmp(v.delta, lower);
        c.require(k != Cmp::Less, "delta >= lower bound");
        c.iff(k == Cmp::Equal, twin(w), "equality iff d = 2");
        return c.done();
      }));

  out.push_back(spec_of<GapsBetweenTwins>("twin-98", Kind::Universal,
                               "consecutive twins m1 < m2, m1 < n < m2: d_n D_m1 > 2 D_n, i.e. "
                               "delta_n > delta_m1",
                               "reported at m2 for consecutive twins with m1 >= 2"));

  out.push_back(spec_of<Cor99>("twin-99", Kind::Universal,
                               "consecutive twins m1 < m2, m1 < n < m2: delta_n > delta_m1 > "
                               "2/D_n > delta_m2",
                               "reported at m2 for consecutive twins with m1 >= 2"));

  out.push_back(spec_of<AlphaProps>(
      "alpha-props", Kind::Universal,
      "alpha = sqrt2/2 - delta; consecutive twins m1 < n < m2: alpha_m1 = alpha_n + (delta_n - "
      "delta_m1) > alpha_n; alpha_m2 > alpha_n + (d_n - 2)/D_n > alpha_m1",
      "reported at m2 for consecutive twins with m1 >= 2"));

  {
    auto s = spec_of<Postulate>(
        "twin-postulate", Kind::Survey,
        "collect consecutive twin pairs where delta_m1/delta_m2 < 3/2, delta_m2 > delta_m1 - "
        "delta_m2 or sqrt2/2 < D_m1/D_m2 fails",
        "reported at m2 for consecutive twins with m1 >= 2");
    s.conjecture = true;
    out.push_back(std::move(s));
  }

  {
    auto s = spec_of<Band913>("twin-913", Kind::Universal,
                              "twins 3 <= m1 < m2 with floor sqrt p_m1 = floor sqrt p_m2: "
                              "31 p_m1 > 25 p_m2",
                              "twin m2 with an earlier twin m1 >= 3 in the same band");
    out.push_back(std::move(s));
  }

  out.push_back(spec_of<Cor910>("twin-910", Kind::Universal,
                                "m >= 5 and delta_m below every earlier delta => d_m = 2",
                                "n >= 5"));
}

}  // namespace sqrtgap::detail
