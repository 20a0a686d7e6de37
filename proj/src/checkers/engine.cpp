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

#include <algorithm>
#include <map>
#include <thread>

#include "checkers/support.hpp"

namespace sqrtgap {

const char* to_string(Kind k) {
  switch (k) {
    case Kind::Universal: return "UNIVERSAL";
    case Kind::ExceptionSet: return "EXCEPTION_SET";
    case Kind::Equivalence: return "EQUIVALENCE";
    case Kind::Survey: return "SURVEY";
    case Kind::Trend: return "TREND";
  }
  return "?";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::ExceptionsConfirmed: return "EXCEPTIONS_CONFIRMED";
    case Verdict::SurveyResult: return "SURVEY_RESULT";
    case Verdict::TrendResult: return "TREND_RESULT";
    case Verdict::UndecidedPresent: return "UNDECIDED_PRESENT";
  }
  return "?";
}

namespace {

const char* status_name(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::Undecided: return "undecided";
    case Status::OutOfDomain: return "out_of_domain";
  }
  return "?";
}

void push_capped(std::vector<uint64_t>& v, bool& truncated, uint64_t n, std::size_t cap) {
  if (v.size() < cap) {
    v.push_back(n);
  } else {
    truncated = true;
  }
}

CheckReport blank_report(const CheckerSpec& spec, uint64_t n_lo, uint64_t n_hi) {
  CheckReport r;
  r.id = spec.id;
  r.kind = spec.kind;
  r.conjecture = spec.conjecture;
  r.n_lo = n_lo;
  r.n_hi = n_hi;
  for (uint64_t e : spec.expected_exceptions)
    if (e >= n_lo && e <= n_hi) r.expected_exceptions.push_back(e);
  for (uint64_t e : spec.expected_hits)
    if (e >= n_lo && e <= n_hi) r.expected_hits.push_back(e);
  return r;
}

void record(CheckReport& r, const Outcome& o, const GapWindow& w, const CheckOptions& opts) {
  switch (o.status) {
    case Status::Holds: ++r.counts.holds; break;
    case Status::Fails: ++r.counts.fails; break;
    case Status::Undecided: ++r.counts.undecided; break;
    case Status::OutOfDomain: ++r.counts.out_of_domain; return;
  }
  if (o.hard) ++r.hard_fails;
  const bool survey_hit = r.kind == Kind::Survey && o.status == Status::Holds;
  if (o.status == Status::Fails && r.kind != Kind::Survey)
    push_capped(r.violations, r.violations_truncated, w.n, opts.list_cap);
  if (survey_hit) push_capped(r.hits, r.hits_truncated, w.n, opts.list_cap);
  const bool keep = o.status == Status::Undecided || o.notable || survey_hit ||
                    (o.status == Status::Fails && r.kind != Kind::Survey) || o.hard;
  if (keep && r.witnesses.size() < opts.witness_cap)
    r.witnesses.push_back({w.n, w.p, w.q, w.d, status_name(o.status), o.note});
}

// Sequential pass over [n_lo, n_hi] for a set of specs.
std::vector<CheckReport> run_chunk(const std::vector<const CheckerSpec*>& specs,
                                   const PrimeStore& store, uint64_t n_lo, uint64_t n_hi,
                                   const CheckOptions& opts) {
  const Decider dec(opts.ladder);
  const EvalContext ctx{store, dec};
  std::vector<std::unique_ptr<Evaluator>> evals;
  std::vector<CheckReport> reports;
  for (const auto* s : specs) {
    evals.push_back(s->make());
    evals.back()->prepare(ctx, n_lo);
    reports.push_back(blank_report(*s, n_lo, n_hi));
  }
  if (n_lo > n_hi) return reports;

  const uint64_t first = n_lo > 1 ? n_lo - 1 : 1;
  WindowStream ws(store, first, n_hi + 1);
  std::optional<Win> prev;
  std::optional<Win> cur(Win(*ws.next()));
  if (n_lo > 1) {
    prev = cur;
    cur.emplace(*ws.next());
  }
  for (uint64_t n = n_lo; n <= n_hi; ++n) {
    Win next(*ws.next());
    const Neighborhood nb{prev ? &*prev : nullptr, *cur, next};
    for (std::size_t i = 0; i < evals.size(); ++i) {
      Outcome o;
      try {
        o = evals[i]->evaluate(ctx, nb);
      } catch (const Undecided& e) {
        o = {Status::Undecided, e.what(), false, false};
      }
      record(reports[i], o, **cur, opts);
    }
    prev = std::move(cur);
    cur.emplace(std::move(next));
  }
  for (auto& r : reports) r.verdict = compute_verdict(r);
  return reports;
}

std::vector<const CheckerSpec*> resolve(const std::vector<std::string>& ids) {
  std::vector<const CheckerSpec*> out;
  for (const auto& id : ids) out.push_back(&find_checker(id));
  return out;
}

}  // namespace

Cmp Decider::cmp(const RootExpr& a, const RootExpr& b) const {
  const Cmp c = cmp_root(a, b, ladder_);
  if (c == Cmp::Undecided) throw Undecided("comparison undecided: " + (a - b).str());
  return c;
}

Int Decider::floor(const RootExpr& e) const {
  auto f = floor_root(e, ladder_);
  if (!f) throw Undecided("floor undecided: " + e.str());
  return *f;
}

RootExpr Decider::frac(const RootExpr& e) const { return e - RootExpr(Rat(floor(e))); }

const RootViews& Win::views() const {
  if (!views_) views_ = root_views(w_);
  return *views_;
}

void Evaluator::prepare(const EvalContext&, uint64_t) {}

const CheckerSpec& find_checker(const std::string& id) {
  for (const auto& s : catalog())
    if (s.id == id) return s;
  throw UnknownChecker("unknown checker id: " + id);
}

const std::vector<CheckerSpec>& catalog() {
  static const std::vector<CheckerSpec> specs = [] {
    std::vector<CheckerSpec> v;
    detail::register_gaps(v);
    detail::register_floors(v);
    detail::register_mu(v);
    detail::register_parity(v);
    detail::register_extremal(v);
    detail::register_twins(v);
    std::sort(v.begin(), v.end(),
              [](const CheckerSpec& a, const CheckerSpec& b) { return a.id < b.id; });
    return v;
  }();
  return specs;
}

Verdict compute_verdict(const CheckReport& r) {
  if (r.hard_fails > 0) return Verdict::Fail;
  switch (r.kind) {
    case Kind::Survey:
      return r.counts.undecided > 0 ? Verdict::UndecidedPresent : Verdict::SurveyResult;
    case Kind::Trend:
      return Verdict::TrendResult;
    case Kind::ExceptionSet:
      if (r.violations_truncated || r.violations != r.expected_exceptions) return Verdict::Fail;
      if (r.counts.undecided > 0) return Verdict::UndecidedPresent;
      return r.violations.empty() ? Verdict::Pass : Verdict::ExceptionsConfirmed;
    case Kind::Universal:
    case Kind::Equivalence:
      if (r.counts.fails > 0) return Verdict::Fail;
      if (r.counts.undecided > 0) return Verdict::UndecidedPresent;
      return Verdict::Pass;
  }
  return Verdict::Fail;
}

CheckReport merge_reports(const CheckReport& a, const CheckReport& b, const CheckOptions& opts) {
  if (a.id != b.id) throw std::invalid_argument("merging reports of different checkers");
  if (b.n_lo != a.n_hi + 1) throw std::invalid_argument("merged ranges must be adjacent");
  CheckReport r = a;
  r.n_hi = b.n_hi;
  r.counts.holds += b.counts.holds;
  r.counts.fails += b.counts.fails;
  r.counts.undecided += b.counts.undecided;
  r.counts.out_of_domain += b.counts.out_of_domain;
  r.hard_fails += b.hard_fails;
  for (const auto& w : b.witnesses)
    if (r.witnesses.size() < opts.witness_cap) r.witnesses.push_back(w);
  for (uint64_t n : b.violations) push_capped(r.violations, r.violations_truncated, n, opts.list_cap);
  r.violations_truncated = r.violations_truncated || b.violations_truncated;
  for (uint64_t n : b.hits) push_capped(r.hits, r.hits_truncated, n, opts.list_cap);
  r.hits_truncated = r.hits_truncated || b.hits_truncated;
  r.expected_exceptions.insert(r.expected_exceptions.end(), b.expected_exceptions.begin(),
                               b.expected_exceptions.end());
  r.expected_hits.insert(r.expected_hits.end(), b.expected_hits.begin(), b.expected_hits.end());
  for (const auto& s : b.notes)
    if (std::find(r.notes.begin(), r.notes.end(), s) == r.notes.end()) r.notes.push_back(s);
  r.verdict = compute_verdict(r);
  return r;
}

std::vector<CheckReport> run_checkers(const std::vector<std::string>& ids,
                                      const PrimeStore& store, uint64_t n_lo, uint64_t n_hi,
                                      const CheckOptions& opts) {
  if (n_lo == 0) throw std::invalid_argument("prime index is 1-based");
  const auto specs = resolve(ids);
  const unsigned threads = std::max(1U, opts.threads);
  if (threads == 1 || n_hi < n_lo || n_hi - n_lo < 4096)
    return run_chunk(specs, store, n_lo, n_hi, opts);

  // Shards are contiguous and merged left to right, so the result does not
  // depend on the thread count.
  const uint64_t len = n_hi - n_lo + 1;
  const uint64_t step = (len + threads - 1) / threads;
  std::vector<std::vector<CheckReport>> parts(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    const uint64_t lo = n_lo + t * step;
    const uint64_t hi = std::min(n_hi, lo + step - 1);
    if (lo > n_hi) break;
    pool.emplace_back([&, t, lo, hi] { parts[t] = run_chunk(specs, store, lo, hi, opts); });
  }
  for (auto& th : pool) th.join();
  std::vector<CheckReport> out = parts[0];
  for (unsigned t = 1; t < threads; ++t) {
    if (parts[t].empty()) break;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = merge_reports(out[i], parts[t][i], opts);
  }
  return out;
}

CheckReport run_checker(const std::string& id, const PrimeStore& store, uint64_t n_lo,
                        uint64_t n_hi, const CheckOptions& opts) {
  return run_checkers({id}, store, n_lo, n_hi, opts).front();
}

std::vector<CheckReport> run_all(const PrimeStore& store, uint64_t n_lo, uint64_t n_hi,
                                 const CheckOptions& opts) {
  std::vector<std::string> ids;
  for (const auto& s : catalog()) ids.push_back(s.id);
  return run_checkers(ids, store, n_lo, n_hi, opts);
}

uint64_t limit_for_index(uint64_t n_hi) { return nth_prime_upper_bound(n_hi + 3) + 64; }

}  // namespace sqrtgap
