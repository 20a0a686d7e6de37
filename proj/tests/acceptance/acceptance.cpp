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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sqrtgap/accum.hpp"
#include "sqrtgap/checkers.hpp"
#include "sqrtgap/intervals.hpp"
#include "sqrtgap/report.hpp"
#include "sqrtgap/twin.hpp"
#include "sqrtgap/window.hpp"

namespace {

using namespace sqrtgap;
using Clock = std::chrono::steady_clock;

constexpr uint64_t kMillion = 1'000'000;
constexpr uint64_t kHundredK = 100'000;
constexpr uint64_t k1e8 = 100'000'000;

struct Result {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (!ok) detail += "; ";
    else detail.clear();
    ok = false;
    detail += why;
  }
  void note(const std::string& s) {
    if (ok) detail += (detail.empty() ? "" : "; ") + s;
  }
};

std::string list(const std::vector<uint64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

const CheckReport& by_id(const std::vector<CheckReport>& rs, const std::string& id) {
  return *std::find_if(rs.begin(), rs.end(), [&](const CheckReport& r) { return r.id == id; });
}

Result c1_exception_sets() {
  Result res;
  const auto store = PrimeStore::build(limit_for_index(kMillion));
  const auto t0 = Clock::now();
  const auto rs = run_checkers({"conj-gap-sq", "conj-gap-sq2", "survey-quarter", "delta-gt-half"},
                               store, 1, kMillion);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  const std::vector<uint64_t> six{2, 4, 6, 9, 11, 30};
  auto expect = [&](const std::string& id, const std::vector<uint64_t>& want, bool survey) {
    const auto& r = by_id(rs, id);
    const auto& got = survey ? r.hits : r.violations;
    if (got != want) res.fail(id + " gave " + list(got));
    if (r.counts.undecided) res.fail(id + " has undecided rows");
  };
  expect("conj-gap-sq", {4, 9, 30}, false);
  expect("conj-gap-sq2", {4}, false);
  expect("survey-quarter", six, true);
  expect("delta-gt-half", six, true);
  if (secs >= 60) res.fail("took " + std::to_string(secs) + " s");
  char buf[96];
  std::snprintf(buf, sizeof buf, "{4,9,30}, {4}, {2,4,6,9,11,30} x2 in %.1f s", secs);
  res.note(buf);
  return res;
}

Result c2_sharp_andrica() {
  Result res;
  const auto store = PrimeStore::build(limit_for_index(kMillion));
  const auto r = run_checker("andrica-sharp", store, 1, kMillion);
  if (r.verdict != Verdict::Pass) res.fail("andrica-sharp verdict " + std::string(to_string(r.verdict)));

  // Locate the maximum with long doubles, then certify every near contender.
  const RootExpr top = RootExpr::sqrt(uint64_t{11}) - RootExpr::sqrt(uint64_t{7});
  const long double top_ld = std::sqrt(11.0L) - std::sqrt(7.0L);
  uint64_t argmax = 0, certified = 0;
  long double best = -1;
  WindowStream ws(store, 1, kMillion);
  while (auto w = ws.next()) {
    const long double dl = std::sqrt(static_cast<long double>(w->q)) -
                           std::sqrt(static_cast<long double>(w->p));
    if (dl > best) best = dl, argmax = w->n;
    if (w->n != 4 && dl > top_ld - 1e-12L) {
      ++certified;
      if (cmp_root(root_views(*w).delta, top) != Cmp::Less)
        res.fail("Delta_" + std::to_string(w->n) + " not certified below Delta_4");
    }
  }
  if (argmax != 4) res.fail("argmax is n = " + std::to_string(argmax));
  const auto w4 = make_window(store, 4);
  if (!(root_views(w4).delta == top)) res.fail("Delta_4 is not sqrt11 - sqrt7");
  if (cmp_root(top, rat(7, 10)) != Cmp::Less) res.fail("sqrt11 - sqrt7 < 7/10 not certified");
  if (cmp_root(RootExpr::sqrt(uint64_t{2}) * rat(1, 2), rat(7, 10)) != Cmp::Greater)
    res.fail("7/10 < sqrt2/2 not certified");
  res.note("max at n = 4, sqrt11 - sqrt7 < 7/10 < sqrt2/2 certified; " +
           std::to_string(certified) + " near contenders certified");
  return res;
}

Result c3_integer_reductions() {
  Result res;
  const auto store = PrimeStore::build(limit_for_index(kMillion));
  uint64_t bad = 0;
  WindowStream ws(store, 2, kMillion);
  while (auto w = ws.next()) {
    const uint64_t s = isqrt(static_cast<u128>(w->p) * w->q);
    if (w->d != 2 * (w->q - s - 1) || w->d != 2 * (s - w->p + 1)) {
      if (!bad) res.fail("floor identity fails at n = " + std::to_string(w->n));
      ++bad;
    }
  }
  const auto r = run_checker("thm-35", store, 2, kMillion);
  if (r.counts.fails || r.counts.undecided)
    res.fail("thm-35 on 2..10^6: " + std::to_string(r.counts.fails) + " fails, " +
             std::to_string(r.counts.undecided) + " undecided");
  const auto r34 = run_checker("thm-34", store, 2, kMillion);
  if (r34.verdict != Verdict::Pass) res.fail("thm-34 not PASS");
  res.note("d = 2(q - s - 1) = 2(s - p + 1) and thm-35 exact on 2..10^6, 0 undecided");
  return res;
}

Result c4_square_windows(const PrimeStore& store) {
  Result res;
  const auto b6 = even_square_batch(store, 6);
  if (b6.primes != std::vector<uint64_t>{149, 151, 157, 163, 167} ||
      b6.h_values != std::vector<uint64_t>{5, 7, 13, 19, 23})
    res.fail("N = 6 batch " + list(b6.primes));
  const auto b40 = even_square_batch(store, 40);
  if (b40.primes.size() != 13 || b40.prime_h != std::vector<uint64_t>{73, 151})
    res.fail("N = 40 batch has " + std::to_string(b40.primes.size()) + " primes, prime h " +
             list(b40.prime_h));
  uint64_t short_windows = 0;
  for (const auto& r : square_report(store, 2, 10'000))
    if (!r.legendre || !r.two_primes || !r.oppermann) {
      if (!short_windows) res.fail("square window claim fails at N = " + std::to_string(r.N));
      ++short_windows;
    }
  const uint64_t nb = brocard_index_bound(store, k1e8);
  for (const auto& r : brocard_report(store, 1, nb))
    if (!r.ok()) res.fail("Brocard count short at n = " + std::to_string(r.n));
  res.note("N = 6 and N = 40 batches match; Legendre, two primes, Oppermann on 2..10^4; "
           "Brocard counts for n <= " + std::to_string(nb));
  return res;
}

Result c5_powers(const PrimeStore& store) {
  Result res;
  if (store.pi(16) != 6 || store.pi(32) != 11 || store.pi(243) - store.pi(32) != 42)
    res.fail("pi checkpoints differ");
  uint64_t rows = 0, total_bad = 0;
  std::vector<std::string> empty_cells;
  bool occupied_from_2 = true;
  for (unsigned k = 2; k <= 12; ++k) {
    const auto scan = power_report(store, k, 1, k1e8, k1e8, PowerScheme::kEqual);
    for (const auto& r : scan.rows) {
      ++rows;
      if (!r.total_ok()) ++total_bad;
      if (!r.occupied()) {
        empty_cells.push_back("(k=" + std::to_string(k) + ",n=" + std::to_string(r.n) + ")");
        if (r.n >= 2) occupied_from_2 = false;
      }
    }
  }
  if (total_bad) res.fail(std::to_string(total_bad) + " rows below pi(2^k)");
  if (!empty_cells.empty()) {
    std::string cells;
    for (std::size_t i = 0; i < empty_cells.size() && i < 4; ++i) cells += empty_cells[i] + " ";
    res.fail(std::to_string(empty_cells.size()) + " rows with an empty subinterval, e.g. " + cells +
             "(n = 1 lies outside the x >= 2 range of the argument; n >= 2 " +
             (occupied_from_2 ? "all occupied" : "also has empty cells") + ")");
  }
  for (const auto& r : pow2_ladder(store, 27))
    if (r.k >= 2 && r.k <= 26 && (!r.increment || *r.increment < 2))
      res.fail("ladder increment below 2 at k = " + std::to_string(r.k));
  res.note("pi(16) = 6, pi(32) = 11, pi(243) - pi(32) = 42; " + std::to_string(rows) +
           " (k, n) rows; ladder increments >= 2 for 2 <= k <= 26");
  return res;
}

Result c6_extremal(const PrimeStore& store) {
  Result res;
  const uint64_t n_hi = store.pi(k1e8) + 1;  // first prime above (10^4)^2
  const auto rs = run_checkers({"even-74", "odd-710", "first-after-square"}, store, 1, n_hi);
  if (by_id(rs, "even-74").violations != std::vector<uint64_t>{3, 8})
    res.fail("even-74 gave " + list(by_id(rs, "even-74").violations));
  if (by_id(rs, "odd-710").violations != std::vector<uint64_t>{5, 16, 24})
    res.fail("odd-710 gave " + list(by_id(rs, "odd-710").violations));
  if (store.nth_prime(16) != 53 || store.nth_prime(24) != 89) res.fail("p_16, p_24 differ");
  const auto& fas = by_id(rs, "first-after-square");
  if (fas.verdict != Verdict::Pass || fas.counts.holds != 9999)
    res.fail("first-after-square " + std::string(to_string(fas.verdict)) + " with " +
             std::to_string(fas.counts.holds) + " windows");
  for (const auto& r : rs)
    if (r.counts.undecided) res.fail(r.id + " has undecided rows");
  res.note("{3,8}, {5,16,24} with (p16, p24) = (53, 89); floor D even for all 9999 N in 2..10^4");
  return res;
}

Result c7_twins(const PrimeStore& store) {
  Result res;
  const auto rs = run_checkers({"twin-95", "twin-913"}, store, 1, kHundredK);
  for (const auto& r : rs)
    if (r.verdict != Verdict::Pass) res.fail(r.id + " " + to_string(r.verdict));
  const auto band = band_twin_scan(store, k1e8, 64);
  struct Want {
    uint64_t m1, m2, p1, p2;
  };
  for (const Want& w : {Want{26, 28, 101, 107}, Want{41, 43, 179, 191}, Want{57, 60, 269, 281}}) {
    const bool found = std::any_of(band.first.begin(), band.first.end(), [&](const BandPair& b) {
      return b.m1 == w.m1 && b.m2 == w.m2 && b.p1 == w.p1 && b.p2 == w.p2;
    });
    if (!found) res.fail("instance (" + std::to_string(w.m1) + "," + std::to_string(w.m2) + ") missing");
  }
  if (!band.violations.empty())
    res.fail("31 p1 <= 25 p2 at m1 = " + std::to_string(band.violations.front().m1));
  res.note("twin-95 and twin-913 PASS to 1e5; instances found; " +
           std::to_string(band.consecutive_pairs) + " same-band pairs below 1e8, 0 violations");
  return res;
}

Result c8_ledger(const PrimeStore& store) {
  Result res;
  const auto s = alpha_ledger(store, kHundredK, 64);
  if (!s.all_certified) res.fail("residual exceeds bound at n = " + std::to_string(*s.first_uncertified));
  // 2^-40 at 64 fractional bits is 2^24 ulps.
  if (s.max_bound_ulps > (Int(1) << 24)) res.fail("error bound above 2^-40");
  const auto jn = jn_questions(store, kHundredK);
  auto q = [&](const char* name, const QuestionResult& r) {
    if (r.violations)
      res.fail(std::string(name) + " first counterexample n = " + std::to_string(*r.first_violation));
    if (r.undecided) res.fail(std::string(name) + " has undecided rows");
  };
  q("sqrt(2q) < 2j", jn.q92);
  q("dusart form", jn.dusart);
  q("p_n < 2 j_n^2", jn.abstract);
  res.note("identity certified for n <= 1e5 within " + s.max_bound_ulps.get_str() +
           " ulps (2^-64 each); three questions: 0 violations");
  return res;
}

Result c9_accum() {
  Result res;
  // Reference values as printed: `digits` decimals, truncated.
  struct Entry {
    uint64_t N, p;
    long printed;
    unsigned digits;
  };
  struct Table {
    const char* r;
    std::vector<Entry> rows;
  };
  const std::vector<Table> tables{
      {"1/3", {{6, 41, 403, 3}, {36, 1321, 345, 3}, {90, 8161, 338, 3}, {402, 161873, 3344, 4},
               {612, 374953, 33405, 5}}},
      {"9/22", {{11, 131, 44552, 5}, {33, 1117, 42154, 5}, {121, 14741, 41251, 5},
                {451, 203771, 41003, 5}, {715, 511811, 40967, 5}}},
      {"3/10", {{10, 107, 3440, 4}, {30, 919, 3150, 4}, {60, 3637, 3075, 4}, {100, 10061, 3045, 4},
                {500, 250301, 3009, 4}}}};
  const Rat tol = rat(5, 10000);
  unsigned pairs = 0;
  for (const auto& t : tables) {
    const auto scan = accum_scan(RationalTarget::parse(t.r), 1, 1, 2000);
    if (scan.first_not_closer) res.fail(std::string(t.r) + " abs_err not decreasing at N = " +
                                        std::to_string(*scan.first_not_closer));
    for (const auto& e : t.rows) {
      const auto it = std::find_if(scan.records.begin(), scan.records.end(),
                                   [&](const AccumRecord& a) { return a.N == e.N; });
      if (it == scan.records.end() || it->p != e.p) {
        res.fail(std::string(t.r) + " missing (" + std::to_string(e.N) + ", " + std::to_string(e.p) + ")");
        continue;
      }
      ++pairs;
      Int scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, e.digits);
      const Rat mu = rat(Int(e.printed), scale), ulp = rat(Int(1), scale);
      if (cmp_root(it->mu, mu - tol) != Cmp::Greater || cmp_root(it->mu, mu + tol) != Cmp::Less) {
        // The tables print truncated digits; say whether the value agrees with them.
        const bool truncation = cmp_root(it->mu, mu) != Cmp::Less &&
                                cmp_root(it->mu, mu + ulp) == Cmp::Less;
        res.fail(std::string(t.r) + " mu at N = " + std::to_string(e.N) + " is " + it->mu_decimal +
                 ", printed " + scaled_to_decimal(Int(e.printed), e.digits) +
                 (truncation ? " (agrees as a truncation)" : ""));
      }
    }
  }
  const auto h1 = special_scan(SpecialKind::kHFixed, 300, 1);
  const std::vector<std::pair<uint64_t, std::string>> want{
      {5, "0.23606"}, {257, "0.03121"}, {16901, "0.00384"}, {50177, "0.00223"}};
  for (const auto& [p, digits] : want) {
    const auto it = std::find_if(h1.records.begin(), h1.records.end(),
                                 [&](const AccumRecord& a) { return a.p == p; });
    if (it == h1.records.end() || it->mu_decimal != digits)
      res.fail("h = 1 record for p = " + std::to_string(p));
  }
  if (h1.first_not_closer) res.fail("h = 1 abs_err not decreasing");
  res.note(std::to_string(pairs) + "/15 pairs, mu within 5e-4 certified; h = 1 digits match");
  return res;
}

Result c10_properties(const PrimeStore& store) {
  Result res;
  const std::vector<std::string> eq{"eq-15-1", "eq-15-2", "eq-15-3", "eq-15-4", "eq-16-1", "eq-16-2",
                                    "eq-16-3", "eq-28-1", "eq-28-2", "eq-28-3", "twin-91"};
  for (const auto& r : run_checkers(eq, store, 2, kHundredK))
    if (r.verdict != Verdict::Pass || r.counts.fails || r.counts.undecided)
      res.fail(r.id + " " + to_string(r.verdict));

  std::mt19937_64 rng(0x5157);
  uint64_t mismatches = 0, undecided = 0;
  for (int i = 0; i < 100000; ++i) {
    const auto w = make_window(store, rng() % kHundredK + 1);
    const auto v = root_views(w);
    const RootExpr* pool[] = {&v.delta, &v.D, &v.sqrtq_delta, &v.sqrtp_delta, &v.mu,
                              &v.mu_q, &v.mu_sqrtp, &v.muq_sqrtq, &v.sqrt_pq};
    const RootExpr e = *pool[rng() % std::size(pool)] *
                       rat(static_cast<long>(rng() % 199) - 99, static_cast<long>(rng() % 16 + 1));
    const auto a = floor_root(e), b = floor_root_approx(e);
    if (!a || !b) ++undecided;
    else if (*a != *b) ++mismatches;
  }
  if (mismatches || undecided)
    res.fail(std::to_string(mismatches) + " floor mismatches, " + std::to_string(undecided) + " undecided");

  // Resume in uneven chunks through a file, against one pass and a threaded pass.
  const std::vector<std::string> ids{"conj-gap-sq", "twin-95", "thm-35", "survey-quarter",
                                     "trend-mu-max", "first-after-square"};
  auto single = new_manifest(ids, store.limit(), 1, 50000);
  advance(single, store, 50000);
  CheckOptions par;
  par.threads = 4;
  auto threaded = new_manifest(ids, store.limit(), 1, 50000);
  advance(threaded, store, 50000, par);
  const auto path = (std::filesystem::temp_directory_path() / "sqrtgap_acceptance_manifest.json").string();
  auto m = new_manifest(ids, store.limit(), 1, 50000);
  for (uint64_t stop : {1, 9999, 10000, 33333, 50000}) {
    advance(m, store, stop);
    save_manifest(path, m);
    m = load_manifest(path);
  }
  std::remove(path.c_str());
  if (m.digests != single.digests) res.fail("resumed run differs from a single run");
  if (threaded.digests != single.digests) res.fail("threaded run differs from a single run");
  auto again = new_manifest(ids, store.limit(), 1, 50000);
  advance(again, store, 50000);
  if (again.digests != single.digests) res.fail("repeated run is not deterministic");
  res.note("11 equivalences agree on 2..1e5; 100000 floors agree; resume, threads, repeat identical");
  return res;
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  int failed = 0;
  auto report = [&](int id, const char* title, const std::function<Result()>& fn) {
    const auto start = Clock::now();
    Result r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    failed += !r.ok;
    std::printf("[%s] %2d %-22s %s (%.1f s)\n", r.ok ? "PASS" : "FAIL", id, title, r.detail.c_str(), secs);
    std::fflush(stdout);
  };

  report(1, "exception sets", c1_exception_sets);
  report(2, "sharp Andrica", c2_sharp_andrica);
  report(3, "integer reductions", c3_integer_reductions);
  // 2^27 covers the ladder, the 10^8 scans and the windows up to the first prime above 10^8.
  const auto big = PrimeStore::build(std::max<uint64_t>(limit_for_index(5'800'000), (1ULL << 27) + 64));
  report(4, "square windows", [&] { return c4_square_windows(big); });
  report(5, "powers", [&] { return c5_powers(big); });
  report(6, "extremal cases", [&] { return c6_extremal(big); });
  report(7, "twin orderings", [&] { return c7_twins(big); });
  report(8, "twin ledger", [&] { return c8_ledger(big); });
  report(9, "accumulation tables", c9_accum);
  report(10, "property suites", [&] { return c10_properties(big); });

  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("%d of 10 criteria passed in %.1f s\n", 10 - failed, secs);
  return failed ? 1 : 0;
}
