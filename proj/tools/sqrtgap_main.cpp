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

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sqrtgap/accum.hpp"
#include "sqrtgap/checkers.hpp"
#include "sqrtgap/intervals.hpp"
#include "sqrtgap/primes.hpp"
#include "sqrtgap/report.hpp"
#include "sqrtgap/twin.hpp"
#include "sqrtgap/window.hpp"

namespace {

using namespace sqrtgap;

constexpr int kExitUsage = 3;
constexpr uint64_t kMinLimit = 10'000'000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string joined_argv(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

PrimeStore make_store(uint64_t limit, unsigned threads) {
  StoreConfig cfg;
  cfg.threads = threads;
  return PrimeStore::build(limit, cfg);
}

std::vector<std::string> resolve_ids(const std::string& which) {
  std::vector<std::string> ids;
  if (which == "all") {
    for (const auto& c : catalog()) ids.push_back(c.id);
    std::sort(ids.begin(), ids.end());
    return ids;
  }
  std::stringstream ss(which);
  for (std::string id; std::getline(ss, id, ',');) {
    try {
      find_checker(id);
    } catch (const std::exception&) {
      throw UsageError("unknown checker '" + id + "' (see 'sqrtgap list')");
    }
    ids.push_back(id);
  }
  if (ids.empty()) throw UsageError("--checker needs an id or 'all'");
  return ids;
}

int verdict_exit(const std::vector<CheckReport>& reports) {
  bool undecided = false;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Fail) return 1;
    undecided |= r.verdict == Verdict::UndecidedPresent;
  }
  return undecided ? 2 : 0;
}

struct VerifyArgs {
  std::string checker = "all";
  uint64_t n_lo = 1, n_hi = 100'000, limit = 0;
  std::string format = "table";
  std::size_t witnesses = 32;
  std::string resume;
  uint64_t chunk = 1'000'000;
};

int cmd_verify(const VerifyArgs& a, unsigned threads, const std::string& cmdline) {
  if (a.n_lo == 0 || a.n_hi < a.n_lo) throw UsageError("need 1 <= --n-lo <= --n-hi");
  const ReportFormat fmt = parse_format(a.format);
  CheckOptions opts;
  opts.witness_cap = a.witnesses;
  opts.threads = threads;

  RunManifest m;
  const bool resuming = !a.resume.empty() && std::filesystem::exists(a.resume);
  if (resuming) {
    m = load_manifest(a.resume);
    if (m.n_lo != a.n_lo || m.n_hi != a.n_hi || m.ids != resolve_ids(a.checker))
      throw UsageError("manifest " + a.resume + " was written for a different run");
    std::cerr << "resuming at n = " << m.next_n() << '\n';
  } else {
    const uint64_t limit = std::max({a.limit, limit_for_index(a.n_hi), kMinLimit});
    m = new_manifest(resolve_ids(a.checker), limit, a.n_lo, a.n_hi, cmdline);
  }
  const PrimeStore store = make_store(m.limit, threads);
  if (a.resume.empty()) {
    advance(m, store, m.n_hi, opts);
  } else {
    while (!m.complete()) {
      advance(m, store, m.next_n() - 1 + a.chunk, opts);
      save_manifest(a.resume, m);
    }
  }
  write_reports(std::cout, m.reports, fmt);
  return verdict_exit(m.reports);
}

int cmd_list() {
  for (const auto& c : catalog())
    std::cout << std::left << std::setw(22) << c.id << std::setw(14) << to_string(c.kind)
              << c.claim << '\n';
  return 0;
}

int cmd_squares(uint64_t lo, uint64_t hi, bool even, const std::string& format, unsigned threads) {
  if (lo == 0 || hi < lo) throw UsageError("need 1 <= --n-lo <= --n-hi");
  const uint64_t need = even ? (2 * hi + 1) * (2 * hi + 1) : (hi + 1) * (hi + 1);
  const PrimeStore store = make_store(std::max(need + 64, uint64_t{1000}), threads);
  if (even) {
    std::cout << "N,count,h_values,prime_h\n";
    for (uint64_t N = lo; N <= hi; ++N) {
      const auto b = even_square_batch(store, N);
      auto list = [](const std::vector<uint64_t>& v) {
        std::string s;
        for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
        return s;
      };
      std::cout << N << ',' << b.primes.size() << ",\"" << list(b.h_values) << "\",\""
                << list(b.prime_h) << "\"\n";
    }
    return 0;
  }
  const auto rows = square_report(store, lo, hi);
  if (format == "csv") {
    write_squares_csv(std::cout, rows);
  } else {
    uint64_t bad = 0;
    std::cout << std::setw(8) << "N" << std::setw(8) << "count" << std::setw(8) << "min_h"
              << std::setw(8) << "max_h" << "  legendre two oppermann cumulative\n";
    for (const auto& r : rows) {
      const bool ok = r.legendre && (r.N < 2 || (r.two_primes && r.oppermann));
      bad += !ok;
      std::cout << std::setw(8) << r.N << std::setw(8) << r.count << std::setw(8) << r.min_h
                << std::setw(8) << r.max_h << "  " << r.legendre << ' ' << r.two_primes << ' '
                << r.oppermann << ' ' << r.cumulative << '\n';
    }
    std::cerr << bad << " windows short of the expected counts\n";
  }
  return 0;
}

int cmd_powers(unsigned k, uint64_t n_hi, uint64_t budget, const std::string& scheme,
               unsigned threads) {
  if (k < 2) throw UsageError("--k must be at least 2");
  PowerScheme s = PowerScheme::kEqual;
  if (scheme == "cubic") s = PowerScheme::kCubic;
  else if (scheme == "quartic") s = PowerScheme::kQuartic;
  else if (scheme != "equal") throw UsageError("--scheme is equal, cubic or quartic");
  const PrimeStore store = make_store(std::max(budget, uint64_t{1} << std::min(k + 1, 40u)) + 64,
                                      threads);
  const auto scan = power_report(store, k, 1, n_hi, budget, s);
  write_powers_jsonl(std::cout, scan);
  if (scan.budget_hit) std::cerr << "budget reached at n = " << scan.n_last << '\n';
  return 0;
}

int cmd_twins(uint64_t n_hi, const std::string& format, unsigned threads) {
  if (n_hi < 1) throw UsageError("--n-hi must be positive");
  const PrimeStore store = make_store(std::max(limit_for_index(n_hi), kMinLimit), threads);
  if (format == "csv") {
    write_twins_csv(std::cout, store, n_hi);
    return 0;
  }
  const auto ledger = alpha_ledger(store, n_hi);
  const auto jn = jn_questions(store, n_hi);
  std::cout << "ledger rows " << ledger.rows << ", certified " << (ledger.all_certified ? "yes" : "no")
            << ", max bound " << ledger.max_bound_ulps.get_str() << " ulps at 2^-"
            << ledger.frac_bits << ", B > A rows " << ledger.b_gt_a_rows << '\n';
  auto row = [](const char* name, const QuestionResult& q) {
    std::cout << std::left << std::setw(12) << name << std::right << " checked " << std::setw(10)
              << q.checked << "  violations " << q.violations << "  undecided " << q.undecided;
    if (q.first_violation) std::cout << "  first " << *q.first_violation;
    std::cout << '\n';
  };
  row("prefix", jn.prefix);
  row("gap_lt_2j", jn.gap_lt_2j);
  row("root_lt_j", jn.root_lt_j);
  row("q92", jn.q92);
  row("dusart", jn.dusart);
  row("abstract", jn.abstract);
  return 0;
}

int cmd_accum(const std::string& r, const std::string& sign, long c, uint64_t n_max,
              const std::string& format) {
  if (sign != "+" && sign != "-") throw UsageError("--sign is + or -");
  RationalTarget t;
  try {
    t = RationalTarget::parse(r);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto scan = accum_scan(t, sign == "+" ? 1 : -1, c, n_max);
  if (format == "csv") {
    write_accum_csv(std::cout, scan);
  } else {
    std::cout << "# " << scan.family.label << '\n'
              << std::setw(10) << "N" << std::setw(16) << "p" << std::setw(10) << "mu"
              << std::setw(14) << "abs_err" << '\n';
    for (const auto& rec : scan.records)
      std::cout << std::setw(10) << rec.N << std::setw(16) << rec.p << std::setw(10)
                << rec.mu_decimal << std::setw(14) << rec.err_decimal << '\n';
  }
  std::cerr << scan.records.size() << " records, side violations " << scan.side_violations
            << ", envelope violations " << scan.envelope_violations << ", undecided "
            << scan.undecided << '\n';
  return scan.side_violations || scan.envelope_violations ? 1 : (scan.undecided ? 2 : 0);
}

int cmd_windows(uint64_t lo, uint64_t hi, unsigned threads) {
  if (lo == 0 || hi < lo) throw UsageError("need 1 <= --n-lo <= --n-hi");
  const PrimeStore store = make_store(limit_for_index(hi), threads);
  write_windows_csv(std::cout, windows(store, lo, hi));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks on gaps between square roots of consecutive primes"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));

  auto* list = app.add_subcommand("list", "List the checker catalog");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run checkers over an index range");
  verify->add_option("--checker", va.checker, "Checker id, comma list or 'all'");
  verify->add_option("--n-lo", va.n_lo);
  verify->add_option("--n-hi", va.n_hi);
  verify->add_option("--limit", va.limit, "Prime store limit (at least 10^7)");
  verify->add_option("--format", va.format)->check(CLI::IsMember({"table", "json", "jsonl", "csv"}));
  verify->add_option("--witnesses", va.witnesses, "Witness cap per checker");
  verify->add_option("--resume", va.resume, "Manifest file, created or continued");
  verify->add_option("--chunk", va.chunk, "Indices per manifest save")->check(CLI::PositiveNumber);

  uint64_t sq_lo = 1, sq_hi = 10'000;
  bool sq_even = false;
  std::string fmt = "table";
  auto* squares = app.add_subcommand("squares", "Primes between consecutive squares");
  squares->add_option("--n-lo", sq_lo);
  squares->add_option("--n-hi", sq_hi);
  squares->add_flag("--even", sq_even, "Use windows (2N)^2 .. (2N+1)^2 with prime h values");
  squares->add_option("--format", fmt)->check(CLI::IsMember({"table", "csv"}));

  unsigned pk = 2;
  uint64_t p_hi = 100, budget = kDefaultPowerBudget;
  std::string scheme = "equal";
  auto* powers = app.add_subcommand("powers", "Primes between consecutive k-th powers");
  powers->add_option("--k", pk)->required();
  powers->add_option("--n-hi", p_hi);
  powers->add_option("--budget", budget, "Largest (n+1)^k scanned");
  powers->add_option("--scheme", scheme, "equal, cubic or quartic");

  uint64_t t_hi = 100'000;
  auto* twins = app.add_subcommand("twins", "Twin ledger and j_n questions");
  twins->add_option("--n-hi", t_hi);
  twins->add_option("--format", fmt)->check(CLI::IsMember({"table", "csv"}));

  std::string ar = "1/3", asign = "+";
  long ac = 1;
  uint64_t a_max = 1000;
  auto* accum = app.add_subcommand("accum", "Fractional parts of sqrt p near a rational");
  accum->add_option("--r", ar, "Target a/b in [0, 1]");
  accum->add_option("--sign", asign, "+ or -");
  accum->add_option("--c", ac)->check(CLI::PositiveNumber);
  accum->add_option("--n-max", a_max);
  accum->add_option("--format", fmt)->check(CLI::IsMember({"table", "csv"}));

  uint64_t w_lo = 1, w_hi = 100;
  auto* win = app.add_subcommand("windows", "Dump gap windows as CSV");
  win->add_option("--n-lo", w_lo);
  win->add_option("--n-hi", w_hi);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*list) return cmd_list();
    if (*verify) return cmd_verify(va, threads, joined_argv(argc, argv));
    if (*squares) return cmd_squares(sq_lo, sq_hi, sq_even, fmt, threads);
    if (*powers) return cmd_powers(pk, p_hi, budget, scheme, threads);
    if (*twins) return cmd_twins(t_hi, fmt, threads);
    if (*accum) return cmd_accum(ar, asign, ac, a_max, fmt);
    if (*win) return cmd_windows(w_lo, w_hi, threads);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return kExitUsage;
}
