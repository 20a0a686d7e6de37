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

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sqrtgap/exact.hpp"
#include "sqrtgap/primes.hpp"
#include "sqrtgap/window.hpp"

namespace sqrtgap {

enum class Kind { Universal, ExceptionSet, Equivalence, Survey, Trend };
enum class Status { Holds, Fails, Undecided, OutOfDomain };
enum class Verdict { Pass, Fail, ExceptionsConfirmed, SurveyResult, TrendResult, UndecidedPresent };

const char* to_string(Kind k);
const char* to_string(Verdict v);

/// Thrown by Decider when the precision ladder is exhausted. The engine
/// turns it into an Undecided outcome for the current index.
class Undecided : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownChecker : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact comparisons that never return an uncertain answer silently.
class Decider {
 public:
  explicit Decider(const PrecisionLadder& ladder = PrecisionLadder::standard())
      : ladder_(ladder) {}

  Cmp cmp(const RootExpr& a, const RootExpr& b) const;
  bool lt(const RootExpr& a, const RootExpr& b) const { return cmp(a, b) == Cmp::Less; }
  bool le(const RootExpr& a, const RootExpr& b) const { return cmp(a, b) != Cmp::Greater; }
  bool gt(const RootExpr& a, const RootExpr& b) const { return cmp(a, b) == Cmp::Greater; }
  bool ge(const RootExpr& a, const RootExpr& b) const { return cmp(a, b) != Cmp::Less; }
  bool eq(const RootExpr& a, const RootExpr& b) const { return cmp(a, b) == Cmp::Equal; }
  Int floor(const RootExpr& e) const;
  RootExpr frac(const RootExpr& e) const;
  const PrecisionLadder& ladder() const { return ladder_; }

 private:
  PrecisionLadder ladder_;
};

/// A window together with lazily built exact views.
class Win {
 public:
  explicit Win(const GapWindow& w) : w_(w) {}
  const GapWindow& operator*() const { return w_; }
  const GapWindow* operator->() const { return &w_; }
  const RootViews& views() const;

 private:
  GapWindow w_;
  mutable std::optional<RootViews> views_;
};

/// The window at n plus its neighbours. prev is null at n = 1.
struct Neighborhood {
  const Win* prev = nullptr;
  const Win& cur;
  const Win& next;
};

struct EvalContext {
  const PrimeStore& store;
  const Decider& dec;
};

struct Outcome {
  Status status = Status::Holds;
  std::string note;
  bool hard = false;     // a clause that must hold even at listed exceptions
  bool notable = false;  // keep as witness although it holds
};

/// One instance per run. prepare() seeds any state that depends on indices
/// below n_lo, so a sharded run reproduces a single pass.
class Evaluator {
 public:
  virtual ~Evaluator() = default;
  virtual void prepare(const EvalContext& ctx, uint64_t n_lo);
  virtual Outcome evaluate(const EvalContext& ctx, const Neighborhood& nb) = 0;
};

struct CheckerSpec {
  std::string id;
  Kind kind = Kind::Universal;
  std::string claim;   // the statement, in formula form
  std::string domain;  // side conditions on n and the window
  std::vector<uint64_t> expected_exceptions;
  std::vector<uint64_t> expected_hits;  // reference set for surveys, if any
  bool conjecture = false;
  std::function<std::unique_ptr<Evaluator>()> make;
};

const std::vector<CheckerSpec>& catalog();
const CheckerSpec& find_checker(const std::string& id);

struct Counts {
  uint64_t holds = 0;
  uint64_t fails = 0;
  uint64_t undecided = 0;
  uint64_t out_of_domain = 0;
  uint64_t total() const { return holds + fails + undecided + out_of_domain; }
};

struct Witness {
  uint64_t n = 0;
  uint64_t p = 0;
  uint64_t q = 0;
  uint64_t d = 0;
  std::string status;
  std::string note;
};

struct CheckOptions {
  std::size_t witness_cap = 32;
  std::size_t list_cap = 4096;  // violations and survey hits
  PrecisionLadder ladder = PrecisionLadder::standard();
  unsigned threads = 1;
};

struct CheckReport {
  std::string id;
  Kind kind = Kind::Universal;
  bool conjecture = false;
  uint64_t n_lo = 0;
  uint64_t n_hi = 0;
  Counts counts;
  uint64_t hard_fails = 0;
  std::vector<Witness> witnesses;
  std::vector<uint64_t> violations;
  bool violations_truncated = false;
  std::vector<uint64_t> hits;
  bool hits_truncated = false;
  std::vector<uint64_t> expected_exceptions;
  std::vector<uint64_t> expected_hits;
  std::vector<std::string> notes;
  Verdict verdict = Verdict::Pass;
};

Verdict compute_verdict(const CheckReport& r);

/// Evaluates one checker over [n_lo, n_hi]. The store must cover p_{n_hi+2}.
CheckReport run_checker(const std::string& id, const PrimeStore& store, uint64_t n_lo,
                        uint64_t n_hi, const CheckOptions& opts = {});

/// One streaming pass shared by several checkers; reports in input order.
std::vector<CheckReport> run_checkers(const std::vector<std::string>& ids,
                                      const PrimeStore& store, uint64_t n_lo, uint64_t n_hi,
                                      const CheckOptions& opts = {});

/// Every catalog entry, sorted by id.
std::vector<CheckReport> run_all(const PrimeStore& store, uint64_t n_lo, uint64_t n_hi,
                                 const CheckOptions& opts = {});

/// Joins reports over adjacent ranges [a.n_lo, a.n_hi] and [a.n_hi+1, b.n_hi].
CheckReport merge_reports(const CheckReport& a, const CheckReport& b,
                          const CheckOptions& opts = {});

/// Smallest prime-store limit that lets the engine evaluate up to n_hi.
uint64_t limit_for_index(uint64_t n_hi);

}  // namespace sqrtgap
