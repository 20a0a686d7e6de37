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

// Shared vocabulary for the catalog translation units.

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sqrtgap/checkers.hpp"

namespace sqrtgap::detail {

using Fn = std::function<Outcome(const EvalContext&, const Neighborhood&)>;

class LambdaEvaluator : public Evaluator {
 public:
  explicit LambdaEvaluator(Fn fn) : fn_(std::move(fn)) {}
  Outcome evaluate(const EvalContext& ctx, const Neighborhood& nb) override {
    return fn_(ctx, nb);
  }

 private:
  Fn fn_;
};

inline std::function<std::unique_ptr<Evaluator>()> stateless(Fn fn) {
  return [fn]() { return std::make_unique<LambdaEvaluator>(fn); };
}

template <class T>
std::function<std::unique_ptr<Evaluator>()> stateful() {
  return []() { return std::make_unique<T>(); };
}

inline Outcome out_of_domain() { return {Status::OutOfDomain, {}, false, false}; }
inline Outcome holds(std::string note = {}) { return {Status::Holds, std::move(note), false, false}; }
inline Outcome notable(std::string note) { return {Status::Holds, std::move(note), false, true}; }
inline Outcome fails(std::string note) { return {Status::Fails, std::move(note), false, false}; }

/// Collects named clauses; the first failures end up in the note.
class Clauses {
 public:
  void require(bool ok, std::string_view label) {
    if (!ok) add(label);
  }
  void require_hard(bool ok, std::string_view label) {
    if (!ok) {
      hard_ = true;
      add(label);
    }
  }
  void iff(bool a, bool b, std::string_view label) { require(a == b, label); }
  void note(std::string s) { extra_ = std::move(s); }
  void mark() { notable_ = true; }
  bool ok() const { return failed_.empty(); }

  Outcome done() const {
    Outcome o;
    o.status = failed_.empty() ? Status::Holds : Status::Fails;
    o.hard = hard_;
    o.notable = notable_;
    o.note = failed_;
    if (!extra_.empty()) o.note += (o.note.empty() ? "" : "; ") + extra_;
    return o;
  }

 private:
  void add(std::string_view label) {
    if (!failed_.empty()) failed_ += ", ";
    failed_ += label;
  }
  std::string failed_;
  std::string extra_;
  bool hard_ = false;
  bool notable_ = false;
};

// Expression shorthands.
inline RootExpr I(uint64_t v) { return RootExpr(Rat(to_int(v))); }
inline RootExpr Q(long a, long b = 1) { return RootExpr(rat(a, b)); }
inline RootExpr root(uint64_t m) { return RootExpr::sqrt(m); }
inline RootExpr root_prime(uint64_t p) { return RootExpr::sqrt_squarefree(p); }
inline Rat R(uint64_t v) { return Rat(to_int(v)); }

inline bool is_even(uint64_t v) { return (v & 1) == 0; }
inline u128 mul(uint64_t a, uint64_t b) { return static_cast<u128>(a) * b; }

// Registration hooks, one per catalog translation unit.
void register_gaps(std::vector<CheckerSpec>& out);
void register_floors(std::vector<CheckerSpec>& out);
void register_mu(std::vector<CheckerSpec>& out);
void register_parity(std::vector<CheckerSpec>& out);
void register_extremal(std::vector<CheckerSpec>& out);
void register_twins(std::vector<CheckerSpec>& out);

}  // namespace sqrtgap::detail
