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

#include "sqrtgap/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sqrtgap {
namespace {

// Primes up to cbrt(2^64) for square-free extraction.
const std::vector<uint32_t>& trial_primes() {
  static const std::vector<uint32_t> primes = [] {
    constexpr uint32_t kBound = 2642246;
    std::vector<uint8_t> comp(kBound + 1, 0);
    std::vector<uint32_t> out;
    for (uint32_t i = 2; i <= kBound; ++i) {
      if (comp[i]) continue;
      out.push_back(i);
      for (uint64_t j = uint64_t{i} * i; j <= kBound; j += i) comp[j] = 1;
    }
    return out;
  }();
  return primes;
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int floor_rat(const Rat& r) { return floor_div(r.get_num(), r.get_den()); }

Int shifted(const Int& v, unsigned bits) {
  Int out;
  mpz_mul_2exp(out.get_mpz_t(), v.get_mpz_t(), bits);
  return out;
}

Int pow2(unsigned bits) { return shifted(Int(1), bits); }

// Exact sign of c + a*sqrt(m) with m square-free > 1, a != 0.
int sign_single(const Rat& c, const Rat& a, const Int& m) {
  const int sc = sgn(c);
  const int sa = sgn(a);
  if (sc == 0) return sa;
  if (sc == sa) return sc;
  const Rat lhs = c * c;
  const Rat rhs = a * a * m;
  return lhs > rhs ? sc : sa;  // never equal: sqrt(m) is irrational
}

Cmp from_int(int s) { return s < 0 ? Cmp::Less : (s > 0 ? Cmp::Greater : Cmp::Equal); }

}  // namespace

uint64_t isqrt(uint64_t x) {
  auto r = static_cast<uint64_t>(std::sqrt(static_cast<double>(x)));
  if (r > 0xFFFFFFFFULL) r = 0xFFFFFFFFULL;
  while (r * r > x) --r;
  while (r < 0xFFFFFFFFULL && (r + 1) * (r + 1) <= x) ++r;
  return r;
}

uint64_t isqrt(u128 x) {
  if (x == 0) return 0;
  const long double est = std::sqrt(static_cast<long double>(x));
  constexpr uint64_t kMax = std::numeric_limits<uint64_t>::max();
  uint64_t r = est >= 18446744073709551615.0L ? kMax : static_cast<uint64_t>(est);
  while (static_cast<u128>(r) * r > x) --r;
  while (r < kMax && static_cast<u128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

Int isqrt(const Int& x) {
  if (x < 0) throw std::domain_error("isqrt of a negative integer");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

bool is_square(const Int& x) { return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0; }

Int to_int(uint64_t v) {
  Int out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

Int to_int(u128 v) {
  const uint64_t words[2] = {static_cast<uint64_t>(v >> 64), static_cast<uint64_t>(v)};
  Int out;
  mpz_import(out.get_mpz_t(), 2, 1, sizeof(uint64_t), 0, 0, words);
  return out;
}

Rat rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

const char* to_string(Cmp c) {
  switch (c) {
    case Cmp::Less: return "Less";
    case Cmp::Equal: return "Equal";
    case Cmp::Greater: return "Greater";
    case Cmp::Undecided: return "Undecided";
  }
  return "?";
}

const PrecisionLadder& PrecisionLadder::standard() {
  static const PrecisionLadder ladder{};
  return ladder;
}

// ---------------------------------------------------------------- fixed point

FixedApprox sqrt_fixed(const Int& m, unsigned frac_bits) {
  if (m < 0) throw std::domain_error("sqrt_fixed of a negative integer");
  if (frac_bits > 4096) throw std::length_error("sqrt_fixed precision budget exceeded");
  const Int scaled = shifted(m, 2 * frac_bits);
  FixedApprox out;
  out.frac_bits = frac_bits;
  out.mantissa = isqrt(scaled);
  out.error_ulps = (out.mantissa * out.mantissa == scaled) ? 0 : 1;
  return out;
}

FixedApprox add(const FixedApprox& a, const FixedApprox& b) {
  if (a.frac_bits != b.frac_bits) throw std::invalid_argument("precision mismatch");
  return {a.mantissa + b.mantissa, a.frac_bits, a.error_ulps + b.error_ulps};
}

FixedApprox sub(const FixedApprox& a, const FixedApprox& b) {
  if (a.frac_bits != b.frac_bits) throw std::invalid_argument("precision mismatch");
  return {a.mantissa - b.upper(), a.frac_bits, a.error_ulps + b.error_ulps};
}

FixedApprox mul(const FixedApprox& a, const FixedApprox& b) {
  if (a.frac_bits != b.frac_bits) throw std::invalid_argument("precision mismatch");
  const Int c[4] = {a.mantissa * b.mantissa, a.mantissa * b.upper(),
                    a.upper() * b.mantissa, a.upper() * b.upper()};
  const Int lo = *std::min_element(c, c + 4);
  const Int hi = *std::max_element(c, c + 4);
  const Int unit = pow2(a.frac_bits);
  FixedApprox out;
  out.frac_bits = a.frac_bits;
  out.mantissa = floor_div(lo, unit);
  out.error_ulps = ceil_div(hi, unit) - out.mantissa;
  return out;
}

// ------------------------------------------------------------------ RootExpr

RootExpr RootExpr::sqrt(const Int& m) {
  if (m < 0) throw std::domain_error("sqrt of a negative integer");
  if (m == 0) return RootExpr();
  if (mpz_sizeinbase(m.get_mpz_t(), 2) > 64)
    throw std::domain_error("general sqrt is limited to 64-bit radicands");
  Int rest = m;
  Int outside = 1;
  Int inside = 1;
  for (uint32_t p : trial_primes()) {
    const Int pp(p);
    if (pp * pp * pp > rest) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= pp;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) outside *= pp;
    if (e & 1) inside *= pp;
  }
  // Remaining factors are all larger than cbrt(rest): at most two of them.
  if (is_square(rest)) {
    outside *= isqrt(rest);
  } else {
    inside *= rest;
  }
  RootExpr r = sqrt_squarefree(inside);
  r *= Rat(outside);
  return r;
}

RootExpr RootExpr::sqrt_squarefree(const Int& m) {
  if (m < 0) throw std::domain_error("sqrt of a negative integer");
  RootExpr r;
  if (m == 0) return r;
  if (m == 1) {
    r.constant_ = 1;
    return r;
  }
  r.terms_.push_back({Rat(1), m});
  return r;
}

void RootExpr::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.radicand < b.radicand; });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (t.radicand == 1) {
      constant_ += t.coef;
      continue;
    }
    if (!merged.empty() && merged.back().radicand == t.radicand) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return sgn(t.coef) == 0; });
  terms_ = std::move(merged);
}

RootExpr RootExpr::operator-() const {
  RootExpr r = *this;
  r.constant_ = -r.constant_;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

RootExpr& RootExpr::operator+=(const RootExpr& o) {
  constant_ += o.constant_;
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

RootExpr& RootExpr::operator-=(const RootExpr& o) { return *this += -o; }

RootExpr& RootExpr::operator*=(const Rat& k) {
  if (sgn(k) == 0) {
    *this = RootExpr();
    return *this;
  }
  constant_ *= k;
  for (auto& t : terms_) t.coef *= k;
  return *this;
}

RootExpr operator+(RootExpr a, const RootExpr& b) { return a += b; }
RootExpr operator-(RootExpr a, const RootExpr& b) { return a -= b; }
RootExpr operator*(RootExpr a, const Rat& k) { return a *= k; }
RootExpr operator*(const Rat& k, RootExpr a) { return a *= k; }
RootExpr operator/(RootExpr a, const Rat& k) {
  if (sgn(k) == 0) throw std::domain_error("division by zero");
  return a *= Rat(1) / k;
}

RootExpr operator*(const RootExpr& a, const RootExpr& b) {
  RootExpr r;
  r.constant_ = a.constant_ * b.constant_;
  for (const auto& t : a.terms_)
    r.terms_.push_back({t.coef * b.constant_, t.radicand});
  for (const auto& t : b.terms_)
    r.terms_.push_back({t.coef * a.constant_, t.radicand});
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      // sqrt(x)sqrt(y) = g sqrt((x/g)(y/g)) with g = gcd; stays square-free.
      Int g;
      mpz_gcd(g.get_mpz_t(), x.radicand.get_mpz_t(), y.radicand.get_mpz_t());
      const Int rad = (x.radicand / g) * (y.radicand / g);
      r.terms_.push_back({x.coef * y.coef * g, rad});
    }
  }
  r.normalize();
  return r;
}

RootExpr RootExpr::inverse() const {
  if (terms_.empty()) {
    if (sgn(constant_) == 0) throw std::domain_error("inverse of zero");
    return RootExpr(Rat(1) / constant_);
  }
  if (terms_.size() == 1) {
    const Rat& c = constant_;
    const Rat& a = terms_[0].coef;
    const Rat den = c * c - a * a * terms_[0].radicand;
    RootExpr conj = *this;
    conj.terms_[0].coef = -a;
    return conj * (Rat(1) / den);
  }
  if (terms_.size() == 2) {
    // (u + b sqrt k)(u - b sqrt k) = u^2 - b^2 k has a single radicand.
    RootExpr conj = *this;
    conj.terms_[1].coef = -conj.terms_[1].coef;
    const RootExpr prod = *this * conj;
    return conj * prod.inverse();
  }
  throw std::domain_error("inverse supports at most two radicands");
}

RootExpr operator/(const RootExpr& a, const RootExpr& b) { return a * b.inverse(); }

bool RootExpr::operator==(const RootExpr& o) const {
  if (constant_ != o.constant_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coef != o.terms_[i].coef || terms_[i].radicand != o.terms_[i].radicand)
      return false;
  return true;
}

std::string RootExpr::str() const {
  std::ostringstream os;
  bool first = true;
  if (sgn(constant_) != 0 || terms_.empty()) {
    os << constant_.get_str();
    first = false;
  }
  for (const auto& t : terms_) {
    Rat c = t.coef;
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    }
    if (c != 1) os << c.get_str() << "*";
    os << "sqrt(" << t.radicand.get_str() << ")";
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- decisions

FixedApprox approx(const RootExpr& e, unsigned frac_bits) {
  const Int unit = pow2(frac_bits);
  const Rat& c = e.constant();
  Int lo = floor_div(c.get_num() * unit, c.get_den());
  Int hi = ceil_div(c.get_num() * unit, c.get_den());
  for (const auto& t : e.terms()) {
    const Int s = isqrt(shifted(t.radicand, 2 * frac_bits));  // sqrt in [s, s+1)
    const Int& n = t.coef.get_num();
    const Int& d = t.coef.get_den();
    if (n > 0) {
      lo += floor_div(n * s, d);
      hi += ceil_div(n * (s + 1), d);
    } else {
      lo += floor_div(n * (s + 1), d);
      hi += ceil_div(n * s, d);
    }
  }
  return {lo, frac_bits, hi - lo};
}

bool algebraic_zero(const RootExpr& e) {
  const auto& ts = e.terms();
  if (ts.empty()) return sgn(e.constant()) == 0;
  if (ts.size() == 1) {
    const Rat& c = e.constant();
    const Rat& a = ts[0].coef;
    return c * c == a * a * ts[0].radicand && sgn(c) == -sgn(a);
  }
  if (ts.size() == 2) {
    // u = c + a sqrt(m) must equal -b sqrt(k): square once, then recurse.
    RootExpr u(e.constant());
    u += RootExpr::sqrt_squarefree(ts[0].radicand) * ts[0].coef;
    const RootExpr rhs = RootExpr::sqrt_squarefree(ts[1].radicand) * (-ts[1].coef);
    if (!algebraic_zero(u * u - rhs * rhs)) return false;
    const int su = u.is_rational() ? sgn(u.constant())
                                   : sign_single(u.constant(), u.terms()[0].coef,
                                                 u.terms()[0].radicand);
    return su == -sgn(ts[1].coef);
  }
  throw std::domain_error("algebraic zero test supports at most two radicands");
}

Cmp sign_of(const RootExpr& e, const PrecisionLadder& ladder) {
  const auto& ts = e.terms();
  if (ts.empty()) return from_int(sgn(e.constant()));
  if (ts.size() == 1) return from_int(sign_single(e.constant(), ts[0].coef, ts[0].radicand));
  for (unsigned bits : ladder.bits) {
    const FixedApprox a = approx(e, bits);
    if (a.mantissa > 0) return Cmp::Greater;
    if (a.upper() < 0) return Cmp::Less;
  }
  if (ts.size() <= 2 && algebraic_zero(e)) return Cmp::Equal;
  return Cmp::Undecided;
}

Cmp cmp_root(const RootExpr& e, const Rat& rhs, const PrecisionLadder& ladder) {
  return sign_of(e - RootExpr(rhs), ladder);
}

Cmp cmp_root(const RootExpr& a, const RootExpr& b, const PrecisionLadder& ladder) {
  return sign_of(a - b, ladder);
}

std::optional<Int> floor_root_approx(const RootExpr& e, const PrecisionLadder& ladder) {
  if (e.is_rational()) return floor_rat(e.constant());
  for (unsigned bits : ladder.bits) {
    const FixedApprox a = approx(e, bits);
    const Int unit = pow2(bits);
    Int lo = floor_div(a.mantissa, unit);
    if (lo == floor_div(a.upper(), unit)) return lo;
  }
  return std::nullopt;
}

std::optional<Int> floor_root(const RootExpr& e, const PrecisionLadder& ladder) {
  const auto& ts = e.terms();
  if (ts.empty()) return floor_rat(e.constant());
  if (ts.size() > 1) return floor_root_approx(e, ladder);
  // (C + A sqrt m) / D over a common denominator; sqrt(A^2 m) lies strictly
  // between t and t + 1.
  const Rat& c = e.constant();
  const Rat& a = ts[0].coef;
  Int D;
  mpz_lcm(D.get_mpz_t(), c.get_den().get_mpz_t(), a.get_den().get_mpz_t());
  const Int C = c.get_num() * (D / c.get_den());
  const Int A = a.get_num() * (D / a.get_den());
  const Int t = isqrt(A * A * ts[0].radicand);
  if (A > 0) return floor_div(C + t, D);
  return floor_div(C - t - 1, D);
}

std::optional<FracParts> frac_root(const RootExpr& e, const PrecisionLadder& ladder) {
  auto f = floor_root(e, ladder);
  if (!f) return std::nullopt;
  return FracParts{*f, e - RootExpr(Rat(*f))};
}

std::optional<Int> round_scaled(const RootExpr& e, unsigned digits,
                                const PrecisionLadder& ladder) {
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  return floor_root(e * Rat(scale) + RootExpr(rat(1, 2)), ladder);
}

std::string scaled_to_decimal(const Int& scaled, unsigned digits) {
  Int mag = abs(scaled);
  std::string s = mag.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (scaled < 0) s.insert(0, "-");
  return s;
}

std::string to_decimal(const RootExpr& e, unsigned digits) {
  const unsigned bits = 64 + 4 * digits;
  const FixedApprox a = approx(e, bits);
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  return scaled_to_decimal(floor_div(a.mantissa * scale, pow2(bits)), digits);
}

}  // namespace sqrtgap
