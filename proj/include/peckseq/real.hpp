// Copyright 2026 The peckseq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Certified real arithmetic on top of MPFR.
//
// A Ball is a midpoint at working precision plus a radius kept at 64 bits and
// always rounded up, so the true value lies in [mid - rad, mid + rad].  Every
// MPFR call is correctly rounded, which bounds the rounding error of the
// midpoint by one ulp; that ulp is folded into the radius whenever MPFR
// reports an inexact result.

#ifndef PECKSEQ_REAL_HPP_
#define PECKSEQ_REAL_HPP_

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include <gmpxx.h>
#include <mpfr.h>

#include "peckseq/errors.hpp"

namespace peckseq {

inline constexpr mpfr_prec_t kRadiusBits = 64;

// RAII handle for an mpfr_t.
class Float {
 public:
  explicit Float(mpfr_prec_t prec = kRadiusBits) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Float(const Float& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Float(Float&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Float& operator=(const Float& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Float& operator=(Float&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Float() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

 private:
  mpfr_t v_;
};

// Exact rational value of a finite MPFR number.
inline mpq_class to_rational(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return mpq_class(0);
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
  mpq_class r(m);
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), e);
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), -e);
  }
  r.canonicalize();
  return r;
}

namespace detail {

// |x| rounded up to radius precision.
inline Float abs_up(mpfr_srcptr x) {
  Float r(kRadiusBits);
  mpfr_abs(r.get(), x, MPFR_RNDU);
  return r;
}

// One ulp of a nonzero x at precision prec, as a radius.
inline Float ulp(mpfr_srcptr x, mpfr_prec_t prec) {
  Float r(kRadiusBits);
  if (mpfr_zero_p(x)) {
    mpfr_set_ui_2exp(r.get(), 1, mpfr_get_emin(), MPFR_RNDU);
  } else {
    mpfr_set_ui_2exp(r.get(), 1, mpfr_get_exp(x) - prec, MPFR_RNDU);
  }
  return r;
}

inline void add_up(Float& acc, const Float& x) {
  mpfr_add(acc.get(), acc.get(), x.get(), MPFR_RNDU);
}

}  // namespace detail

class Ball {
 public:
  explicit Ball(mpfr_prec_t prec = 128) : mid_(prec), rad_(kRadiusBits) {}

  static Ball from_int(long v, mpfr_prec_t prec) {
    Ball b(prec);
    b.note(mpfr_set_si(b.mid_.get(), v, MPFR_RNDN));
    return b;
  }
  static Ball from_mpz(const mpz_class& v, mpfr_prec_t prec) {
    Ball b(prec);
    b.note(mpfr_set_z(b.mid_.get(), v.get_mpz_t(), MPFR_RNDN));
    return b;
  }
  static Ball from_mpq(const mpq_class& v, mpfr_prec_t prec) {
    Ball b(prec);
    b.note(mpfr_set_q(b.mid_.get(), v.get_mpq_t(), MPFR_RNDN));
    return b;
  }
  // Decimal literal; the radius covers the conversion error.
  static Ball from_string(const std::string& s, mpfr_prec_t prec) {
    Ball b(prec);
    if (mpfr_set_str(b.mid_.get(), s.c_str(), 10, MPFR_RNDN) != 0) {
      throw InvalidInput("not a number: " + s);
    }
    b.rad_ = detail::ulp(b.mid_.get(), prec);
    return b;
  }
  // Smallest ball around [lo, hi].
  static Ball from_interval(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t prec) {
    Ball b(prec);
    b.note(mpfr_add(b.mid_.get(), lo, hi, MPFR_RNDN));
    mpfr_div_2ui(b.mid_.get(), b.mid_.get(), 1, MPFR_RNDN);
    Float t(kRadiusBits);
    mpfr_sub(t.get(), hi, b.mid_.get(), MPFR_RNDU);
    Float u(kRadiusBits);
    mpfr_sub(u.get(), b.mid_.get(), lo, MPFR_RNDU);
    mpfr_max(t.get(), t.get(), u.get(), MPFR_RNDU);
    detail::add_up(b.rad_, t);
    return b;
  }
  static Ball pi(mpfr_prec_t prec) {
    Ball b(prec);
    b.note(mpfr_const_pi(b.mid_.get(), MPFR_RNDN));
    return b;
  }

  mpfr_prec_t prec() const { return mid_.prec(); }
  const Float& mid() const { return mid_; }
  const Float& rad() const { return rad_; }
  double to_double() const { return mid_.to_double(); }

  Float lower() const {
    Float r(prec() + 2);
    mpfr_sub(r.get(), mid_.get(), rad_.get(), MPFR_RNDD);
    return r;
  }
  Float upper() const {
    Float r(prec() + 2);
    mpfr_add(r.get(), mid_.get(), rad_.get(), MPFR_RNDU);
    return r;
  }

  bool contains_zero() const {
    Float a(kRadiusBits);
    mpfr_abs(a.get(), mid_.get(), MPFR_RNDD);
    return mpfr_cmp(a.get(), rad_.get()) <= 0;
  }
  // +1 or -1 when certain, 0 when the ball contains zero.
  int sign() const {
    if (contains_zero()) return 0;
    return mpfr_sgn(mid_.get()) > 0 ? 1 : -1;
  }
  int certain_sign() const {
    int s = sign();
    if (s == 0) throw AmbiguousRounding("sign undetermined at " + std::to_string(prec()) + " bits");
    return s;
  }

  // Radius relative to |mid|, as a double; infinity when mid is zero.
  double relative_radius() const {
    if (mid_.is_zero()) return rad_.is_zero() ? 0.0 : HUGE_VAL;
    Float r(kRadiusBits);
    mpfr_div(r.get(), rad_.get(), mid_.get(), MPFR_RNDU);
    mpfr_abs(r.get(), r.get(), MPFR_RNDU);
    return mpfr_get_d(r.get(), MPFR_RNDU);
  }

  // Enlarge the radius by a nonnegative error term.
  void widen(const Float& err) { detail::add_up(rad_, err); }

  Ball operator-() const {
    Ball r(*this);
    mpfr_neg(r.mid_.get(), mid_.get(), MPFR_RNDN);
    return r;
  }

  friend Ball operator+(const Ball& a, const Ball& b) {
    Ball r(std::max(a.prec(), b.prec()));
    r.rad_ = a.rad_;
    detail::add_up(r.rad_, b.rad_);
    r.note(mpfr_add(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN));
    return r;
  }
  friend Ball operator-(const Ball& a, const Ball& b) {
    Ball r(std::max(a.prec(), b.prec()));
    r.rad_ = a.rad_;
    detail::add_up(r.rad_, b.rad_);
    r.note(mpfr_sub(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN));
    return r;
  }
  friend Ball operator*(const Ball& a, const Ball& b) {
    Ball r(std::max(a.prec(), b.prec()));
    Float am = detail::abs_up(a.mid_.get());
    Float bm = detail::abs_up(b.mid_.get());
    Float t(kRadiusBits);
    mpfr_mul(t.get(), am.get(), b.rad_.get(), MPFR_RNDU);
    detail::add_up(r.rad_, t);
    mpfr_mul(t.get(), bm.get(), a.rad_.get(), MPFR_RNDU);
    detail::add_up(r.rad_, t);
    mpfr_mul(t.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    detail::add_up(r.rad_, t);
    r.note(mpfr_mul(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN));
    return r;
  }
  friend Ball operator/(const Ball& a, const Ball& b) {
    // |a/b - am/bm| <= (|am| rb + |bm| ra) / (|bm| (|bm| - rb))
    Float bl(kRadiusBits);
    mpfr_abs(bl.get(), b.mid_.get(), MPFR_RNDD);
    mpfr_sub(bl.get(), bl.get(), b.rad_.get(), MPFR_RNDD);
    if (mpfr_sgn(bl.get()) <= 0) {
      throw AmbiguousRounding("division by a ball containing zero");
    }
    Ball r(std::max(a.prec(), b.prec()));
    Float am = detail::abs_up(a.mid_.get());
    Float bm = detail::abs_up(b.mid_.get());
    Float num(kRadiusBits), t(kRadiusBits), den(kRadiusBits);
    mpfr_mul(num.get(), am.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_mul(t.get(), bm.get(), a.rad_.get(), MPFR_RNDU);
    mpfr_add(num.get(), num.get(), t.get(), MPFR_RNDU);
    mpfr_abs(den.get(), b.mid_.get(), MPFR_RNDD);
    mpfr_mul(den.get(), den.get(), bl.get(), MPFR_RNDD);
    mpfr_div(t.get(), num.get(), den.get(), MPFR_RNDU);
    detail::add_up(r.rad_, t);
    r.note(mpfr_div(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN));
    return r;
  }

  friend Ball operator+(const Ball& a, long k) { return a + from_int(k, a.prec()); }
  friend Ball operator+(long k, const Ball& a) { return from_int(k, a.prec()) + a; }
  friend Ball operator-(long k, const Ball& a) { return from_int(k, a.prec()) - a; }
  friend Ball operator/(long k, const Ball& a) { return from_int(k, a.prec()) / a; }
  friend Ball operator-(const Ball& a, long k) { return a - from_int(k, a.prec()); }
  friend Ball operator*(const Ball& a, long k) { return a * from_int(k, a.prec()); }
  friend Ball operator*(long k, const Ball& a) { return a * from_int(k, a.prec()); }
  friend Ball operator/(const Ball& a, long k) { return a / from_int(k, a.prec()); }
  friend Ball operator*(const Ball& a, const mpz_class& k) { return a * from_mpz(k, a.prec()); }
  friend Ball operator*(const mpz_class& k, const Ball& a) { return a * from_mpz(k, a.prec()); }
  friend Ball operator*(const Ball& a, const mpq_class& k) { return a * from_mpq(k, a.prec()); }
  friend Ball operator*(const mpq_class& k, const Ball& a) { return a * from_mpq(k, a.prec()); }
  friend Ball operator+(const Ball& a, const mpq_class& k) { return a + from_mpq(k, a.prec()); }
  friend Ball operator-(const Ball& a, const mpz_class& k) {
    Ball r(a.prec());
    r.rad_ = a.rad_;
    r.note(mpfr_sub_z(r.mid_.get(), a.mid_.get(), k.get_mpz_t(), MPFR_RNDN));
    return r;
  }

  friend Ball abs(const Ball& a) {
    Ball r(a);
    mpfr_abs(r.mid_.get(), a.mid_.get(), MPFR_RNDN);
    return r;
  }

  friend Ball sqrt(const Ball& a) {
    Float lo(kRadiusBits);
    mpfr_sub(lo.get(), a.mid_.get(), a.rad_.get(), MPFR_RNDD);
    Ball r(a.prec());
    if (mpfr_sgn(lo.get()) > 0) {
      // |sqrt(x) - sqrt(m)| <= rad / sqrt(lo)
      mpfr_sqrt(lo.get(), lo.get(), MPFR_RNDD);
      Float t(kRadiusBits);
      mpfr_div(t.get(), a.rad_.get(), lo.get(), MPFR_RNDU);
      detail::add_up(r.rad_, t);
      r.note(mpfr_sqrt(r.mid_.get(), a.mid_.get(), MPFR_RNDN));
      return r;
    }
    Float hi = a.upper();
    if (mpfr_sgn(hi.get()) < 0) throw DomainError("sqrt of a negative number");
    Float h(kRadiusBits);
    mpfr_sqrt(h.get(), hi.get(), MPFR_RNDU);
    detail::add_up(r.rad_, h);
    if (mpfr_sgn(a.mid_.get()) > 0) {
      r.note(mpfr_sqrt(r.mid_.get(), a.mid_.get(), MPFR_RNDN));
    }
    return r;
  }

  friend Ball log(const Ball& a) {
    Float lo(kRadiusBits);
    mpfr_sub(lo.get(), a.mid_.get(), a.rad_.get(), MPFR_RNDD);
    if (mpfr_sgn(lo.get()) <= 0) {
      if (mpfr_sgn(a.upper().get()) <= 0) throw DomainError("log of a nonpositive number");
      throw AmbiguousRounding("log argument not certified positive");
    }
    Ball r(a.prec());
    Float t(kRadiusBits);
    mpfr_div(t.get(), a.rad_.get(), lo.get(), MPFR_RNDU);
    detail::add_up(r.rad_, t);
    r.note(mpfr_log(r.mid_.get(), a.mid_.get(), MPFR_RNDN));
    return r;
  }

  friend Ball exp(const Ball& a) {
    Ball r(a.prec());
    Float hi(kRadiusBits);
    mpfr_add(hi.get(), a.mid_.get(), a.rad_.get(), MPFR_RNDU);
    mpfr_exp(hi.get(), hi.get(), MPFR_RNDU);
    Float t(kRadiusBits);
    mpfr_mul(t.get(), hi.get(), a.rad_.get(), MPFR_RNDU);
    detail::add_up(r.rad_, t);
    r.note(mpfr_exp(r.mid_.get(), a.mid_.get(), MPFR_RNDN));
    return r;
  }

  friend Ball atan(const Ball& a) {
    Ball r(a.prec());
    r.rad_ = a.rad_;
    r.note(mpfr_atan(r.mid_.get(), a.mid_.get(), MPFR_RNDN));
    return r;
  }

  // Interval maximum.
  friend Ball max(const Ball& a, const Ball& b) {
    Float al = a.lower(), bl = b.lower(), au = a.upper(), bu = b.upper();
    mpfr_prec_t p = std::max(a.prec(), b.prec());
    Float lo(p + 2), hi(p + 2);
    mpfr_max(lo.get(), al.get(), bl.get(), MPFR_RNDD);
    mpfr_max(hi.get(), au.get(), bu.get(), MPFR_RNDU);
    return from_interval(lo.get(), hi.get(), p);
  }

  // Exact floor when the whole ball has the same floor.
  mpz_class certain_floor() const {
    mpz_class lo, hi;
    mpfr_get_z(lo.get_mpz_t(), lower().get(), MPFR_RNDD);
    mpfr_get_z(hi.get_mpz_t(), upper().get(), MPFR_RNDD);
    if (lo != hi) throw AmbiguousRounding("floor undetermined at " + std::to_string(prec()) + " bits");
    return lo;
  }

  bool definitely_less(const Ball& b) const {
    return mpfr_cmp(upper().get(), b.lower().get()) < 0;
  }
  bool definitely_greater(const Ball& b) const { return b.definitely_less(*this); }
  // Intersection test; used by the P versus 2P agreement check.
  bool overlaps(const Ball& b) const {
    return mpfr_cmp(lower().get(), b.upper().get()) <= 0 &&
           mpfr_cmp(b.lower().get(), upper().get()) <= 0;
  }

 private:
  void note(int ternary) {
    if (ternary != 0) detail::add_up(rad_, detail::ulp(mid_.get(), prec()));
  }

  Float mid_;
  Float rad_;
};

inline Ball square(const Ball& a) { return a * a; }

// Cube root of a positive ball.
inline Ball cbrt(const Ball& a) { return exp(log(a) / 3); }

// Signed distance to the nearest integer: x - floor(x + 1/2), in [-1/2, 1/2).
inline Ball mod1(const Ball& x) {
  Float lo = x.lower(), hi = x.upper();
  Float half(kRadiusBits);
  mpfr_set_d(half.get(), 0.5, MPFR_RNDN);
  mpfr_add(lo.get(), lo.get(), half.get(), MPFR_RNDD);
  mpfr_add(hi.get(), hi.get(), half.get(), MPFR_RNDU);
  mpz_class kl, kh;
  mpfr_get_z(kl.get_mpz_t(), lo.get(), MPFR_RNDD);
  mpfr_get_z(kh.get_mpz_t(), hi.get(), MPFR_RNDD);
  if (kl != kh) {
    throw AmbiguousRounding("enclosure straddles a half-integer at " +
                            std::to_string(x.prec()) + " bits");
  }
  return x - kl;
}

// Distance to the nearest integer.
inline Ball dist1(const Ball& x) { return abs(mod1(x)); }

enum class CertificationPolicy { kRecomputeAtDouble, kInterval };

inline constexpr mpfr_prec_t kDefaultMaxPrecBits = mpfr_prec_t{1} << 26;

// Precision configuration.  Immutable; the only state is the numbers.
struct RealCtx {
  mpfr_prec_t precision_bits = 256;
  CertificationPolicy policy = CertificationPolicy::kRecomputeAtDouble;
  mpfr_prec_t max_precision_bits = kDefaultMaxPrecBits;

  // Reads PECKSEQ_MAX_PREC_BITS when set.
  static RealCtx from_env(mpfr_prec_t bits = 256) {
    RealCtx ctx;
    ctx.precision_bits = bits;
    if (const char* cap = std::getenv("PECKSEQ_MAX_PREC_BITS")) {
      char* end = nullptr;
      long long v = std::strtoll(cap, &end, 10);
      if (end == cap || *end != '\0' || v < 64) {
        throw InvalidInput("PECKSEQ_MAX_PREC_BITS must be an integer >= 64");
      }
      ctx.max_precision_bits = static_cast<mpfr_prec_t>(
          std::min<long long>(v, MPFR_PREC_MAX / 4));
    }
    ctx.precision_bits = std::min(ctx.precision_bits, ctx.max_precision_bits);
    return ctx;
  }
};

// Calls f(prec) with doubling precision until it stops throwing
// AmbiguousRounding.  The last attempt runs exactly at the cap.
template <typename F>
auto escalate(const RealCtx& ctx, mpfr_prec_t start, F&& f) -> decltype(f(start)) {
  mpfr_prec_t prec = std::max<mpfr_prec_t>(std::max(start, ctx.precision_bits), 64);
  if (prec > ctx.max_precision_bits) {
    throw PrecisionExhausted("needs " + std::to_string(prec) + " bits, cap is " +
                             std::to_string(ctx.max_precision_bits));
  }
  for (;;) {
    try {
      return f(prec);
    } catch (const AmbiguousRounding& e) {
      if (prec >= ctx.max_precision_bits) {
        throw PrecisionExhausted(std::string(e.what()) + "; cap " +
                                 std::to_string(ctx.max_precision_bits) + " bits");
      }
      prec = std::min(prec * 2, ctx.max_precision_bits);
    }
  }
}

inline std::size_t bit_length(const mpz_class& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

}  // namespace peckseq

#endif  // PECKSEQ_REAL_HPP_
