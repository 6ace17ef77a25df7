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

// Finding a unit lambda > 1 in (1/d) Z[theta].
//
// A large unit a + b theta + c theta^2 has both conjugates small, which pins
// b near c theta and a near c (theta^2 - p).  The search walks c = k/d and
// tests a small window around those centers; units of the form a + b theta
// (c = 0) get their own pass.

#ifndef PECKSEQ_UNIT_SEARCH_HPP_
#define PECKSEQ_UNIT_SEARCH_HPP_

#include <optional>

#include <gmpxx.h>

#include "peckseq/errors.hpp"
#include "peckseq/field.hpp"
#include "peckseq/real.hpp"

namespace peckseq {

struct UnitCandidate {
  FieldElement element;
  Ball real_value;
  mpq_class norm_value;
};

// Characteristic polynomial has integer coefficients.
inline bool is_algebraic_integer(const Field& f, const FieldElement& e) {
  mpq_class tr = f.trace(e);
  mpq_class tr2 = f.trace(f.square(e));
  mpq_class s2 = (tr * tr - tr2) / 2;
  mpq_class n = f.norm(e);
  return tr.get_den() == 1 && s2.get_den() == 1 && n.get_den() == 1;
}

inline bool denominators_divide(const FieldElement& e, const mpz_class& d) {
  for (const mpq_class* c : {&e.x, &e.y, &e.z}) {
    if (!mpz_divisible_p(d.get_mpz_t(), c->get_den_mpz_t())) return false;
  }
  return true;
}

// Whichever of e, -e, 1/e, -1/e exceeds 1.
inline UnitCandidate normalize(const CubicParams& cp, const FieldElement& e,
                               const RealCtx& ctx) {
  Field f(cp);
  mpq_class n = f.norm(e);
  if (abs(n) != 1) throw InvalidInput("not a unit: norm " + n.get_str());
  if (e == Field::one() || e == -Field::one()) throw InvalidInput("unit must not be +-1");
  return escalate(ctx, ctx.precision_bits, [&](mpfr_prec_t prec) {
    Ball th = real_root(cp.p, cp.q, prec);
    Ball v = f.eval(e, th);
    int s = v.certain_sign();
    Ball av = abs(v);
    FieldElement out = s > 0 ? e : FieldElement(-e);
    Ball one = Ball::from_int(1, prec);
    if (av.definitely_greater(one)) {
      return UnitCandidate{out, av, f.norm(out)};
    }
    if (!av.definitely_less(one)) throw AmbiguousRounding("|e| too close to 1");
    out = f.inv(out);
    return UnitCandidate{out, f.eval(out, th), f.norm(out)};
  });
}

// Checks a user-supplied lambda: unit, algebraic integer, > 1, and
// coordinates in (1/d) Z.
inline UnitCandidate validate_unit(const CubicParams& cp, const FieldElement& e,
                                   const RealCtx& ctx) {
  Field f(cp);
  mpq_class n = f.norm(e);
  if (abs(n) != 1) throw InvalidInput("lambda is not a unit: norm " + n.get_str());
  if (!is_algebraic_integer(f, e)) throw InvalidInput("lambda is not an algebraic integer");
  if (!denominators_divide(e, cp.d)) {
    throw InvalidInput("lambda denominators do not divide d = " + cp.d.get_str());
  }
  return escalate(ctx, ctx.precision_bits, [&](mpfr_prec_t prec) {
    Ball v = f.eval(e, real_root(cp.p, cp.q, prec));
    if (!v.definitely_greater(Ball::from_int(1, prec))) {
      if (v.definitely_less(Ball::from_int(1, prec))) {
        throw InvalidInput("lambda must exceed 1");
      }
      throw AmbiguousRounding("lambda too close to 1");
    }
    return UnitCandidate{e, v, n};
  });
}

struct SearchOptions {
  long k_max = 2000;
  long window = 3;
};

inline UnitCandidate search(const CubicParams& cp, const RealCtx& ctx,
                            const SearchOptions& opt = {}) {
  if (opt.k_max < 1 || opt.window < 1) throw InvalidInput("k_max and window must be >= 1");
  Field f(cp);
  const mpfr_prec_t prec = 128;
  Ball th = real_root(cp.p, cp.q, prec);
  Ball th2_minus_p = square(th) - Ball::from_mpz(cp.p, prec);
  mpz_class d3 = cp.d * cp.d * cp.d;
  Ball one = Ball::from_int(1, prec);

  std::optional<UnitCandidate> best;
  auto nearest = [](const Ball& v) {
    mpz_class r;
    Float t(v.prec());
    mpfr_round(t.get(), v.mid().get());
    mpfr_get_z(r.get_mpz_t(), t.get(), MPFR_RNDN);
    return r;
  };
  auto consider = [&](const mpz_class& x, const mpz_class& y, const mpz_class& z) {
    IntElement num{x, y, z};
    if (abs(f.norm(num)) != d3) return;
    FieldElement e = scale(to_rational(num), mpq_class(1, cp.d));
    Ball v = f.eval(e, th);
    if (!v.definitely_greater(one)) return;
    if (best && mpfr_cmp(v.mid().get(), best->real_value.mid().get()) >= 0) return;
    if (!is_algebraic_integer(f, e)) return;
    best = UnitCandidate{e, v, f.norm(e)};
  };

  for (long k = 1; k <= opt.k_max; ++k) {
    mpz_class z = k;
    mpz_class y0 = nearest(th * k);
    mpz_class x0 = nearest(th2_minus_p * k);
    for (long j = -opt.window; j <= opt.window; ++j) {
      mpz_class y = y0 + j;
      for (long i = -opt.window; i <= opt.window; ++i) consider(x0 + i, y, z);
    }
    mpz_class xc = nearest(th * k);
    for (long i = -opt.window; i <= opt.window; ++i) consider(xc + i, mpz_class(k), 0);
  }
  if (!best) throw NotFound(opt.k_max);
  // Report the value at the caller's precision.
  return validate_unit(cp, best->element, ctx);
}

}  // namespace peckseq

#endif  // PECKSEQ_UNIT_SEARCH_HPP_
