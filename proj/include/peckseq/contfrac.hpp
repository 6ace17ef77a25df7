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

// Continued fractions of certified reals.
//
// Both endpoints of an enclosure are expanded exactly as rationals.  The
// reals sharing a quotient prefix form an interval, so the common prefix of
// the two endpoint expansions holds for every point of the ball.

#ifndef PECKSEQ_CONTFRAC_HPP_
#define PECKSEQ_CONTFRAC_HPP_

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "peckseq/errors.hpp"
#include "peckseq/real.hpp"

namespace peckseq {

struct Convergent {
  mpz_class P;
  mpz_class Q;
  friend bool operator==(const Convergent& a, const Convergent& b) {
    return a.P == b.P && a.Q == b.Q;
  }
};

struct ContinuedFraction {
  std::vector<mpz_class> partial_quotients;
  std::vector<Convergent> convergents;
  std::size_t certified_depth = 0;
};

// Floor-based expansion of an exact rational; stops after max_terms or when
// the remainder vanishes.
inline std::vector<mpz_class> rational_quotients(const mpq_class& x, std::size_t max_terms) {
  std::vector<mpz_class> out;
  mpz_class num = x.get_num(), den = x.get_den();
  while (out.size() < max_terms && den != 0) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    out.push_back(a);
    mpz_class r = num - a * den;
    num = den;
    den = r;
  }
  return out;
}

inline ContinuedFraction from_quotients(std::vector<mpz_class> quotients) {
  ContinuedFraction cf;
  cf.partial_quotients = std::move(quotients);
  mpz_class p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
  for (const mpz_class& a : cf.partial_quotients) {
    mpz_class p = a * p_prev + p_prev2;
    mpz_class q = a * q_prev + q_prev2;
    cf.convergents.push_back({p, q});
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
  }
  cf.certified_depth = cf.partial_quotients.size();
  return cf;
}

inline ContinuedFraction expand_rational(const mpq_class& x, std::size_t depth = 1u << 20) {
  return from_quotients(rational_quotients(x, depth));
}

namespace detail {

// Quotients valid for every point of the ball, at most depth of them.
inline std::vector<mpz_class> certified_prefix(const Ball& x, std::size_t depth) {
  mpq_class lo = to_rational(x.lower().get());
  mpq_class hi = to_rational(x.upper().get());
  std::vector<mpz_class> a = rational_quotients(lo, depth);
  if (lo == hi) return a;
  std::vector<mpz_class> b = rational_quotients(hi, depth);
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
  a.resize(n);
  return a;
}

inline std::vector<mpz_class> common_prefix(const std::vector<mpz_class>& a,
                                            const std::vector<mpz_class>& b) {
  std::size_t n = 0;
  while (n < a.size() && n < b.size() && a[n] == b[n]) ++n;
  return {a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n)};
}

}  // namespace detail

using RealSource = std::function<Ball(mpfr_prec_t)>;

// First depth quotients of the value produced by source.  Under the
// recompute-at-double policy a prefix counts only if the runs at P and 2P
// agree on it.  An exact rational whose expansion ends early is returned
// whole.
inline ContinuedFraction expand(const RealSource& source, std::size_t depth,
                                const RealCtx& ctx) {
  mpfr_prec_t prec = std::max<mpfr_prec_t>(ctx.precision_bits, 64);
  std::vector<mpz_class> best;
  for (;;) {
    Ball x = source(prec);
    std::vector<mpz_class> q = detail::certified_prefix(x, depth);
    bool exact = mpfr_zero_p(x.rad().get()) != 0;
    if (ctx.policy == CertificationPolicy::kRecomputeAtDouble && !exact &&
        prec * 2 <= ctx.max_precision_bits) {
      Ball x2 = source(prec * 2);
      q = detail::common_prefix(q, detail::certified_prefix(x2, depth));
    }
    if (q.size() > best.size()) best = q;
    if (best.size() >= depth || exact) return from_quotients(std::move(best));
    if (prec >= ctx.max_precision_bits) {
      throw CertificationFailed("continued fraction certified to depth " +
                                    std::to_string(best.size()) + " of " +
                                    std::to_string(depth),
                                best);
    }
    prec = std::min(prec * 2, ctx.max_precision_bits);
  }
}

// Drops the integer convergents (Q = 1).
inline std::vector<Convergent> noninteger_convergents(const ContinuedFraction& cf) {
  std::vector<Convergent> out;
  for (const Convergent& c : cf.convergents) {
    if (c.Q != 1) out.push_back(c);
  }
  return out;
}

}  // namespace peckseq

#endif  // PECKSEQ_CONTFRAC_HPP_
