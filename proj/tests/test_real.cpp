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


#include <gtest/gtest.h>

#include <cstdlib>

#include "peckseq/real.hpp"
#include "support.hpp"

namespace {

using peckseq::Ball;
using peckseq::RealCtx;

mpq_class lo_of(const Ball& b) { return peckseq::to_rational(b.lower().get()); }
mpq_class hi_of(const Ball& b) { return peckseq::to_rational(b.upper().get()); }

bool encloses(const Ball& b, const mpq_class& x) { return lo_of(b) <= x && x <= hi_of(b); }

TEST(Mod1, SignedDistanceExamples) {
  const mpfr_prec_t p = 128;
  EXPECT_TRUE(encloses(peckseq::mod1(Ball::from_mpq(mpq_class(13, 10), p)), mpq_class(3, 10)));
  Ball half = peckseq::mod1(Ball::from_mpq(mpq_class(5, 2), p));
  EXPECT_EQ(lo_of(half), mpq_class(-1, 2));
  EXPECT_EQ(hi_of(half), mpq_class(-1, 2));
  Ball neg = peckseq::mod1(Ball::from_mpq(mpq_class(-3, 5), p));
  EXPECT_TRUE(encloses(neg, mpq_class(2, 5)));
  EXPECT_TRUE(neg.definitely_greater(Ball::from_int(0, p)));
}

TEST(Mod1, StraddlingHalfIntegerIsAmbiguous) {
  peckseq::Float lo(64), hi(64);
  mpfr_set_d(lo.get(), 2.49, MPFR_RNDN);
  mpfr_set_d(hi.get(), 2.51, MPFR_RNDN);
  Ball wide = Ball::from_interval(lo.get(), hi.get(), 64);
  EXPECT_THROW(peckseq::mod1(wide), peckseq::AmbiguousRounding);
  EXPECT_THROW(peckseq::mod1(Ball::from_string("2.5", 64)), peckseq::AmbiguousRounding);
}

TEST(Ball, AtanOneIsQuarterPi) {
  for (mpfr_prec_t p : {64, 256, 768}) {
    Ball a = atan(Ball::from_int(1, p));
    Ball q = Ball::pi(p) / 4;
    EXPECT_TRUE(a.overlaps(q)) << p;
    EXPECT_LT(a.relative_radius(), std::ldexp(1.0, -static_cast<int>(p) + 8));
  }
}

TEST(Ball, SqrtTwoEnclosesAndSquaresBack) {
  Ball s = sqrt(Ball::from_int(2, 200));
  mpq_class lo = lo_of(s), hi = hi_of(s);
  EXPECT_LT(lo * lo, 2);
  EXPECT_GT(hi * hi, 2);
  EXPECT_LT(hi - lo, mpq_class(1, mpz_class(1) << 190));
}

TEST(Ball, ArithmeticEnclosesExactRationals) {
  const mpq_class a(1, 3), b(-22, 7), c(355, 113);
  for (mpfr_prec_t p : {53, 64, 300}) {
    Ball A = Ball::from_mpq(a, p), B = Ball::from_mpq(b, p), C = Ball::from_mpq(c, p);
    EXPECT_TRUE(encloses(A + B, a + b));
    EXPECT_TRUE(encloses(A - C, a - c));
    EXPECT_TRUE(encloses(A * B * C, a * b * c));
    EXPECT_TRUE(encloses(A / B, a / b));
    EXPECT_TRUE(encloses((A + B) * (A - B) / C, (a + b) * (a - b) / c));
  }
}

TEST(Ball, LogExpRoundTrip) {
  Ball x = Ball::from_mpq(mpq_class(7, 3), 256);
  Ball y = exp(log(x));
  EXPECT_TRUE(y.overlaps(x));
  EXPECT_TRUE(encloses(y, mpq_class(7, 3)));
}

TEST(Ball, HigherPrecisionNestsInsideLower) {
  Ball lo_prec = sqrt(Ball::from_int(3, 128)) * Ball::pi(128);
  Ball hi_prec = sqrt(Ball::from_int(3, 256)) * Ball::pi(256);
  EXPECT_LE(lo_of(lo_prec), lo_of(hi_prec));
  EXPECT_GE(hi_of(lo_prec), hi_of(hi_prec));
}

TEST(Ball, CbrtOfEight) {
  Ball c = peckseq::cbrt(Ball::from_int(8, 200));
  EXPECT_TRUE(encloses(c, mpq_class(2)));
}

TEST(Escalate, DoublesUntilDecided) {
  RealCtx ctx;
  ctx.precision_bits = 64;
  std::vector<mpfr_prec_t> seen;
  mpfr_prec_t got = peckseq::escalate(ctx, 64, [&](mpfr_prec_t p) {
    seen.push_back(p);
    if (p < 512) throw peckseq::AmbiguousRounding("not yet");
    return p;
  });
  EXPECT_EQ(got, 512);
  EXPECT_EQ(seen, (std::vector<mpfr_prec_t>{64, 128, 256, 512}));
}

TEST(Escalate, StopsAtCap) {
  RealCtx ctx;
  ctx.precision_bits = 64;
  ctx.max_precision_bits = 300;
  mpfr_prec_t last = 0;
  EXPECT_THROW(peckseq::escalate(ctx, 64,
                                 [&](mpfr_prec_t p) -> int {
                                   last = p;
                                   throw peckseq::AmbiguousRounding("never");
                                 }),
               peckseq::PrecisionExhausted);
  EXPECT_EQ(last, 300);
}

TEST(RealCtx, ReadsCapFromEnvironment) {
  ::setenv("PECKSEQ_MAX_PREC_BITS", "4096", 1);
  RealCtx ctx = RealCtx::from_env(256);
  EXPECT_EQ(ctx.max_precision_bits, 4096);
  ::setenv("PECKSEQ_MAX_PREC_BITS", "junk", 1);
  EXPECT_THROW(RealCtx::from_env(256), peckseq::InvalidInput);
  ::unsetenv("PECKSEQ_MAX_PREC_BITS");
  EXPECT_EQ(RealCtx::from_env(256).max_precision_bits, peckseq::kDefaultMaxPrecBits);
}

TEST(ToRational, ExactForDyadics) {
  Ball b = Ball::from_mpq(mpq_class(3, 8), 64);
  EXPECT_EQ(lo_of(b), mpq_class(3, 8));
  EXPECT_EQ(hi_of(b), mpq_class(3, 8));
}

}  // namespace
