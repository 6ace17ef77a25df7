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

#include <cmath>

#include "fixtures.hpp"
#include "support.hpp"

namespace {

using namespace peckseq;

// log(found) / log(printed) or its reciprocal, whichever is >= 1, as a
// certified ball.
Ball power_ratio(const UnitCandidate& found, const FieldElement& printed, const CubicParams& cp,
                 mpfr_prec_t prec) {
  Field f(cp);
  Ball th = real_root(cp.p, cp.q, prec);
  Ball a = log(f.eval(found.element, th));
  Ball b = log(f.eval(printed, th));
  Ball r = a / b;
  return r.definitely_less(Ball::from_int(1, prec)) ? b / a : r;
}

bool near_integer(const Ball& r, const char* tol) {
  Ball dist = abs(mod1(r));
  return dist.definitely_less(Ball::from_string(tol, r.prec()));
}

TEST(Normalize, InvertsSmallUnits) {
  RealCtx ctx;
  CubicParams c2 = from_depressed(0, 2, mpz_class(1));
  EXPECT_EQ(normalize(c2, FieldElement{-1, 1, 0}, ctx).element, (FieldElement{1, 1, 1}));
  CubicParams c5 = from_depressed(8, 10, mpz_class(1));
  EXPECT_EQ(normalize(c5, FieldElement{-11, 0, 1}, ctx).element, (FieldElement{9, 10, 3}));
  CubicParams c10 = depress(1, -1, 1, -2, mpz_class(9));
  UnitCandidate u = normalize(c10, FieldElement{mpq_class(-2, 3), mpq_class(1, 3), 0}, ctx);
  EXPECT_EQ(u.element, (FieldElement{mpq_class(10, 9), mpq_class(2, 9), mpq_class(1, 9)}));
  EXPECT_TRUE(denominators_divide(u.element, c10.d));
}

TEST(Normalize, RejectsNonUnits) {
  RealCtx ctx;
  CubicParams c2 = from_depressed(0, 2, mpz_class(1));
  EXPECT_THROW(normalize(c2, FieldElement{2, 0, 0}, ctx), InvalidInput);
  EXPECT_THROW(normalize(c2, FieldElement{1, 0, 0}, ctx), InvalidInput);
  EXPECT_THROW(normalize(c2, FieldElement{-1, 0, 0}, ctx), InvalidInput);
}

TEST(ValidateUnit, ChecksAllConditions) {
  RealCtx ctx;
  CubicParams c2 = from_depressed(0, 2, mpz_class(1));
  EXPECT_NO_THROW(validate_unit(c2, FieldElement{1, 1, 1}, ctx));
  EXPECT_THROW(validate_unit(c2, FieldElement{-1, 1, 0}, ctx), InvalidInput);  // below 1
  EXPECT_THROW(validate_unit(c2, FieldElement{3, 0, 1}, ctx), InvalidInput);   // norm 29
  CubicParams c3 = depress(1, -7, 0, -2, mpz_class(3));
  FieldElement l3{mpq_class(96109, 9), mpq_class(25898, 9), mpq_class(1834, 9)};
  EXPECT_THROW(validate_unit(c3, l3, ctx), InvalidInput);  // denominators 9 do not divide 3
  CubicParams c3ok = depress(1, -7, 0, -2, mpz_class(9));
  EXPECT_NO_THROW(validate_unit(c3ok, l3, ctx));
}

TEST(AlgebraicInteger, HalfThetaIsNot) {
  Field f(0, 2);
  EXPECT_TRUE(is_algebraic_integer(f, FieldElement{1, 1, 1}));
  EXPECT_FALSE(is_algebraic_integer(f, FieldElement{0, mpq_class(1, 2), 0}));
  Field g(147, 740);
  EXPECT_TRUE(is_algebraic_integer(
      g, FieldElement{mpq_class(96109, 9), mpq_class(25898, 9), mpq_class(1834, 9)}));
}

TEST(Search, CubeRootTwo) {
  RealCtx ctx;
  CubicParams cp = from_depressed(0, 2, mpz_class(1));
  UnitCandidate u = search(cp, ctx, {10, 3});
  EXPECT_EQ(u.element, (FieldElement{1, 1, 1}));
  EXPECT_EQ(abs(u.norm_value), 1);
}

TEST(Search, PlasticNumberFieldWithinBand) {
  RealCtx ctx;
  CubicParams cp = from_depressed(1, 1, mpz_class(1));
  UnitCandidate u = search(cp, ctx, {10, 3});
  Field f(cp);
  EXPECT_EQ(abs(f.norm(u.element)), 1);
  Ball th = real_root(cp, ctx);
  Ball lam = f.eval(u.element, th);
  EXPECT_TRUE(lam.definitely_greater(Ball::from_int(1, lam.prec())));
  Ball th4 = square(square(th));
  EXPECT_FALSE(lam.definitely_greater(th4));
}

TEST(Search, LargeUnitWithDenominatorNine) {
  RealCtx ctx;
  CubicParams cp = from_depressed(147, 740, mpz_class(9));
  UnitCandidate u = search(cp, ctx, {2000, 3});
  EXPECT_EQ(u.element, (FieldElement{mpq_class(96109, 9), mpq_class(25898, 9),
                                     mpq_class(1834, 9)}));
  EXPECT_TRUE(support::agrees(u.real_value, "91946.994", 8));
}

TEST(Search, GivesUpBeyondTheBudget) {
  RealCtx ctx;
  CubicParams cp = from_depressed(147, 740, mpz_class(9));
  EXPECT_THROW(search(cp, ctx, {5, 1}), NotFound);
  EXPECT_THROW(search(cp, ctx, {0, 3}), InvalidInput);
}

TEST(Search, EveryExampleRecoversItsUnitOrAPower) {
  RealCtx ctx;
  for (const auto& ex : fixtures::examples()) {
    CubicParams cp = support::cubic_of(ex);
    UnitCandidate u = search(cp, ctx, {2000, 3});
    EXPECT_EQ(abs(u.norm_value), 1) << "example " << ex.id;
    Ball r = power_ratio(u, support::printed_lambda(ex), cp, 256);
    EXPECT_TRUE(near_integer(r, "1e-8")) << "example " << ex.id << " ratio " << r.to_double();
  }
}

}  // namespace
