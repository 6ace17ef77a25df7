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

// Shared helpers for the unit tests and the acceptance runner.

#ifndef PECKSEQ_TESTS_SUPPORT_HPP_
#define PECKSEQ_TESTS_SUPPORT_HPP_

#include <cctype>
#include <string>

#include <gmpxx.h>

#include "fixtures.hpp"
#include "peckseq/peckseq.hpp"

namespace support {

using namespace peckseq;

inline CubicParams cubic_of(const fixtures::ExampleFixture& ex) {
  return depress(mpz_class(ex.A), mpz_class(ex.B), mpz_class(ex.C), mpz_class(ex.D),
                 mpz_class(ex.d));
}

inline TargetPair pair_of(const fixtures::ExampleFixture& ex) {
  return make_target(cubic_of(ex), ex.r0, ex.r1, ex.r2, ex.s);
}

inline FieldElement printed_lambda(const fixtures::ExampleFixture& ex) {
  FieldElement e{mpq_class(ex.la, ex.lden), mpq_class(ex.lb, ex.lden), mpq_class(ex.lc, ex.lden)};
  e.x.canonicalize();
  e.y.canonicalize();
  e.z.canonicalize();
  return e;
}

inline PeckRun run_of(const fixtures::ExampleFixture& ex, const RealCtx& ctx) {
  CubicParams cp = cubic_of(ex);
  return PeckRun(pair_of(ex), validate_unit(cp, printed_lambda(ex), ctx));
}

// Exact value of a printed decimal such as "-0.0627756" or "7.3376e-9".
inline mpq_class parse_decimal(const std::string& text) {
  std::string mant = text;
  long exp10 = 0;
  auto e = text.find_first_of("eE");
  if (e != std::string::npos) {
    mant = text.substr(0, e);
    exp10 = std::stol(text.substr(e + 1));
  }
  auto dot = mant.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  mpq_class r(mpz_class(mant, 10));
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 >= 0) {
    r *= p;
  } else {
    r /= p;
  }
  r.canonicalize();
  return r;
}

// Significant digits shown in a printed decimal, trailing zeros included.
inline int printed_sig(const std::string& text) {
  std::string mant = text.substr(0, text.find_first_of("eE"));
  int count = 0;
  bool started = false;
  for (char c : mant) {
    if (!std::isdigit(static_cast<unsigned char>(c))) continue;
    if (c != '0') started = true;
    if (started) ++count;
  }
  return count == 0 ? 1 : count;
}

// The computed value rounds to the printed one at min(cap, printed digits)
// significant digits: |value - printed| <= half a unit in that digit.
inline bool agrees(const Ball& value, const std::string& printed, int cap) {
  mpq_class p = parse_decimal(printed);
  int s = std::min(cap, printed_sig(printed));
  if (p == 0) return value.contains_zero();
  long e = detail::floor_log10(abs(p));
  mpq_class tol = detail::shift10(mpq_class(1, 2), e - s + 1);
  mpq_class lo = to_rational(value.lower().get());
  mpq_class hi = to_rational(value.upper().get());
  return abs(lo - p) <= tol && abs(hi - p) <= tol;
}

inline std::string convergent_text(const Convergent& c) {
  return c.P.get_str() + "/" + c.Q.get_str();
}

}  // namespace support

#endif  // PECKSEQ_TESTS_SUPPORT_HPP_
