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

// Decimal output.  Rounding is half-even on the exact rational value of each
// ball endpoint; a string is printed only when both endpoints give it, so the
// digits are certified.  No locale or printf is involved.

#ifndef PECKSEQ_FORMAT_HPP_
#define PECKSEQ_FORMAT_HPP_

#include <string>
#include <vector>

#include <gmpxx.h>

#include "peckseq/errors.hpp"
#include "peckseq/real.hpp"

namespace peckseq {

namespace detail {

inline mpz_class pow10(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// x * 10^e exactly.
inline mpq_class shift10(const mpq_class& x, long e) {
  mpq_class r = x;
  if (e >= 0) {
    r *= pow10(e);
  } else {
    r /= pow10(-e);
  }
  return r;
}

// floor(log10 x) for x > 0.
inline long floor_log10(const mpq_class& x) {
  long e = static_cast<long>(mpz_sizeinbase(x.get_num_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(x.get_den_mpz_t(), 10));
  // sizeinbase may overshoot by one; settle exactly.
  while (shift10(x, -e) >= 1) ++e;
  while (shift10(x, -e) < 1) --e;
  return e;
}

// Nearest integer to x >= 0, ties to even.
inline mpz_class round_half_even(const mpq_class& x) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  mpq_class frac = x - fl;
  int c = cmp(frac, mpq_class(1, 2));
  if (c > 0 || (c == 0 && mpz_odd_p(fl.get_mpz_t()))) fl += 1;
  return fl;
}

struct Decimal {
  int sign = 0;       // 0 for zero
  mpz_class digits;   // sig digits
  long exponent = 0;  // value = digits * 10^(exponent - sig + 1)
  friend bool operator==(const Decimal& a, const Decimal& b) {
    return a.sign == b.sign && a.digits == b.digits && a.exponent == b.exponent;
  }
};

inline Decimal to_decimal(const mpq_class& x, int sig) {
  Decimal d;
  d.sign = sgn(x);
  if (d.sign == 0) return d;
  mpq_class ax = abs(x);
  long e = floor_log10(ax);
  mpz_class n = round_half_even(shift10(ax, sig - 1 - e));
  if (n == pow10(sig)) {
    n /= 10;
    ++e;
  }
  d.digits = n;
  d.exponent = e;
  return d;
}

inline std::string render(const Decimal& d, int sig) {
  if (d.sign == 0) return "0";
  std::string s = d.digits.get_str();
  std::string out = d.sign < 0 ? "-" : "";
  long e = d.exponent;
  if (e < -5 || e >= sig + 6) {
    out += s.substr(0, 1);
    if (s.size() > 1) out += "." + s.substr(1);
    out += e < 0 ? "e-" : "e+";
    std::string es = std::to_string(e < 0 ? -e : e);
    if (es.size() < 2) es = "0" + es;
    return out + es;
  }
  if (e < 0) return out + "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s;
  std::size_t int_len = static_cast<std::size_t>(e) + 1;
  if (int_len >= s.size()) return out + s + std::string(int_len - s.size(), '0');
  return out + s.substr(0, int_len) + "." + s.substr(int_len);
}

}  // namespace detail

// sig significant digits of an exact rational, half-even.
inline std::string format_sig(const mpq_class& x, int sig) {
  if (sig < 1) throw InvalidInput("need at least one significant digit");
  return detail::render(detail::to_decimal(x, sig), sig);
}

// Throws AmbiguousRounding when the ball's endpoints round differently.
inline std::string format_sig(const Ball& b, int sig) {
  if (sig < 1) throw InvalidInput("need at least one significant digit");
  detail::Decimal lo = detail::to_decimal(to_rational(b.lower().get()), sig);
  detail::Decimal hi = detail::to_decimal(to_rational(b.upper().get()), sig);
  if (!(lo == hi)) {
    throw AmbiguousRounding("value not certified to " + std::to_string(sig) + " digits");
  }
  return detail::render(lo, sig);
}

// Recomputes at doubling precision until the digits are certified.
template <typename F>
std::string format_certified(const RealCtx& ctx, int sig, F&& compute) {
  return escalate(ctx, ctx.precision_bits,
                  [&](mpfr_prec_t prec) { return format_sig(compute(prec), sig); });
}

inline std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ",";
    out += cells[i];
  }
  return out + "\n";
}

}  // namespace peckseq

#endif  // PECKSEQ_FORMAT_HPP_
