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

// Exact arithmetic in K = Q(theta), theta the real root of x^3 - p x - q.
//
// An element x + y theta + z theta^2 multiplies through its matrix in the
// basis (1, theta, theta^2):
//
//   [ x   q z       q y     ]
//   [ y   x + p z   p y + q z ]
//   [ z   y         x + p z ]

#ifndef PECKSEQ_FIELD_HPP_
#define PECKSEQ_FIELD_HPP_

#include <array>
#include <optional>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "peckseq/errors.hpp"
#include "peckseq/real.hpp"

namespace peckseq {

enum class DSource { kUserSupplied, kDiscriminantDefault };

template <typename T>
struct Element {
  T x{0}, y{0}, z{0};

  friend bool operator==(const Element& a, const Element& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  bool is_zero() const { return x == 0 && y == 0 && z == 0; }
};

using FieldElement = Element<mpq_class>;
using IntElement = Element<mpz_class>;

inline FieldElement to_rational(const IntElement& a) {
  return {mpq_class(a.x), mpq_class(a.y), mpq_class(a.z)};
}

template <typename T>
Element<T> operator+(const Element<T>& a, const Element<T>& b) {
  return {T(a.x + b.x), T(a.y + b.y), T(a.z + b.z)};
}
template <typename T>
Element<T> operator-(const Element<T>& a, const Element<T>& b) {
  return {T(a.x - b.x), T(a.y - b.y), T(a.z - b.z)};
}
template <typename T>
Element<T> operator-(const Element<T>& a) {
  return {T(-a.x), T(-a.y), T(-a.z)};
}
template <typename T, typename S>
Element<T> scale(const Element<T>& a, const S& k) {
  return {T(a.x * k), T(a.y * k), T(a.z * k)};
}

// Sign of g(x) = x^3 - p x - q at an exact integer.
inline mpz_class depressed_value(const mpz_class& p, const mpz_class& q,
                                 const mpz_class& x) {
  return mpz_class(x * x * x - p * x - q);
}

// floor(theta) by integer bisection.  With one real root g < 0 left of theta
// and g > 0 right of it.
inline mpz_class floor_real_root(const mpz_class& p, const mpz_class& q) {
  mpz_class bound = 1 + std::max(mpz_class(abs(p)), mpz_class(abs(q)));
  mpz_class lo = -bound, hi = bound;  // g(lo) < 0 < g(hi)
  while (hi - lo > 1) {
    mpz_class mid = lo + (hi - lo) / 2;
    if (sgn(depressed_value(p, q, mid)) <= 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

struct AffineMap {
  // theta = scale * alpha + shift
  mpz_class scale{1};
  mpz_class shift{0};
};

struct CubicParams {
  mpz_class p, q;
  mpz_class A{1}, B{0}, C{0}, D{0};
  mpz_class d{1};
  DSource d_source = DSource::kDiscriminantDefault;
  AffineMap map;

  mpz_class discriminant() const { return mpz_class(4 * p * p * p - 27 * q * q); }
  bool reduced_branch() const { return B == 0; }
};

namespace detail {

inline void validate_depressed(const mpz_class& p, const mpz_class& q) {
  mpz_class disc = 4 * p * p * p - 27 * q * q;
  if (disc >= 0) {
    throw InvalidInput("x^3 - (" + p.get_str() + ")x - (" + q.get_str() +
                       ") has three real roots (4p^3 - 27q^2 >= 0)");
  }
  // A rational root of a monic integer cubic is an integer, and it is real,
  // so it can only be floor(theta).
  mpz_class r = floor_real_root(p, q);
  if (depressed_value(p, q, r) == 0) {
    throw InvalidInput("cubic is reducible: integer root " + r.get_str());
  }
}

inline void set_d(CubicParams& cp, const std::optional<mpz_class>& d) {
  if (d) {
    if (*d < 1) throw InvalidInput("d must be a positive integer");
    cp.d = *d;
    cp.d_source = DSource::kUserSupplied;
  } else {
    cp.d = abs(cp.discriminant());
    cp.d_source = DSource::kDiscriminantDefault;
  }
}

}  // namespace detail

// Parameters for a cubic already in the form x^3 - p x - q.
inline CubicParams from_depressed(const mpz_class& p, const mpz_class& q,
                                  const std::optional<mpz_class>& d = std::nullopt) {
  detail::validate_depressed(p, q);
  CubicParams cp;
  cp.p = p;
  cp.q = q;
  cp.A = 1;
  cp.B = 0;
  cp.C = -p;
  cp.D = -q;
  cp.map = {1, 0};
  detail::set_d(cp, d);
  return cp;
}

// Moves A x^3 + B x^2 + C x + D to x^3 - p x - q.  General case:
// theta = 3 A alpha + B.  When B = 0, theta = A alpha keeps the numbers small.
inline CubicParams depress(const mpz_class& A, const mpz_class& B,
                           const mpz_class& C, const mpz_class& D,
                           const std::optional<mpz_class>& d = std::nullopt) {
  if (A <= 0) throw InvalidInput("leading coefficient A must be positive");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), C.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), D.get_mpz_t());
  if (g != 1) throw InvalidInput("coefficients A,B,C,D must have gcd 1");
  CubicParams cp;
  cp.A = A;
  cp.B = B;
  cp.C = C;
  cp.D = D;
  if (B == 0) {
    cp.p = -A * C;
    cp.q = -A * A * D;
    cp.map = {A, 0};
  } else {
    cp.p = 3 * (B * B - 3 * A * C);
    cp.q = -2 * B * B * B + 9 * A * B * C - 27 * A * A * D;
    cp.map = {3 * A, B};
  }
  detail::validate_depressed(cp.p, cp.q);
  detail::set_d(cp, d);
  return cp;
}

// Arithmetic in Q(theta) for fixed p, q.  Stateless apart from p and q.
class Field {
 public:
  Field(mpz_class p, mpz_class q) : p_(std::move(p)), q_(std::move(q)) {}
  explicit Field(const CubicParams& cp) : Field(cp.p, cp.q) {}

  const mpz_class& p() const { return p_; }
  const mpz_class& q() const { return q_; }

  static FieldElement one() { return {1, 0, 0}; }
  static FieldElement theta() { return {0, 1, 0}; }
  static FieldElement theta_squared() { return {0, 0, 1}; }

  template <typename T>
  std::array<std::array<T, 3>, 3> matrix(const Element<T>& a) const {
    T pz = a.z * p_;
    return {{{a.x, T(q_ * a.z), T(q_ * a.y)},
             {a.y, T(a.x + pz), T(p_ * a.y + q_ * a.z)},
             {a.z, a.y, T(a.x + pz)}}};
  }

  template <typename T>
  Element<T> mul(const Element<T>& a, const Element<T>& b) const {
    T pz = a.z * p_;
    T d1 = a.x + pz;
    return {T(a.x * b.x + q_ * (a.z * b.y + a.y * b.z)),
            T(a.y * b.x + d1 * b.y + (p_ * a.y + q_ * a.z) * b.z),
            T(a.z * b.x + a.y * b.y + d1 * b.z)};
  }

  template <typename T>
  Element<T> square(const Element<T>& a) const { return mul(a, a); }

  template <typename T>
  T norm(const Element<T>& a) const {
    auto m = matrix(a);
    return T(m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]));
  }

  template <typename T>
  T trace(const Element<T>& a) const { return T(3 * a.x + 2 * p_ * a.z); }

  FieldElement inv(const FieldElement& a) const {
    if (a.is_zero()) throw InvalidInput("inversion of zero");
    auto m = matrix(a);
    mpq_class det = norm(a);
    // First column of the inverse: cofactors of the first row over det.
    mpq_class c0 = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    mpq_class c1 = -(m[1][0] * m[2][2] - m[1][2] * m[2][0]);
    mpq_class c2 = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    return {mpq_class(c0 / det), mpq_class(c1 / det), mpq_class(c2 / det)};
  }

  FieldElement div(const FieldElement& a, const FieldElement& b) const {
    return mul(a, inv(b));
  }

  // a^n by repeated squaring; negative n goes through the inverse.
  FieldElement pow(const FieldElement& a, const mpz_class& n) const {
    if (n < 0) return pow(inv(a), mpz_class(-n));
    FieldElement result = one(), base = a;
    std::size_t bits = bit_length(n);
    for (std::size_t i = 0; i < bits; ++i) {
      if (mpz_tstbit(n.get_mpz_t(), i)) result = mul(result, base);
      if (i + 1 < bits) base = square(base);
    }
    return result;
  }
  FieldElement pow(const FieldElement& a, long n) const { return pow(a, mpz_class(n)); }

  IntElement pow(const IntElement& a, unsigned long n) const {
    IntElement result{1, 0, 0}, base = a;
    while (n) {
      if (n & 1) result = mul(result, base);
      n >>= 1;
      if (n) base = square(base);
    }
    return result;
  }

  // x + y theta + z theta^2 for a certified theta.
  template <typename T>
  Ball eval(const Element<T>& a, const Ball& theta) const {
    mpfr_prec_t prec = theta.prec();
    Ball acc = to_ball(a.z, prec) * theta + to_ball(a.y, prec);
    return acc * theta + to_ball(a.x, prec);
  }

 private:
  static Ball to_ball(const mpz_class& v, mpfr_prec_t prec) { return Ball::from_mpz(v, prec); }
  static Ball to_ball(const mpq_class& v, mpfr_prec_t prec) { return Ball::from_mpq(v, prec); }

  mpz_class p_, q_;
};

namespace detail {

// Sign of g at the dyadic number x, computed exactly.
inline int depressed_sign_at(const mpz_class& p, const mpz_class& q, mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return -sgn(q);
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
  if (e >= 0) {
    mpz_class v = m;
    mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), e);
    return sgn(depressed_value(p, q, v));
  }
  // 2^(-3e) g(m 2^e) = m^3 - p m 2^(-2e) - q 2^(-3e)
  unsigned long s = static_cast<unsigned long>(-e);
  mpz_class t1 = m * m * m;
  mpz_class t2 = p * m;
  mpz_mul_2exp(t2.get_mpz_t(), t2.get_mpz_t(), 2 * s);
  mpz_class t3 = q;
  mpz_mul_2exp(t3.get_mpz_t(), t3.get_mpz_t(), 3 * s);
  return sgn(mpz_class(t1 - t2 - t3));
}

}  // namespace detail

// Certified enclosure of the real root of x^3 - p x - q: bisection down to
// 64 bits with exact sign tests, Newton with doubling precision, then an exact
// sign change at mid -/+ delta.
inline Ball real_root(const mpz_class& p, const mpz_class& q, mpfr_prec_t prec) {
  mpz_class fl = floor_real_root(p, q);
  mpfr_prec_t work = std::max<mpfr_prec_t>(prec + 32, 96);
  Float lo(work), hi(work), mid(work);
  mpfr_set_z(lo.get(), fl.get_mpz_t(), MPFR_RNDN);
  mpfr_add_ui(hi.get(), lo.get(), 1, MPFR_RNDN);
  for (int i = 0; i < 64; ++i) {
    mpfr_add(mid.get(), lo.get(), hi.get(), MPFR_RNDN);
    mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
    int s = detail::depressed_sign_at(p, q, mid.get());
    if (s == 0) {
      mpfr_set(lo.get(), mid.get(), MPFR_RNDN);
      mpfr_set(hi.get(), mid.get(), MPFR_RNDN);
      break;
    }
    if (s < 0) {
      mpfr_set(lo.get(), mid.get(), MPFR_RNDN);
    } else {
      mpfr_set(hi.get(), mid.get(), MPFR_RNDN);
    }
  }
  Float x(work);
  mpfr_set(x.get(), lo.get(), MPFR_RNDN);
  Float pf(work), qf(work), gx(work), dg(work), t(work);
  mpfr_set_z(pf.get(), p.get_mpz_t(), MPFR_RNDN);
  mpfr_set_z(qf.get(), q.get_mpz_t(), MPFR_RNDN);
  auto newton = [&](mpfr_prec_t bits) {
    mpfr_prec_round(x.get(), bits, MPFR_RNDN);
    for (Float* f : {&gx, &dg, &t, &pf, &qf}) mpfr_set_prec(f->get(), bits);
    mpfr_set_z(pf.get(), p.get_mpz_t(), MPFR_RNDN);
    mpfr_set_z(qf.get(), q.get_mpz_t(), MPFR_RNDN);
    // g = (x^2 - p) x - q, g' = 3x^2 - p
    mpfr_sqr(t.get(), x.get(), MPFR_RNDN);
    mpfr_mul_ui(dg.get(), t.get(), 3, MPFR_RNDN);
    mpfr_sub(dg.get(), dg.get(), pf.get(), MPFR_RNDN);
    mpfr_sub(t.get(), t.get(), pf.get(), MPFR_RNDN);
    mpfr_mul(gx.get(), t.get(), x.get(), MPFR_RNDN);
    mpfr_sub(gx.get(), gx.get(), qf.get(), MPFR_RNDN);
    mpfr_div(t.get(), gx.get(), dg.get(), MPFR_RNDN);
    mpfr_sub(x.get(), x.get(), t.get(), MPFR_RNDN);
  };
  mpfr_prec_t bits = 64;
  mpfr_prec_round(x.get(), work, MPFR_RNDN);
  while (bits < work) {
    bits = std::min(bits * 2, work);
    newton(bits);
  }
  newton(work);
  newton(work);

  Ball out(prec);
  for (int attempt = 0; attempt < 8; ++attempt) {
    // delta = 2^(exp(x) - prec + 4), relative to the size of x
    Float delta(kRadiusBits);
    mpfr_exp_t ex = mpfr_zero_p(x.get()) ? 0 : mpfr_get_exp(x.get());
    mpfr_set_ui_2exp(delta.get(), 1, ex - prec + 4 + attempt, MPFR_RNDU);
    Float a(work + 8), b(work + 8);
    mpfr_sub(a.get(), x.get(), delta.get(), MPFR_RNDD);
    mpfr_add(b.get(), x.get(), delta.get(), MPFR_RNDU);
    if (detail::depressed_sign_at(p, q, a.get()) < 0 &&
        detail::depressed_sign_at(p, q, b.get()) > 0) {
      out = Ball::from_interval(a.get(), b.get(), prec);
      return out;
    }
    newton(work);
  }
  throw PrecisionExhausted("real root certification failed");
}

inline Ball real_root(const CubicParams& cp, const RealCtx& ctx) {
  return real_root(cp.p, cp.q, ctx.precision_bits);
}

// theta_1 real; theta_2 = (-theta + i sqrt(3 theta^2 - 4p)) / 2, theta_3 its
// conjugate.
struct EmbeddingTriple {
  Ball theta1;
  Ball theta2_re;
  Ball theta2_im;
};

inline EmbeddingTriple embeddings(const CubicParams& cp, const RealCtx& ctx) {
  Ball th = real_root(cp, ctx);
  Ball disc = 3 * square(th) - Ball::from_mpz(4 * cp.p, th.prec());
  if (disc.certain_sign() <= 0) throw InvalidInput("3 theta^2 - 4p must be positive");
  return {th, -th / 2, sqrt(disc) / 2};
}

// Both norm identities as exact residuals in K:
//   (2(x+pz) - y t - z t^2)^2 + (3t^2 - 4p)(y - z t)^2 - 4N/e
//   (x+pz - y t)^2 + (x+pz - z t^2)^2 + (1 - 2p/t^2)(y t - z t^2)^2 - 2N/e
inline std::pair<FieldElement, FieldElement> identity_check(const Field& f,
                                                            const FieldElement& e) {
  if (e.is_zero()) throw InvalidInput("identity check needs a nonzero element");
  const mpq_class& x = e.x;
  const mpq_class& y = e.y;
  const mpq_class& z = e.z;
  mpq_class p(f.p());
  mpq_class u = x + p * z;
  FieldElement n_over_e = scale(f.inv(e), f.norm(e));

  FieldElement a1{mpq_class(2 * u), mpq_class(-y), mpq_class(-z)};
  FieldElement disc{mpq_class(-4 * p), 0, 3};
  FieldElement b1{y, mpq_class(-z), 0};
  FieldElement r1 = f.square(a1) + f.mul(disc, f.square(b1)) - scale(n_over_e, 4);

  FieldElement s1{u, mpq_class(-y), 0};
  FieldElement s2{u, 0, mpq_class(-z)};
  FieldElement t_sq_inv = f.square(f.inv(Field::theta()));
  FieldElement w = Field::one() - scale(t_sq_inv, mpq_class(2 * p));
  FieldElement s3{0, y, mpq_class(-z)};
  FieldElement r2 = f.square(s1) + f.square(s2) + f.mul(w, f.square(s3)) -
                    scale(n_over_e, 2);
  return {r1, r2};
}

inline std::string to_string(const FieldElement& a) {
  return "(" + a.x.get_str() + ", " + a.y.get_str() + ", " + a.z.get_str() + ")";
}

}  // namespace peckseq

#endif  // PECKSEQ_FIELD_HPP_
