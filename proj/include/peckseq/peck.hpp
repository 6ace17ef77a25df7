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

// Peck sequences for a pair (alpha, beta) in a complex cubic field.
//
// lambda^n = a_n + b_n theta + c_n theta^2 for a unit lambda > 1, k_n = d c_n
// and m_n = (9 A^2 s d) c_n (A^2 s d c_n when B = 0).  The subsequence
// psi_n = m_{Q_n}, Q_n the non-integer convergent denominators of phi/pi,
// satisfies psi ||psi alpha|| ||psi beta|| <= C0 / Q_{n+1} once Q_n > n0.

#ifndef PECKSEQ_PECK_HPP_
#define PECKSEQ_PECK_HPP_

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "peckseq/contfrac.hpp"
#include "peckseq/errors.hpp"
#include "peckseq/field.hpp"
#include "peckseq/real.hpp"
#include "peckseq/unit_search.hpp"

namespace peckseq {

// beta = r0/s + (r1/s) alpha + (r2/s) alpha^2, alpha the real root of the
// source cubic.
struct TargetPair {
  CubicParams cubic;
  mpz_class r0{0}, r1{0}, r2{1}, s{1};

  // alpha = (theta - shift) / scale in the theta basis.
  FieldElement alpha() const {
    mpq_class inv(1, 1);
    inv /= cubic.map.scale;
    return {mpq_class(-cubic.map.shift * inv), inv, 0};
  }
  FieldElement beta() const {
    Field f(cubic);
    FieldElement a = alpha();
    FieldElement a2 = f.square(a);
    mpq_class inv_s(1, 1);
    inv_s /= s;
    FieldElement num = FieldElement{mpq_class(r0), 0, 0} + scale(a, mpq_class(r1)) +
                       scale(a2, mpq_class(r2));
    return scale(num, inv_s);
  }
  // 1, alpha, beta are linearly independent over Q exactly when r2 != 0.
  bool independent() const { return r2 != 0; }
};

// Reduces (r0, r1, r2, s) by their gcd and checks s > 0.
inline TargetPair make_target(CubicParams cubic, mpz_class r0, mpz_class r1,
                              mpz_class r2, mpz_class s) {
  if (s <= 0) throw InvalidInput("s must be positive");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r2.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_mpz_t());
  TargetPair t;
  t.cubic = std::move(cubic);
  t.r0 = r0 / g;
  t.r1 = r1 / g;
  t.r2 = r2 / g;
  t.s = s / g;
  return t;
}

class PeckRun {
 public:
  PeckRun(TargetPair pair, const UnitCandidate& lambda)
      : pair_(std::move(pair)), field_(pair_.cubic), lambda_(lambda.element) {
    const CubicParams& cp = pair_.cubic;
    if (!denominators_divide(lambda_, cp.d)) {
      throw InvalidInput("lambda denominators do not divide d = " + cp.d.get_str());
    }
    scaled_lambda_ = {mpz_class(lambda_.x * cp.d), mpz_class(lambda_.y * cp.d),
                      mpz_class(lambda_.z * cp.d)};
    mpz_class a2 = cp.A * cp.A;
    multiplier_ = cp.reduced_branch() ? mpz_class(a2 * pair_.s) : mpz_class(9 * a2 * pair_.s);
  }

  const TargetPair& pair() const { return pair_; }
  const CubicParams& cubic() const { return pair_.cubic; }
  const Field& field() const { return field_; }
  const FieldElement& lambda() const { return lambda_; }
  // d * lambda, an integer triple.
  const IntElement& scaled_lambda() const { return scaled_lambda_; }
  // m_n / k_n: 9 A^2 s, or A^2 s in the B = 0 branch.
  const mpz_class& multiplier() const { return multiplier_; }
  const mpz_class& d() const { return pair_.cubic.d; }

  // (d u)(d v) / d = d (u v); the division must be exact or d is wrong.
  IntElement scaled_mul(const IntElement& u, const IntElement& v) const {
    IntElement w = field_.mul(u, v);
    for (mpz_class* c : {&w.x, &w.y, &w.z}) {
      if (!mpz_divisible_p(c->get_mpz_t(), d().get_mpz_t())) {
        throw InvalidInput("lambda^n leaves (1/d)Z[theta]; d = " + d().get_str() +
                           " is not a valid denominator bound");
      }
      mpz_divexact(c->get_mpz_t(), c->get_mpz_t(), d().get_mpz_t());
    }
    return w;
  }

  // d lambda^n by repeated squaring.
  IntElement scaled_power(unsigned long n) const {
    if (n == 0) return {d(), 0, 0};
    IntElement result = scaled_lambda_, base = scaled_lambda_;
    int top = 63;
    while (top >= 0 && !((n >> top) & 1)) --top;
    for (int i = top - 1; i >= 0; --i) {
      result = scaled_mul(result, result);
      if ((n >> i) & 1) result = scaled_mul(result, base);
    }
    return result;
  }

  mpz_class k(unsigned long n) const { return scaled_power(n).z; }
  mpz_class m(unsigned long n) const { return multiplier_ * k(n); }

  // m_n modulo 10^digits without forming m_n.  Each scaled product divides
  // by d once, so the working modulus starts with enough spare factors of d.
  mpz_class m_mod_pow10(unsigned long n, unsigned digits) const {
    mpz_class ten;
    mpz_ui_pow_ui(ten.get_mpz_t(), 10, digits);
    unsigned spare = 2 * static_cast<unsigned>(bit_length(mpz_class(n))) + 2;
    mpz_class dpow;
    mpz_pow_ui(dpow.get_mpz_t(), d().get_mpz_t(), spare);
    mpz_class mod = ten * dpow;
    auto reduce = [](IntElement& e, const mpz_class& md) {
      for (mpz_class* c : {&e.x, &e.y, &e.z}) mpz_fdiv_r(c->get_mpz_t(), c->get_mpz_t(), md.get_mpz_t());
    };
    auto mulmod = [&](const IntElement& u, const IntElement& v) {
      IntElement w = field_.mul(u, v);
      reduce(w, mod);
      for (mpz_class* c : {&w.x, &w.y, &w.z}) mpz_divexact(c->get_mpz_t(), c->get_mpz_t(), d().get_mpz_t());
      mod /= d();
      reduce(w, mod);
      return w;
    };
    IntElement result = scaled_lambda_;
    reduce(result, mod);
    IntElement base = result;
    int top = 63;
    while (top >= 0 && !((n >> top) & 1)) --top;
    for (int i = top - 1; i >= 0; --i) {
      result = mulmod(result, result);
      if ((n >> i) & 1) result = mulmod(result, base);
    }
    mpz_class out = multiplier_ * result.z;
    mpz_fdiv_r(out.get_mpz_t(), out.get_mpz_t(), ten.get_mpz_t());
    return out;
  }

 private:
  TargetPair pair_;
  Field field_;
  FieldElement lambda_;
  IntElement scaled_lambda_;
  mpz_class multiplier_;
};

struct PowerRecord {
  unsigned long n = 0;
  FieldElement coords;  // (a_n, b_n, c_n)
  mpz_class k, m;
  Ball X, Y, Z;
};

// Records for n_lo..n_hi: one scaled multiply per step.
inline std::vector<PowerRecord> generate(const PeckRun& run, unsigned long n_lo,
                                         unsigned long n_hi, const RealCtx& ctx) {
  if (n_lo < 1 || n_hi < n_lo) throw InvalidInput("need 1 <= n_lo <= n_hi");
  std::vector<IntElement> scaled;
  scaled.reserve(n_hi - n_lo + 1);
  IntElement cur = run.scaled_power(n_lo);
  std::size_t bits = 0;
  for (unsigned long n = n_lo;; ++n) {
    scaled.push_back(cur);
    for (const mpz_class* c : {&cur.x, &cur.y, &cur.z}) bits = std::max(bits, bit_length(*c));
    if (n == n_hi) break;
    cur = run.scaled_mul(cur, run.scaled_lambda());
  }
  // X, Y, Z are near lambda^(-n/2) while the coordinates are near lambda^n,
  // and the ellipse residual is near lambda^(-3n/2): cancellation eats up to
  // twice the coordinate size.
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(2 * bits) + ctx.precision_bits + 32;
  if (prec > ctx.max_precision_bits) throw PrecisionExhausted("sequence needs " + std::to_string(prec) + " bits");
  const CubicParams& cp = run.cubic();
  Ball th = real_root(cp.p, cp.q, prec);
  Ball th2 = square(th);
  Ball dball = Ball::from_mpz(cp.d, prec);
  std::vector<PowerRecord> out;
  out.reserve(scaled.size());
  mpq_class inv_d(1, 1);
  inv_d /= cp.d;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    const IntElement& s = scaled[i];
    PowerRecord r;
    r.n = n_lo + i;
    r.coords = scale(to_rational(s), inv_d);
    r.k = s.z;
    r.m = run.multiplier() * s.z;
    Ball a = Ball::from_mpz(s.x, prec), b = Ball::from_mpz(s.y, prec), c = Ball::from_mpz(s.z, prec);
    Ball apc = a + c * cp.p;
    r.X = (apc - b * th) / dball;
    r.Y = (apc - c * th2) / dball;
    r.Z = (b * th - c * th2) / dball;
    out.push_back(std::move(r));
  }
  return out;
}

struct ConstantsBundle {
  Ball theta, lambda;
  Ball C1, C2, C3;
  Ball Mtheta, Malpha, Mbeta1, Mbeta2;
  std::vector<Ball> N_terms;
  Ball N, n0, C0, phi;
};

inline Ball phi_at(const PeckRun& run, mpfr_prec_t prec) {
  const CubicParams& cp = run.cubic();
  const FieldElement& l = run.lambda();
  Ball th = real_root(cp.p, cp.q, prec);
  Ball th2 = square(th);
  Ball D1 = 3 * th2 - Ball::from_mpz(4 * cp.p, prec);
  Ball a1 = Ball::from_mpq(l.x, prec), b1 = Ball::from_mpq(l.y, prec), c1 = Ball::from_mpq(l.z, prec);
  Ball num = sqrt(D1) * (b1 - c1 * th);
  // The denominator is a nonzero element of K (its theta^2 coordinate is
  // -c1 and its theta coordinate -b1), so it never vanishes; a ball around 0
  // only means too little precision.
  Ball den = 2 * (a1 + c1 * cp.p) - b1 * th - c1 * th2;
  den.certain_sign();
  return atan(num / den);
}

inline ConstantsBundle constants_at(const PeckRun& run, mpfr_prec_t prec) {
  const CubicParams& cp = run.cubic();
  const TargetPair& t = run.pair();
  ConstantsBundle k;
  Ball one = Ball::from_int(1, prec);
  Ball th = real_root(cp.p, cp.q, prec);
  Ball th2 = square(th);
  Ball p = Ball::from_mpz(cp.p, prec);
  Ball D1 = 3 * th2 - 4 * p;
  Ball D2 = 3 * th2 - p;
  Ball sq2 = sqrt(Ball::from_int(2, prec));
  Ball ath = abs(th);
  Ball d = Ball::from_mpz(cp.d, prec);
  Ball A = Ball::from_mpz(cp.A, prec);
  Ball absB = Ball::from_mpz(abs(cp.B), prec);
  Ball s = Ball::from_mpz(t.s, prec);
  Ball ar1 = Ball::from_mpz(abs(t.r1), prec);
  Ball ar2 = Ball::from_mpz(abs(t.r2), prec);
  Ball pi = Ball::pi(prec);
  Ball s32 = s * sqrt(s);
  Ball A2 = A * A;
  Ball sqD1 = sqrt(D1);

  k.theta = th;
  k.lambda = run.field().eval(run.lambda(), th);
  k.C1 = max(sq2, sq2 * ath / sqD1);
  k.C2 = sqrt(d) / sqrt(D2);
  k.C3 = max(one, 3 * k.C2 / 2);
  k.Mtheta = max(3 * d * sq2 * k.C1 * k.C2 / (2 * ath), 3 * d * k.C1 * k.C2 / 2);
  Ball beta2_core = 3 * d * k.C2 * pi / (2 * sqD1);
  if (cp.reduced_branch()) {
    k.Malpha = A2 * k.Mtheta;
    k.Mbeta2 = A2 * s32 * beta2_core;
  } else {
    k.Malpha = max(9 * A2 * k.Mtheta, 3 * A * k.Mtheta * (1 + 2 * absB));
    k.Mbeta2 = 9 * A2 * s32 * beta2_core;
  }
  k.Mbeta1 = s32 * (ar1 + ar2) * k.Malpha;

  Ball cube = cbrt(2 * (1 + sq2) * k.C2);
  k.N_terms = {sqrt(k.lambda), 2 * sq2 * d * k.C1 / ath, 2 * d * k.C1, cube};
  if (cp.reduced_branch()) {
    k.N_terms.push_back(4 * A * k.Mtheta);
    k.N_terms.push_back(8 * k.Malpha * ar1 / A);
    k.N_terms.push_back(8 * k.Malpha * ar2 / A);
    k.N_terms.push_back(4 * s * k.Malpha / A);
  } else {
    Ball A3 = 3 * A;
    k.N_terms.push_back(12 * A * k.Mtheta);
    k.N_terms.push_back(16 * absB * k.Mtheta);
    k.N_terms.push_back(8 * k.Malpha * ar1 / A3);
    k.N_terms.push_back(8 * k.Malpha * ar2 / A3);
    k.N_terms.push_back(4 * s * k.Malpha / A3);
  }
  k.N = k.N_terms.front();
  for (const Ball& b : k.N_terms) k.N = max(k.N, b);
  k.n0 = 2 * log(k.N) / log(k.lambda);
  k.C0 = k.Mbeta1 * k.Mbeta2;
  k.phi = phi_at(run, prec);
  return k;
}

inline ConstantsBundle constants(const PeckRun& run, const RealCtx& ctx) {
  return escalate(ctx, ctx.precision_bits, [&](mpfr_prec_t prec) { return constants_at(run, prec); });
}

inline Ball phi(const PeckRun& run, const RealCtx& ctx) {
  return escalate(ctx, ctx.precision_bits, [&](mpfr_prec_t prec) { return phi_at(run, prec); });
}

inline RealSource phi_over_pi_source(const PeckRun& run) {
  return [&run](mpfr_prec_t prec) {
    Ball ph = phi_at(run, prec + 16);
    return ph / Ball::pi(prec + 16);
  };
}

struct LittlewoodRow {
  Ball frac_alpha;    // <m alpha>
  Ball frac_beta;     // <m beta>
  Ball product;       // m ||m alpha|| ||m beta||
  Ball scaled_alpha;  // m^(1/2) <m alpha>
  Ball scaled_beta;   // m^(1/2) <m beta>
};

namespace detail {

// <m e> at the given precision.  The rational part of m e is reduced
// exactly first.
inline Ball frac_multiple(const Field& f, const mpz_class& m, const FieldElement& e,
                          const Ball& theta) {
  FieldElement me = scale(e, mpq_class(m));
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), me.x.get_num_mpz_t(), me.x.get_den_mpz_t());
  me.x -= fl;
  if (me.y == 0 && me.z == 0) {
    // Rational: exact apart from one rounding.
    mpq_class r = me.x;
    if (r >= mpq_class(1, 2)) r -= 1;
    return Ball::from_mpq(r, theta.prec());
  }
  return mod1(f.eval(me, theta));
}

inline std::size_t coord_bits(const FieldElement& e) {
  std::size_t b = 0;
  for (const mpq_class* c : {&e.x, &e.y, &e.z}) {
    b = std::max({b, bit_length(c->get_num()), bit_length(c->get_den())});
  }
  return b;
}

}  // namespace detail

// All five quantities certified to target_bits relative bits of the product
// (or exactly zero).  Working precision starts at about 1.5 bit_length(m),
// since ||m alpha|| is near m^(-1/2) along a Peck sequence, and doubles on
// demand.
inline LittlewoodRow littlewood_row(const Field& f, const mpz_class& m,
                                    const FieldElement& alpha, const FieldElement& beta,
                                    const RealCtx& ctx, unsigned target_bits = 64) {
  if (m < 1) throw InvalidInput("m must be >= 1");
  std::size_t mb = bit_length(m);
  mpfr_prec_t start = static_cast<mpfr_prec_t>(mb + mb / 2 + target_bits + 64 +
                                               2 * std::max(detail::coord_bits(alpha),
                                                            detail::coord_bits(beta)));
  return escalate(ctx, start, [&](mpfr_prec_t prec) {
    Ball th = real_root(f.p(), f.q(), prec);
    LittlewoodRow row;
    row.frac_alpha = detail::frac_multiple(f, m, alpha, th);
    row.frac_beta = detail::frac_multiple(f, m, beta, th);
    Ball mb_ball = Ball::from_mpz(m, prec);
    row.product = mb_ball * abs(row.frac_alpha) * abs(row.frac_beta);
    if (row.product.relative_radius() > std::ldexp(1.0, -static_cast<int>(target_bits))) {
      throw AmbiguousRounding("Littlewood product not yet certified");
    }
    Ball rt = sqrt(mb_ball);
    row.scaled_alpha = rt * row.frac_alpha;
    row.scaled_beta = rt * row.frac_beta;
    return row;
  });
}

inline LittlewoodRow littlewood_row(const PeckRun& run, const mpz_class& m, const RealCtx& ctx,
                                    unsigned target_bits = 64) {
  return littlewood_row(run.field(), m, run.pair().alpha(), run.pair().beta(), ctx, target_bits);
}

struct PsiRow {
  mpz_class Q;
  mpz_class Q_next;
  std::size_t digits = 0;
  std::optional<mpz_class> psi;  // empty above the digit budget
  std::string first3, last3;
  std::optional<Ball> product;   // empty above the digit budget
  Ball bound;                    // C0 / Q_{n+1}
  bool bound_checked = false;    // Q_n > n0
};

struct PeckCertificate {
  Ball C0;
  Ball n0;
  std::vector<PsiRow> rows;
};

namespace detail {

// Certified log10 of m_n for n large enough that lambda^n / (3 theta^2 - p)
// pins c_n down: |lambda^n - (3 theta^2 - p) c_n| < (1 + sqrt 2) C1
// lambda^(-n/2).  Returns nullopt when n is too small for that.
inline std::optional<Ball> log10_m(const PeckRun& run, const ConstantsBundle& k,
                                   const mpz_class& n, mpfr_prec_t prec) {
  Ball lam = k.lambda;
  Ball nb = Ball::from_mpz(n, prec);
  Ball loglam = log(lam);
  // relative error |delta| < (1 + sqrt 2) C1 lambda^(-3n/2)
  Ball sq2 = sqrt(Ball::from_int(2, prec));
  Ball logdelta = log((1 + sq2) * k.C1) - 3 * nb * loglam / 2;
  if (!logdelta.definitely_less(Ball::from_int(-4, prec))) return std::nullopt;
  Ball th2 = square(k.theta);
  Ball D2 = 3 * th2 - Ball::from_mpz(run.cubic().p, prec);
  Ball ln = log(Ball::from_mpz(run.multiplier() * run.d(), prec)) + nb * loglam - log(D2);
  // |log(1 + delta)| <= 2 |delta| for |delta| < 1/2
  Ball err = 2 * exp(logdelta);
  Float e = err.upper();
  ln.widen(e);
  return ln / log(Ball::from_int(10, prec));
}

}  // namespace detail

struct PsiDigits {
  std::size_t digits;
  std::string first3, last3;
};

// Digit count and leading/trailing digits of m_n without forming it.
inline PsiDigits psi_digits(const PeckRun& run, unsigned long n, const RealCtx& ctx) {
  PsiDigits out;
  mpz_class last = run.m_mod_pow10(n, 3);
  out.last3 = last.get_str();
  while (out.last3.size() < 3) out.last3 = "0" + out.last3;
  std::size_t nbits = bit_length(mpz_class(static_cast<unsigned long>(n)));
  mpfr_prec_t start = static_cast<mpfr_prec_t>(2 * nbits + 96);
  escalate(ctx, std::min(start, ctx.max_precision_bits), [&](mpfr_prec_t prec) {
    ConstantsBundle k = constants_at(run, prec);
    std::optional<Ball> lg = detail::log10_m(run, k, mpz_class(n), prec);
    if (!lg) throw InvalidInput("index too small for the digit estimate");
    mpz_class e = lg->certain_floor();
    Ball frac = *lg - e;
    Ball lead = exp((frac + 2) * log(Ball::from_int(10, prec)));
    mpz_class f3 = lead.certain_floor();
    out.digits = static_cast<std::size_t>(e.get_ui()) + 1;
    out.first3 = f3.get_str();
    return 0;
  });
  return out;
}

// <first3>...<last3> (<N> digits)
inline std::string abbreviate_psi(const std::string& first3, const std::string& last3,
                                  std::size_t digits) {
  return first3 + "…" + last3 + " (" + std::to_string(digits) + " digits)";
}

inline std::string abbreviate_psi(const mpz_class& psi) {
  std::string s = psi.get_str();
  if (s.size() <= 6) return s;
  return abbreviate_psi(s.substr(0, 3), s.substr(s.size() - 3), s.size());
}

struct PsiTableOptions {
  std::size_t rows = 12;
  std::size_t digit_budget = 50000;
  unsigned target_bits = 64;
};

// Rows for the first non-integer convergents that have a successor.  A row
// with Q_n > n0 whose certified product exceeds its certified bound throws
// BoundViolated.
inline PeckCertificate psi_table(const PeckRun& run, const ConstantsBundle& k,
                                 const std::vector<Convergent>& conv,
                                 const PsiTableOptions& opt, const RealCtx& ctx) {
  PeckCertificate cert;
  cert.C0 = k.C0;
  cert.n0 = k.n0;
  mpfr_prec_t prec = k.C0.prec();
  double log10_lambda = std::log10(k.lambda.to_double());
  double log10_scale = std::log10(mpz_class(run.multiplier() * run.d()).get_d());
  for (std::size_t i = 0; i + 1 < conv.size() && cert.rows.size() < opt.rows; ++i) {
    PsiRow row;
    row.Q = conv[i].Q;
    row.Q_next = conv[i + 1].Q;
    if (!row.Q.fits_ulong_p()) throw InvalidInput("Q_n out of range");
    unsigned long Q = row.Q.get_ui();
    row.bound = k.C0 / Ball::from_mpz(row.Q_next, prec);
    row.bound_checked = Ball::from_mpz(row.Q, prec).definitely_greater(k.n0);
    double est_digits = static_cast<double>(Q) * log10_lambda + log10_scale;
    if (est_digits <= static_cast<double>(opt.digit_budget) + 8) {
      mpz_class psi = run.m(Q);
      std::string s = psi.get_str();
      if (s.size() <= opt.digit_budget) {
        row.digits = s.size();
        row.first3 = s.substr(0, std::min<std::size_t>(3, s.size()));
        row.last3 = s.substr(s.size() - std::min<std::size_t>(3, s.size()));
        row.product = littlewood_row(run, psi, ctx, opt.target_bits).product;
        row.psi = std::move(psi);
      }
    }
    if (!row.psi) {
      PsiDigits pd = psi_digits(run, Q, ctx);
      row.digits = pd.digits;
      row.first3 = pd.first3;
      row.last3 = pd.last3;
    }
    if (row.bound_checked && row.product) {
      if (row.product->definitely_greater(row.bound)) {
        throw BoundViolated("psi row Q = " + row.Q.get_str() +
                            " exceeds C0/Q_{n+1}");
      }
      if (!row.product->definitely_less(row.bound)) {
        throw PrecisionExhausted("bound comparison undecided at Q = " + row.Q.get_str());
      }
    }
    cert.rows.push_back(std::move(row));
  }
  return cert;
}

// psi_n itself; refuses values above the digit budget.
inline mpz_class psi_value(const PeckRun& run, unsigned long Q, const ConstantsBundle& k,
                           std::size_t digit_budget) {
  double est = static_cast<double>(Q) * std::log10(k.lambda.to_double());
  if (est > static_cast<double>(digit_budget) + 8) {
    throw DigitBudgetExceeded("psi for Q = " + std::to_string(Q) + " has about " +
                              std::to_string(static_cast<long long>(est)) + " digits");
  }
  mpz_class psi = run.m(Q);
  if (mpz_sizeinbase(psi.get_mpz_t(), 10) > digit_budget + 1 ||
      psi.get_str().size() > digit_budget) {
    throw DigitBudgetExceeded("psi for Q = " + std::to_string(Q) + " exceeds the digit budget");
  }
  return psi;
}

struct EllipsePoint {
  unsigned long n = 0;
  mpz_class k;
  Ball u, v;          // k^(1/2) <k theta>, k^(1/2) <k theta^2>
  Ball residual;      // (theta u - 2 v)^2 + (3 theta^2 - 4p) u^2 - 4 d^3 / (3 theta^2 - p)
  Ball residual_bound;  // 4 d^2 C' / lambda^(3n/2), C' = (1 + sqrt 2) C1 d / (3 theta^2 - p)
  bool bound_applies = false;  // both signed-distance thresholds hold
};

// Indices with k_n <= 0 are skipped.
inline std::vector<EllipsePoint> ellipse_points(const PeckRun& run, unsigned long n_lo,
                                                unsigned long n_hi, const RealCtx& ctx) {
  std::vector<PowerRecord> recs = generate(run, n_lo, n_hi, ctx);
  const CubicParams& cp = run.cubic();
  // u and v come from k theta directly; the residual is near lambda^(-3n/2).
  std::size_t kbits = bit_length(recs.back().k) + bit_length(cp.d);
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(3 * kbits) + ctx.precision_bits + 32;
  if (prec > ctx.max_precision_bits) throw PrecisionExhausted("ellipse needs " + std::to_string(prec) + " bits");
  ConstantsBundle k = constants_at(run, prec);
  Ball th = k.theta, th2 = square(k.theta);
  Ball p = Ball::from_mpz(cp.p, prec);
  Ball D1 = 3 * th2 - 4 * p, D2 = 3 * th2 - p;
  Ball d = Ball::from_mpz(cp.d, prec);
  Ball sq2 = sqrt(Ball::from_int(2, prec));
  Ball rhs = 4 * d * d * d / D2;
  Ball Cp = (1 + sq2) * k.C1 * d / D2;
  Ball t1 = 2 * sq2 * d * k.C1 / abs(th);
  Ball t2 = 2 * d * k.C1;
  Ball loglam = log(k.lambda);
  std::vector<EllipsePoint> out;
  for (const PowerRecord& r : recs) {
    if (r.k <= 0) continue;  // small n before c_n turns positive
    EllipsePoint e;
    e.n = r.n;
    e.k = r.k;
    Ball kb = Ball::from_mpz(r.k, prec);
    Ball rt = sqrt(kb);
    e.u = rt * mod1(kb * th);
    e.v = rt * mod1(kb * th2);
    e.residual = square(th * e.u - 2 * e.v) + D1 * square(e.u) - rhs;
    Ball nb = Ball::from_int(static_cast<long>(r.n), prec);
    e.residual_bound = 4 * d * d * Cp / exp(3 * nb * loglam / 2);
    Ball half_pow = exp(nb * loglam / 2);
    e.bound_applies = half_pow.definitely_greater(t1) && half_pow.definitely_greater(t2);
    out.push_back(std::move(e));
  }
  return out;
}

struct AuditReport {
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::size_t undecided = 0;
  std::vector<std::string> messages;

  void record(bool ok, bool decided, const std::string& what) {
    ++checks;
    if (!decided) {
      ++undecided;
      messages.push_back("undecided: " + what);
    } else if (!ok) {
      ++violations;
      messages.push_back("violated: " + what);
    }
  }
  // lhs < rhs
  void less(const Ball& lhs, const Ball& rhs, const std::string& what) {
    bool yes = lhs.definitely_less(rhs);
    bool no = mpfr_cmp(lhs.lower().get(), rhs.upper().get()) >= 0;
    record(yes, yes || no, what);
  }
  void merge(const AuditReport& o) {
    checks += o.checks;
    violations += o.violations;
    undecided += o.undecided;
    messages.insert(messages.end(), o.messages.begin(), o.messages.end());
  }
};

// Sequence inequalities for every n in n_lo..n_hi: the X/Y/Z bounds,
// positivity and growth of c_n, the size of k_n, the signed distances of
// k_n theta and k_n theta^2, the ellipse residual, and agreement of the
// streamed powers with repeated squaring.
inline AuditReport audit_sequence(const PeckRun& run, unsigned long n_lo, unsigned long n_hi,
                                 const RealCtx& ctx) {
  AuditReport audit;
  std::vector<PowerRecord> recs = generate(run, n_lo, n_hi + 1, ctx);
  std::vector<EllipsePoint> pts = ellipse_points(run, n_lo, n_hi, ctx);
  const CubicParams& cp = run.cubic();
  mpfr_prec_t prec = recs.back().X.prec();
  ConstantsBundle k = constants_at(run, prec);
  Ball th = k.theta, th2 = square(th);
  Ball p = Ball::from_mpz(cp.p, prec);
  Ball D2 = 3 * th2 - p;
  Ball d = Ball::from_mpz(cp.d, prec);
  Ball sq2 = sqrt(Ball::from_int(2, prec));
  Ball c1 = k.C1;
  Ball one_sq2 = 1 + sq2;
  Ball lam = k.lambda;
  Ball loglam = log(lam);
  Ball sqlam = sqrt(lam);
  Ball grow = one_sq2 * c1 / (sqlam * (sqlam - 1));
  Ball t1 = 2 * sq2 * d * c1 / abs(th);
  Ball t2 = 2 * d * c1;
  for (std::size_t i = 0; i + 1 < recs.size(); ++i) {
    const PowerRecord& r = recs[i];
    const std::string tag = " at n=" + std::to_string(r.n);
    Ball nb = Ball::from_int(static_cast<long>(r.n), prec);
    Ball half_pow = exp(nb * loglam / 2);   // lambda^(n/2)
    Ball three_half = exp(3 * nb * loglam / 2);
    Ball lim = c1 / half_pow;
    audit.less(abs(r.X), lim, "|X_n| < C1/lambda^(n/2)" + tag);
    audit.less(abs(r.Y), lim, "|Y_n| < C1/lambda^(n/2)" + tag);
    audit.less(abs(r.Z), sq2 * lim, "|Z_n| < sqrt2 C1/lambda^(n/2)" + tag);
    Ball cn = Ball::from_mpq(r.coords.z, prec);
    Ball lam_n = exp(nb * loglam);
    audit.less(abs(lam_n - D2 * cn), one_sq2 * lim, "|lambda^n - (3theta^2-p)c_n|" + tag);

    if (three_half.definitely_greater(one_sq2 * c1)) {
      audit.record(r.coords.z > 0, true, "c_n > 0" + tag);
    }
    if (three_half.definitely_greater(grow)) {
      audit.record(recs[i + 1].coords.z > r.coords.z, true, "c_{n+1} > c_n" + tag);
    }
    if (three_half.definitely_greater(2 * one_sq2 * c1)) {
      Ball rk = sqrt(Ball::from_mpz(r.k, prec));
      audit.less(k.C2 * half_pow / 2, rk, "(C2/2)lambda^(n/2) < sqrt(k_n)" + tag);
      audit.less(rk, 3 * k.C2 * half_pow / 2, "sqrt(k_n) < (3C2/2)lambda^(n/2)" + tag);
    }
    Ball kb = Ball::from_mpz(r.k, prec);
    if (half_pow.definitely_greater(t1)) {
      Ball direct = mod1(kb * th);
      Ball via_z = -(d * r.Z) / th;
      audit.record(direct.overlaps(via_z), true, "<k_n theta> = -d Z_n/theta" + tag);
    }
    if (half_pow.definitely_greater(t2)) {
      Ball direct = mod1(kb * th2);
      Ball via_y = -(d * r.Y);
      audit.record(direct.overlaps(via_y), true, "<k_n theta^2> = -d Y_n" + tag);
    }
    if ((r.n - n_lo) % 5 == 0 || r.n == n_hi) {
      audit.record(run.scaled_power(r.n).z == r.k, true, "repeated squaring agrees" + tag);
    }
  }
  for (const EllipsePoint& e : pts) {
    if (!e.bound_applies) continue;
    audit.less(abs(e.residual), e.residual_bound,
               "ellipse residual bound at n=" + std::to_string(e.n));
  }
  return audit;
}

// |sqrt(lambda) lambda_2| = 1 and |Im (sqrt(lambda) lambda_2)^{Q_n}| <
// pi / Q_{n+1} for consecutive convergents.  lambda_2 comes from X_1, Y_1,
// Z_1: lambda_2 = (X + Y)/2 + i sqrt(3 theta^2 - 4p) Z / (2 theta).
inline AuditReport audit_rotation(const PeckRun& run, const std::vector<Convergent>& conv,
                                 const RealCtx& ctx) {
  AuditReport audit;
  mpfr_prec_t prec = std::max<mpfr_prec_t>(ctx.precision_bits, 256);
  PowerRecord r = generate(run, 1, 1, RealCtx{prec, ctx.policy, ctx.max_precision_bits}).front();
  prec = r.X.prec();
  const CubicParams& cp = run.cubic();
  Ball th = real_root(cp.p, cp.q, prec);
  Ball D1 = 3 * square(th) - Ball::from_mpz(4 * cp.p, prec);
  Ball lam = run.field().eval(run.lambda(), th);
  Ball rt = sqrt(lam);
  Ball re = rt * (r.X + r.Y) / 2;
  Ball im = rt * sqrt(D1) * r.Z / (2 * th);
  Ball modulus = square(re) + square(im);
  audit.record(modulus.overlaps(Ball::from_int(1, prec)), true, "|sqrt(lambda) lambda_2| = 1");
  Ball pi = Ball::pi(prec);
  for (std::size_t i = 0; i + 1 < conv.size(); ++i) {
    const mpz_class& Q = conv[i].Q;
    Ball pr = Ball::from_int(1, prec), pim = Ball::from_int(0, prec);
    Ball br = re, bi = im;
    std::size_t bits = bit_length(Q);
    for (std::size_t b = 0; b < bits; ++b) {
      if (mpz_tstbit(Q.get_mpz_t(), b)) {
        Ball nr = pr * br - pim * bi;
        pim = pr * bi + pim * br;
        pr = nr;
      }
      if (b + 1 < bits) {
        Ball nr = br * br - bi * bi;
        bi = 2 * br * bi;
        br = nr;
      }
    }
    audit.less(abs(pim), pi / Ball::from_mpz(conv[i + 1].Q, prec),
               "|Im w^Q| < pi/Q_{n+1} at Q=" + Q.get_str());
  }
  return audit;
}

enum class DependenceKind { kIndependent, kBetaRational, kDependent };

// Multipliers when 1, alpha, beta are Q-linearly dependent.  m_n =
// multiplier * q_n, q_n the convergent denominators of alpha.
struct RationalCase {
  DependenceKind kind = DependenceKind::kIndependent;
  mpz_class multiplier{1};
  mpz_class bound_alpha{0};  // eventually m ||m alpha|| < bound_alpha
  mpz_class bound_beta{0};   // eventually m ||m beta|| < bound_beta
};

inline RationalCase rational_case(const TargetPair& t) {
  RationalCase rc;
  if (t.independent()) return rc;
  if (t.r1 == 0) {
    // beta = r0 / s = u / v
    mpq_class b(t.r0, t.s);
    b.canonicalize();
    mpz_class v = b.get_den();
    rc.kind = DependenceKind::kBetaRational;
    rc.multiplier = v;
    rc.bound_alpha = v * v;
    rc.bound_beta = 0;
    return rc;
  }
  // beta = (r1 alpha + r0) / s
  rc.kind = DependenceKind::kDependent;
  rc.multiplier = t.s;
  rc.bound_alpha = t.s * t.s;
  rc.bound_beta = t.s * abs(t.r1);
  return rc;
}

// Both numbers rational: every multiple of n s v zeroes the product.
inline mpz_class rational_pair_multiplier(const mpq_class& alpha, const mpq_class& beta) {
  return mpz_class(alpha.get_den() * beta.get_den());
}

// m_n = n s v for alpha = r/s, beta = u/v.
inline std::vector<mpz_class> rational_pair_sequence(const mpq_class& alpha, const mpq_class& beta,
                                                     std::size_t count) {
  mpz_class step = rational_pair_multiplier(alpha, beta);
  std::vector<mpz_class> out;
  for (std::size_t n = 1; n <= count; ++n) out.push_back(step * static_cast<unsigned long>(n));
  return out;
}

// m_n = multiplier * q_n for the first count convergents of alpha.
inline std::vector<mpz_class> rational_case_sequence(const TargetPair& t, std::size_t count,
                                                     const RealCtx& ctx) {
  RationalCase rc = rational_case(t);
  if (rc.kind == DependenceKind::kIndependent) {
    throw InvalidInput("1, alpha, beta are independent; use the unit construction");
  }
  Field f(t.cubic);
  FieldElement a = t.alpha();
  RealSource src = [&](mpfr_prec_t prec) { return f.eval(a, real_root(t.cubic.p, t.cubic.q, prec)); };
  ContinuedFraction cf = expand(src, count + 1, ctx);
  std::vector<mpz_class> out;
  for (const Convergent& c : cf.convergents) {
    if (out.size() == count) break;
    out.push_back(rc.multiplier * c.Q);
  }
  return out;
}

}  // namespace peckseq

#endif  // PECKSEQ_PECK_HPP_
