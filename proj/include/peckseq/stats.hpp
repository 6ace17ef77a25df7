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

// How often n ||n alpha|| ||n beta|| is small.
//
//   U_eps(T) = { n <= T : n ||n alpha|| ||n beta|| < eps }
//   V_C(T)   = { n <= T : n log n ||n alpha|| ||n beta|| < C }
//
// and the expected sizes if <n alpha>, <n beta> were independent uniform:
//
//   F_eps(T) = 2 eps (log T)^2 + 4 eps (1 - log 4 eps) log T
//   G_C(T)   = S_C(T) - S_C(m_C) + (m_C - 1)
//   S_C(x)   = 4C log x + 2C (log log x)^2 + 4C (1 - log 4C) log log x

#ifndef PECKSEQ_STATS_HPP_
#define PECKSEQ_STATS_HPP_

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "peckseq/errors.hpp"
#include "peckseq/real.hpp"

namespace peckseq {

using RealGenerator = std::function<Ball(mpfr_prec_t)>;

struct NamedPair {
  std::string name;
  RealGenerator alpha;
  RealGenerator beta;
};

inline std::vector<NamedPair> heuristic_pairs() {
  auto sqrt_of = [](long v) {
    return [v](mpfr_prec_t p) { return sqrt(Ball::from_int(v, p)); };
  };
  auto cbrt_of = [](long v) {
    return [v](mpfr_prec_t p) { return cbrt(Ball::from_int(v, p)); };
  };
  return {
      {"sqrt2_sqrt3", sqrt_of(2), sqrt_of(3)},
      {"e_pi", [](mpfr_prec_t p) { return exp(Ball::from_int(1, p)); },
       [](mpfr_prec_t p) { return Ball::pi(p); }},
      {"cbrt2_cbrt4", cbrt_of(2), cbrt_of(4)},
      {"golden_sqrt65div5",
       [](mpfr_prec_t p) { return (1 + sqrt(Ball::from_int(5, p))) / 2; },
       [](mpfr_prec_t p) { return sqrt(Ball::from_int(65, p)) / 5; }},
  };
}

inline NamedPair find_pair(const std::string& name) {
  for (NamedPair& np : heuristic_pairs()) {
    if (np.name == name) return np;
  }
  throw InvalidInput("unknown pair '" + name + "'");
}

enum class Counter { kU, kV };

struct CountResult {
  long count = 0;      // n certified inside the set
  long ambiguous = 0;  // n left undecided at the precision cap
  // count and count + ambiguous bracket the true size.
};

namespace detail {

// Evaluates alpha and beta once per precision.
class PairCache {
 public:
  explicit PairCache(const NamedPair& pair) : pair_(pair) {}
  const std::pair<Ball, Ball>& at(mpfr_prec_t prec) {
    auto it = cache_.find(prec);
    if (it == cache_.end()) {
      it = cache_.emplace(prec, std::make_pair(pair_.alpha(prec), pair_.beta(prec))).first;
    }
    return it->second;
  }

 private:
  const NamedPair& pair_;
  std::map<mpfr_prec_t, std::pair<Ball, Ball>> cache_;
};

// +1 inside, 0 outside; throws AmbiguousRounding when undecided.
inline int membership(PairCache& cache, Counter which, long n, const mpq_class& threshold,
                      mpfr_prec_t prec) {
  const auto& ab = cache.at(prec);
  Ball nb = Ball::from_int(n, prec);
  Ball prod = nb * abs(mod1(nb * ab.first)) * abs(mod1(nb * ab.second));
  if (which == Counter::kV) {
    if (n == 1) return 1;  // log 1 = 0
    prod = prod * log(nb);
  }
  Ball t = Ball::from_mpq(threshold, prec);
  if (prod.definitely_less(t)) return 1;
  if (mpfr_cmp(prod.lower().get(), t.upper().get()) >= 0) return 0;
  throw AmbiguousRounding("product too close to the threshold at n=" + std::to_string(n));
}

inline void check_threshold(Counter which, const mpq_class& t) {
  if (which == Counter::kU && (t <= 0 || t >= mpq_class(1, 4))) {
    throw InvalidInput("epsilon must lie in (0, 1/4)");
  }
  if (which == Counter::kV && t <= 0) throw InvalidInput("C must be positive");
}

}  // namespace detail

// Counts at every T in sample_at (ascending), in one pass over n.
inline std::vector<CountResult> count_series(const NamedPair& pair, Counter which,
                                             const mpq_class& threshold,
                                             const std::vector<long>& sample_at,
                                             const RealCtx& ctx) {
  detail::check_threshold(which, threshold);
  std::vector<CountResult> out;
  if (sample_at.empty()) return out;
  if (sample_at.front() < 1) throw InvalidInput("T must be >= 1");
  detail::PairCache cache(pair);
  const mpfr_prec_t base = std::max<mpfr_prec_t>(ctx.precision_bits, 128);
  CountResult running;
  std::size_t next = 0;
  for (long n = 1; next < sample_at.size(); ++n) {
    int in = -1;
    for (mpfr_prec_t prec = base + static_cast<mpfr_prec_t>(bit_length(mpz_class(n)));;) {
      try {
        in = detail::membership(cache, which, n, threshold, prec);
        break;
      } catch (const AmbiguousRounding&) {
        if (prec >= ctx.max_precision_bits) break;
        prec = std::min(prec * 2, ctx.max_precision_bits);
      }
    }
    if (in < 0) {
      ++running.ambiguous;
    } else {
      running.count += in;
    }
    while (next < sample_at.size() && sample_at[next] == n) {
      out.push_back(running);
      ++next;
    }
    if (next < sample_at.size() && sample_at[next] < n) throw InvalidInput("sample points must ascend");
  }
  return out;
}

inline CountResult count_U(const NamedPair& pair, const mpq_class& eps, long T, const RealCtx& ctx) {
  return count_series(pair, Counter::kU, eps, {T}, ctx).front();
}

inline CountResult count_V(const NamedPair& pair, const mpq_class& C, long T, const RealCtx& ctx) {
  return count_series(pair, Counter::kV, C, {T}, ctx).front();
}

inline double estimate_F(double eps, double T) {
  if (!(eps > 0 && eps < 0.25)) throw InvalidInput("epsilon must lie in (0, 1/4)");
  if (!(T >= 1)) throw InvalidInput("T must be >= 1");
  double lt = std::log(T);
  return 2 * eps * lt * lt + 4 * eps * (1 - std::log(4 * eps)) * lt;
}

// First integer m with m log m >= 4C.
inline long m_C(double C) {
  if (!(C > 0)) throw InvalidInput("C must be positive");
  long m = 2;
  while (static_cast<double>(m) * std::log(static_cast<double>(m)) < 4 * C) ++m;
  return m;
}

inline double S_C(double C, double x) {
  double ll = std::log(std::log(x));
  return 4 * C * std::log(x) + 2 * C * ll * ll + 4 * C * (1 - std::log(4 * C)) * ll;
}

inline double estimate_G(double C, double T) {
  long m = m_C(C);
  if (T < static_cast<double>(m)) throw InvalidInput("T must be at least m_C = " + std::to_string(m));
  return S_C(C, T) - S_C(C, static_cast<double>(m)) + static_cast<double>(m - 1);
}

struct StatsRow {
  long T;
  CountResult count;
  double estimate;
};

// Rows at T = stride, 2 stride, ..., T_max (T_max always included).
inline std::vector<StatsRow> stats_series(const NamedPair& pair, Counter which, double threshold,
                                          long T_max, long stride, const RealCtx& ctx) {
  if (T_max < 1 || stride < 1) throw InvalidInput("T and stride must be >= 1");
  std::vector<long> at;
  for (long t = stride; t < T_max; t += stride) at.push_back(t);
  at.push_back(T_max);
  mpq_class thr(threshold);
  std::vector<CountResult> counts = count_series(pair, which, thr, at, ctx);
  std::vector<StatsRow> out;
  for (std::size_t i = 0; i < at.size(); ++i) {
    double est;
    if (which == Counter::kU) {
      est = estimate_F(threshold, static_cast<double>(at[i]));
    } else {
      long m = m_C(threshold);
      est = at[i] < m ? static_cast<double>(at[i]) : estimate_G(threshold, static_cast<double>(at[i]));
    }
    out.push_back({at[i], counts[i], est});
  }
  return out;
}

}  // namespace peckseq

#endif  // PECKSEQ_STATS_HPP_
