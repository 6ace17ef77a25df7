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

#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "peckseq/peckseq.hpp"

namespace peckseq::cli {
namespace {

using nlohmann::ordered_json;

struct RunConfig {
  std::string cubic;
  std::string pq;
  std::string beta = "0,0,1,1";
  std::string d;
  std::string lambda;
  long prec_bits = 256;
  long depth = 16;
  long digit_budget = 50000;
  std::string format = "csv";
  std::string out;
  int sig = 0;  // 0: 6 for csv, 15 for json

  long n_lo = 1;
  long n_max = 25;
  std::string pair = "sqrt2_sqrt3";
  std::string epsilon;
  std::string C;
  long T = 1000;
  long stride = 100;
  long k_max = 2000;
  long window = 3;
  long audit_n = 40;
};

// The construction step in progress, for error messages.
struct Session {
  int step = 0;
};

std::vector<mpz_class> parse_ints(const std::string& text, std::size_t count,
                                  const std::string& flag) {
  std::vector<mpz_class> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    mpz_class v;
    if (item.empty() || v.set_str(item, 10) != 0) {
      throw InvalidInput(flag + ": '" + item + "' is not an integer");
    }
    out.push_back(v);
  }
  if (out.size() != count) {
    throw InvalidInput(flag + " expects " + std::to_string(count) + " comma-separated integers");
  }
  return out;
}

mpq_class parse_rational(const std::string& text, const std::string& flag) {
  // Accepts integers, fractions a/b and plain decimals.
  std::string t = text;
  mpq_class r;
  auto dot = t.find('.');
  if (dot == std::string::npos) {
    if (r.set_str(t, 10) != 0) throw InvalidInput(flag + ": '" + text + "' is not a number");
    r.canonicalize();
    return r;
  }
  std::string digits = t.substr(0, dot) + t.substr(dot + 1);
  mpz_class num;
  if (digits.empty() || num.set_str(digits, 10) != 0) {
    throw InvalidInput(flag + ": '" + text + "' is not a number");
  }
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, t.size() - dot - 1);
  r = mpq_class(num, den);
  r.canonicalize();
  return r;
}

CubicParams make_cubic(const RunConfig& cfg) {
  std::optional<mpz_class> d;
  if (!cfg.d.empty()) d = parse_ints(cfg.d, 1, "--d")[0];
  if (!cfg.cubic.empty() && !cfg.pq.empty()) throw InvalidInput("--cubic and --pq are exclusive");
  if (!cfg.pq.empty()) {
    auto v = parse_ints(cfg.pq, 2, "--pq");
    return from_depressed(v[0], v[1], d);
  }
  if (cfg.cubic.empty()) throw InvalidInput("one of --cubic or --pq is required");
  auto v = parse_ints(cfg.cubic, 4, "--cubic");
  return depress(v[0], v[1], v[2], v[3], d);
}

TargetPair make_pair(const RunConfig& cfg, const CubicParams& cp) {
  auto r = parse_ints(cfg.beta, 4, "--beta");
  return make_target(cp, r[0], r[1], r[2], r[3]);
}

RealCtx make_ctx(const RunConfig& cfg) {
  if (cfg.prec_bits < 64) throw InvalidInput("--prec-bits must be >= 64");
  return RealCtx::from_env(static_cast<mpfr_prec_t>(cfg.prec_bits));
}

UnitCandidate make_unit(const RunConfig& cfg, const CubicParams& cp, const RealCtx& ctx) {
  if (cfg.lambda.empty()) {
    SearchOptions opt;
    opt.k_max = cfg.k_max;
    opt.window = cfg.window;
    return search(cp, ctx, opt);
  }
  auto v = parse_ints(cfg.lambda, 4, "--lambda");
  if (v[3] == 0) throw InvalidInput("--lambda denominator must be nonzero");
  FieldElement e{mpq_class(v[0], v[3]), mpq_class(v[1], v[3]), mpq_class(v[2], v[3])};
  e.x.canonicalize();
  e.y.canonicalize();
  e.z.canonicalize();
  return validate_unit(cp, e, ctx);
}

int sig_digits(const RunConfig& cfg) {
  if (cfg.sig > 0) return cfg.sig;
  return cfg.format == "json" ? 15 : 6;
}

std::string element_json_str(const FieldElement& e) { return to_string(e); }

// Decimal for a ball computed by f at the given precision, recomputing at
// higher precision when the digits are not yet certified.
template <typename F>
std::string certified(const RealCtx& ctx, int sig, F&& f) {
  return format_certified(ctx, sig, std::forward<F>(f));
}

std::string product_text(const PeckRun& run, const mpz_class& psi, const RealCtx& ctx, int sig) {
  for (unsigned bits = 64;; bits *= 2) {
    LittlewoodRow row = littlewood_row(run, psi, ctx, bits);
    try {
      return format_sig(row.product, sig);
    } catch (const AmbiguousRounding&) {
      if (bits >= 1024) throw PrecisionExhausted("product digits not certified");
    }
  }
}

struct Pipeline {
  CubicParams cubic;
  TargetPair pair;
  RealCtx ctx;
  std::optional<PeckRun> run;
};

Pipeline build(const RunConfig& cfg, Session& s, bool need_unit) {
  Pipeline p;
  s.step = 1;
  p.ctx = make_ctx(cfg);
  p.cubic = make_cubic(cfg);
  s.step = 3;
  p.pair = make_pair(cfg, p.cubic);
  if (need_unit) {
    s.step = 2;
    UnitCandidate u = make_unit(cfg, p.cubic, p.ctx);
    p.run.emplace(p.pair, u);
  }
  return p;
}

std::string d_source_name(DSource s) {
  return s == DSource::kUserSupplied ? "user" : "discriminant";
}

ordered_json cubic_json(const CubicParams& cp) {
  return {{"A", cp.A.get_str()}, {"B", cp.B.get_str()}, {"C", cp.C.get_str()},
          {"D", cp.D.get_str()}, {"p", cp.p.get_str()}, {"q", cp.q.get_str()},
          {"theta_scale", cp.map.scale.get_str()}, {"theta_shift", cp.map.shift.get_str()},
          {"d", cp.d.get_str()}, {"d_source", d_source_name(cp.d_source)}};
}

struct ConstantsText {
  std::vector<std::pair<std::string, std::string>> items;
};

ConstantsText constants_text(const PeckRun& run, const RealCtx& ctx, int sig) {
  return escalate(ctx, ctx.precision_bits, [&](mpfr_prec_t prec) {
    ConstantsBundle k = constants_at(run, prec);
    ConstantsText t;
    auto add = [&](const std::string& name, const Ball& b) {
      t.items.emplace_back(name, format_sig(b, sig));
    };
    add("lambda", k.lambda);
    add("C1", k.C1);
    add("C2", k.C2);
    add("C3", k.C3);
    add("M_theta", k.Mtheta);
    add("M_alpha", k.Malpha);
    add("M_beta1", k.Mbeta1);
    add("M_beta2", k.Mbeta2);
    add("N", k.N);
    add("C0", k.C0);
    add("n0", k.n0);
    add("phi", k.phi);
    return t;
  });
}

struct TableRowText {
  std::string Q, digits, psi, product, bound;
  bool checked;
};

std::vector<TableRowText> table_rows(const PeckRun& run, const ConstantsBundle& k,
                                     const std::vector<Convergent>& conv, const RunConfig& cfg,
                                     const RealCtx& ctx) {
  int sig = sig_digits(cfg);
  PsiTableOptions opt;
  opt.rows = conv.size();
  opt.digit_budget = static_cast<std::size_t>(cfg.digit_budget);
  PeckCertificate cert = psi_table(run, k, conv, opt, ctx);
  std::vector<TableRowText> out;
  for (const PsiRow& r : cert.rows) {
    TableRowText t;
    t.Q = r.Q.get_str();
    t.digits = std::to_string(r.digits);
    t.psi = r.psi ? r.psi->get_str() : abbreviate_psi(r.first3, r.last3, r.digits);
    t.product = r.psi ? product_text(run, *r.psi, ctx, sig) : "";
    Ball bound = r.bound;
    t.bound = certified(ctx, sig, [&](mpfr_prec_t prec) {
      if (prec <= bound.prec()) return bound;
      return constants_at(run, prec).C0 / Ball::from_mpz(r.Q_next, prec);
    });
    t.checked = r.bound_checked;
    out.push_back(std::move(t));
  }
  return out;
}

ContinuedFraction phi_cf(const PeckRun& run, const RunConfig& cfg, const RealCtx& ctx) {
  if (cfg.depth < 1) throw InvalidInput("--depth must be >= 1");
  return expand(phi_over_pi_source(run), static_cast<std::size_t>(cfg.depth), ctx);
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw InvalidInput("cannot open --out path " + cfg.out);
  f << text;
}

std::string cmd_unit(const RunConfig& cfg, Session& s) {
  s.step = 1;
  RealCtx ctx = make_ctx(cfg);
  CubicParams cp = make_cubic(cfg);
  s.step = 2;
  UnitCandidate u = make_unit(cfg, cp, ctx);
  mpz_class den = cp.d;
  int sig = sig_digits(cfg);
  std::string value = certified(ctx, sig, [&](mpfr_prec_t prec) {
    return Field(cp).eval(u.element, real_root(cp.p, cp.q, prec));
  });
  mpz_class a = mpz_class(u.element.x * den), b = mpz_class(u.element.y * den),
            c = mpz_class(u.element.z * den);
  if (cfg.format == "json") {
    ordered_json j = {{"cubic", cubic_json(cp)},
                      {"lambda", {{"a", a.get_str()}, {"b", b.get_str()}, {"c", c.get_str()},
                                  {"den", den.get_str()}, {"value", value},
                                  {"norm", u.norm_value.get_str()}}}};
    return j.dump(2) + "\n";
  }
  return csv_line({"a", "b", "c", "den", "lambda"}) +
         csv_line({a.get_str(), b.get_str(), c.get_str(), den.get_str(), value});
}

std::string cmd_cf(const RunConfig& cfg, Session& s) {
  Pipeline p = build(cfg, s, true);
  s.step = 4;
  ContinuedFraction cf = phi_cf(*p.run, cfg, p.ctx);
  if (cfg.format == "json") {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < cf.convergents.size(); ++i) {
      rows.push_back({{"n", i}, {"a_n", cf.partial_quotients[i].get_str()},
                      {"P_n", cf.convergents[i].P.get_str()},
                      {"Q_n", cf.convergents[i].Q.get_str()}});
    }
    return ordered_json{{"convergents", rows}}.dump(2) + "\n";
  }
  std::string out = csv_line({"n", "a_n", "P_n", "Q_n"});
  for (std::size_t i = 0; i < cf.convergents.size(); ++i) {
    out += csv_line({std::to_string(i), cf.partial_quotients[i].get_str(),
                     cf.convergents[i].P.get_str(), cf.convergents[i].Q.get_str()});
  }
  return out;
}

std::string cmd_table(const RunConfig& cfg, Session& s) {
  Pipeline p = build(cfg, s, true);
  if (!p.pair.independent()) throw InvalidInput("table needs r2 != 0; use construct for dependent pairs");
  s.step = 4;
  ContinuedFraction cf = phi_cf(*p.run, cfg, p.ctx);
  s.step = 5;
  ConstantsBundle k = constants(*p.run, p.ctx);
  s.step = 6;
  auto rows = table_rows(*p.run, k, noninteger_convergents(cf), cfg, p.ctx);
  if (cfg.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      arr.push_back({{"Qn", r.Q}, {"psi_digits", r.digits}, {"psi", r.psi},
                     {"product", r.product}, {"bound", r.bound}, {"bound_checked", r.checked}});
    }
    return ordered_json{{"psi_table", arr}}.dump(2) + "\n";
  }
  std::string out = csv_line({"Qn", "psi_digits", "psi", "product", "bound"});
  for (const auto& r : rows) out += csv_line({r.Q, r.digits, r.psi, r.product, r.bound});
  return out;
}

std::string cmd_ellipse(const RunConfig& cfg, Session& s) {
  Pipeline p = build(cfg, s, true);
  if (cfg.n_lo < 1 || cfg.n_max < cfg.n_lo) throw InvalidInput("need 1 <= --n-min <= --n-max");
  s.step = 6;
  int sig = sig_digits(cfg);
  auto pts = ellipse_points(*p.run, static_cast<unsigned long>(cfg.n_lo),
                            static_cast<unsigned long>(cfg.n_max), p.ctx);
  std::vector<std::vector<std::string>> rows;
  for (const EllipsePoint& e : pts) {
    rows.push_back({std::to_string(e.n), e.k.get_str(), format_sig(e.u, sig), format_sig(e.v, sig),
                    format_sig(e.residual, sig), e.bound_applies ? format_sig(e.residual_bound, sig) : ""});
  }
  const std::vector<std::string> head = {"n", "k_n", "u", "v", "residual", "residual_bound"};
  if (cfg.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json o;
      for (std::size_t i = 0; i < head.size(); ++i) o[head[i]] = r[i];
      arr.push_back(o);
    }
    return ordered_json{{"ellipse", arr}}.dump(2) + "\n";
  }
  std::string out = csv_line(head);
  for (const auto& r : rows) out += csv_line(r);
  return out;
}

std::string cmd_stats(const RunConfig& cfg, Session& s, std::ostream& err) {
  s.step = 0;
  RealCtx ctx = make_ctx(cfg);
  if (cfg.epsilon.empty() == cfg.C.empty()) throw InvalidInput("give exactly one of --epsilon or --C");
  Counter which = cfg.epsilon.empty() ? Counter::kV : Counter::kU;
  mpq_class thr = parse_rational(which == Counter::kU ? cfg.epsilon : cfg.C,
                                 which == Counter::kU ? "--epsilon" : "--C");
  NamedPair pair = find_pair(cfg.pair);
  auto rows = stats_series(pair, which, thr.get_d(), cfg.T, cfg.stride, ctx);
  int sig = sig_digits(cfg);
  long ambiguous = rows.empty() ? 0 : rows.back().count.ambiguous;
  if (ambiguous > 0) {
    err << "warning: " << ambiguous << " indices undecided at the precision cap; counts are lower bounds\n";
  }
  if (cfg.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const StatsRow& r : rows) {
      arr.push_back({{"T", r.T}, {"count", r.count.count}, {"ambiguous", r.count.ambiguous},
                     {"estimate", format_sig(mpq_class(r.estimate), sig)}});
    }
    return ordered_json{{"pair", cfg.pair}, {"rows", arr}}.dump(2) + "\n";
  }
  std::string out = csv_line({"T", "count", "estimate"});
  for (const StatsRow& r : rows) {
    out += csv_line({std::to_string(r.T), std::to_string(r.count.count),
                     format_sig(mpq_class(r.estimate), sig)});
  }
  return out;
}

std::string cmd_construct_rational(const RunConfig& cfg, const Pipeline& p, Session& s) {
  s.step = 3;
  RationalCase rc = rational_case(p.pair);
  std::size_t count = static_cast<std::size_t>(std::max<long>(cfg.depth, 1));
  std::vector<mpz_class> ms = rational_case_sequence(p.pair, count, p.ctx);
  Field f(p.cubic);
  int sig = sig_digits(cfg);
  std::string kind = rc.kind == DependenceKind::kBetaRational ? "beta_rational" : "dependent";
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    LittlewoodRow row = littlewood_row(f, ms[i], p.pair.alpha(), p.pair.beta(), p.ctx);
    rows.push_back({std::to_string(i), ms[i].get_str(), format_sig(row.product, sig)});
  }
  if (cfg.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) arr.push_back({{"n", r[0]}, {"m_n", r[1]}, {"product", r[2]}});
    return ordered_json{{"cubic", cubic_json(p.cubic)},
                        {"rational_case", {{"kind", kind}, {"multiplier", rc.multiplier.get_str()},
                                           {"bound_alpha", rc.bound_alpha.get_str()},
                                           {"bound_beta", rc.bound_beta.get_str()}}},
                        {"rows", arr}}
               .dump(2) + "\n";
  }
  std::string out;
  out += "# 1, alpha, beta are Q-linearly dependent (" + kind + ")\n";
  out += "# m_n = " + rc.multiplier.get_str() + " q_n, q_n the convergent denominators of alpha\n";
  out += "# eventually m ||m alpha|| < " + rc.bound_alpha.get_str();
  if (rc.kind == DependenceKind::kBetaRational) {
    out += " and m ||m beta|| = 0\n";
  } else {
    out += " and m ||m beta|| < " + rc.bound_beta.get_str() + "\n";
  }
  out += csv_line({"n", "m_n", "product"});
  for (const auto& r : rows) out += csv_line(r);
  return out;
}

std::string cmd_construct(const RunConfig& cfg, Session& s) {
  Pipeline p = build(cfg, s, false);
  if (!p.pair.independent()) return cmd_construct_rational(cfg, p, s);
  s.step = 2;
  UnitCandidate u = make_unit(cfg, p.cubic, p.ctx);
  PeckRun run(p.pair, u);
  int sig = sig_digits(cfg);
  s.step = 4;
  ContinuedFraction cf = phi_cf(run, cfg, p.ctx);
  std::vector<Convergent> conv = noninteger_convergents(cf);
  s.step = 5;
  ConstantsBundle k = constants(run, p.ctx);
  ConstantsText ktext = constants_text(run, p.ctx, sig);
  s.step = 6;
  auto rows = table_rows(run, k, conv, cfg, p.ctx);
  unsigned long audit_hi = static_cast<unsigned long>(std::max<long>(cfg.audit_n, 1));
  AuditReport audit = audit_sequence(run, 1, audit_hi, p.ctx);
  audit.merge(audit_rotation(run, conv, p.ctx));
  if (audit.violations > 0) {
    throw BoundViolated("sequence audit: " + audit.messages.front());
  }

  if (cfg.format == "json") {
    ordered_json consts;
    for (const auto& [name, v] : ktext.items) consts[name] = v;
    ordered_json convs = ordered_json::array();
    for (const Convergent& c : conv) convs.push_back(c.P.get_str() + "/" + c.Q.get_str());
    ordered_json table = ordered_json::array();
    for (const auto& r : rows) {
      table.push_back({{"Qn", r.Q}, {"psi_digits", r.digits}, {"psi", r.psi},
                       {"product", r.product}, {"bound", r.bound}, {"bound_checked", r.checked}});
    }
    ordered_json j = {
        {"cubic", cubic_json(p.cubic)},
        {"lambda", element_json_str(run.lambda())},
        {"alpha", element_json_str(p.pair.alpha())},
        {"beta", element_json_str(p.pair.beta())},
        {"multiplier", run.multiplier().get_str()},
        {"constants", consts},
        {"convergents", convs},
        {"psi_table", table},
        {"audit", {{"checks", audit.checks}, {"violations", audit.violations},
                   {"undecided", audit.undecided}}}};
    return j.dump(2) + "\n";
  }

  const CubicParams& cp = p.cubic;
  std::string out;
  out += "# Step 1: theta^3 = " + cp.p.get_str() + " theta + " + cp.q.get_str() +
         ", theta = " + cp.map.scale.get_str() + " alpha + " + cp.map.shift.get_str() +
         ", d = " + cp.d.get_str() + " (" + d_source_name(cp.d_source) + ")\n";
  out += "# Step 2: lambda = " + to_string(run.lambda()) + " in (1, theta, theta^2)\n";
  out += "# Step 3: alpha = " + to_string(p.pair.alpha()) + ", beta = " + to_string(p.pair.beta()) +
         ", m_n = " + run.multiplier().get_str() + " k_n\n";
  out += "# Step 4: phi/pi convergents:";
  for (const Convergent& c : conv) out += " " + c.P.get_str() + "/" + c.Q.get_str();
  out += "\n# Step 5:";
  for (const auto& [name, v] : ktext.items) out += " " + name + "=" + v;
  out += "\n# Step 6: psi_n = m_{Q_n}; bound C0/Q_{n+1} certified for Q_n > n0\n";
  out += "# audit: " + std::to_string(audit.checks) + " checks, " +
         std::to_string(audit.violations) + " violations, " + std::to_string(audit.undecided) +
         " undecided\n";
  out += csv_line({"Qn", "psi_digits", "psi", "product", "bound"});
  for (const auto& r : rows) out += csv_line({r.Q, r.digits, r.psi, r.product, r.bound});
  return out;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool field_options) {
  if (field_options) {
    sub->add_option("--cubic", cfg.cubic, "A,B,C,D of A x^3 + B x^2 + C x + D");
    sub->add_option("--pq", cfg.pq, "p,q of x^3 - p x - q");
    sub->add_option("--d", cfg.d, "denominator bound d (default |4p^3 - 27q^2|)");
    sub->add_option("--lambda", cfg.lambda, "unit (a + b theta + c theta^2)/den as a,b,c,den");
    sub->add_option("--k-max", cfg.k_max, "unit search range");
    sub->add_option("--window", cfg.window, "unit search window");
  }
  sub->add_option("--prec-bits", cfg.prec_bits, "starting precision in bits");
  sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", cfg.out, "write output to PATH");
  sub->add_option("--sig", cfg.sig, "significant digits for real columns");
}

void add_pair_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--beta", cfg.beta, "r0,r1,r2,s with beta = (r0 + r1 alpha + r2 alpha^2)/s");
  sub->add_option("--depth", cfg.depth, "continued fraction depth");
  sub->add_option("--digit-budget", cfg.digit_budget, "largest psi printed in full");
}

}  // namespace

int exit_code(const std::exception& e) {
  if (dynamic_cast<const BoundViolated*>(&e)) return kExitBoundViolated;
  if (dynamic_cast<const PrecisionExhausted*>(&e)) return kExitPrecisionExhausted;
  if (dynamic_cast<const AmbiguousRounding*>(&e)) return kExitPrecisionExhausted;
  if (dynamic_cast<const InvalidInput*>(&e)) return kExitInvalidInput;
  if (dynamic_cast<const NotFound*>(&e)) return kExitInvalidInput;
  if (dynamic_cast<const DigitBudgetExceeded*>(&e)) return kExitInvalidInput;
  return kExitInternal;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  Session session;
  CLI::App app{"Peck sequences and Littlewood products in complex cubic fields", "peckseq"};
  app.require_subcommand(1);

  CLI::App* construct = app.add_subcommand("construct", "full construction report");
  add_common(construct, cfg, true);
  add_pair_options(construct, cfg);
  construct->add_option("--audit-n", cfg.audit_n, "audit sequence inequalities for n <= N");

  CLI::App* table = app.add_subcommand("table", "psi table: Qn, psi_digits, psi, product, bound");
  add_common(table, cfg, true);
  add_pair_options(table, cfg);

  CLI::App* ellipse = app.add_subcommand("ellipse", "scaled signed distances of k_n theta, k_n theta^2");
  add_common(ellipse, cfg, true);
  ellipse->add_option("--n-min", cfg.n_lo, "first n");
  ellipse->add_option("--n-max", cfg.n_max, "last n");

  CLI::App* cf = app.add_subcommand("cf", "continued fraction of phi/pi");
  add_common(cf, cfg, true);
  add_pair_options(cf, cfg);

  CLI::App* stats = app.add_subcommand("stats", "counts of small Littlewood products");
  add_common(stats, cfg, false);
  stats->add_option("--pair", cfg.pair, "sqrt2_sqrt3, e_pi, cbrt2_cbrt4 or golden_sqrt65div5");
  stats->add_option("--epsilon", cfg.epsilon, "count n ||n a|| ||n b|| < epsilon");
  stats->add_option("--C", cfg.C, "count n log n ||n a|| ||n b|| < C");
  stats->add_option("--T", cfg.T, "horizon");
  stats->add_option("--stride", cfg.stride, "sampling stride");

  CLI::App* unit = app.add_subcommand("unit", "find or validate the unit lambda");
  add_common(unit, cfg, true);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  auto where = [&]() {
    return session.step > 0 ? "error (step " + std::to_string(session.step) + "): "
                            : std::string("error: ");
  };
  try {
    std::string text;
    if (construct->parsed()) {
      text = cmd_construct(cfg, session);
    } else if (table->parsed()) {
      text = cmd_table(cfg, session);
    } else if (ellipse->parsed()) {
      text = cmd_ellipse(cfg, session);
    } else if (cf->parsed()) {
      text = cmd_cf(cfg, session);
    } else if (stats->parsed()) {
      text = cmd_stats(cfg, session, err);
    } else {
      text = cmd_unit(cfg, session);
    }
    emit(cfg, text, out);
    return kExitOk;
  } catch (const std::exception& e) {
    int code = exit_code(e);
    err << where() << (code == kExitInternal ? "internal: " : "") << e.what();
    if (dynamic_cast<const NotFound*>(&e)) err << "; pass --lambda or raise --k-max";
    err << "\n";
    return code;
  }
}

}  // namespace peckseq::cli
