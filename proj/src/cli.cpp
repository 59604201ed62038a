// Copyright 2026 The Authors.
//
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

#include "bsroots/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bsroots/arrangement.hpp"
#include "bsroots/fs.hpp"
#include "bsroots/homogeneous.hpp"
#include "bsroots/io.hpp"
#include "bsroots/lattice.hpp"
#include "bsroots/parse.hpp"
#include "bsroots/selftest.hpp"
#include "bsroots/weyl.hpp"

namespace bsroots {

namespace {

struct Options {
  std::string format = "json";
  std::size_t budget = kDefaultFlatBudget;
  std::optional<std::size_t> n;
  std::string input;
  std::string expr;
  std::string f_text;
  std::string p_text;
  std::string b_text;
  std::string g_text = "1";
  std::string poly_text;
  std::string lambda_text;
  std::string order_text;
  std::vector<std::string> operators;
  unsigned shifts = 0;
  std::uint64_t seed = kDefaultSeed;
  bool acceptance_only = false;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

std::string set_string(const Support& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

std::string vector_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + ")";
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

RationalVector parse_rational_list(const std::string& text) {
  RationalVector out;
  for (const auto& tok : split_list(text)) out.push_back(parse_rational(tok));
  return out;
}

HyperplaneOrder parse_order(const std::string& text) {
  HyperplaneOrder out;
  for (const auto& tok : split_list(text)) {
    Rational q = parse_rational(tok);
    if (!is_integer(q) || q < 1) throw ParseError("--order expects 1-based indices, got " + tok);
    out.push_back(q.get_num().get_ui() - 1);
  }
  return out;
}

Polynomial load_polynomial(const Options& o) {
  if (!o.poly_text.empty()) return parse_polynomial(o.poly_text, o.n);
  if (o.input.empty()) throw ParseError("expected a polynomial file or --poly");
  return polynomial_from_json(read_json_file(o.input));
}

void emit(std::ostream& out, const Options& o, const std::string& command, const Json& body,
          const std::string& text) {
  if (o.format == "text") {
    out << text;
    return;
  }
  Json report = report_header(command);
  for (const auto& [k, v] : body.items()) report[k] = v;
  out << report.dump(2) << "\n";
}

// ---------------------------------------------------------------------------

int cmd_analyze(const Options& o, std::ostream& out) {
  const Arrangement a = arrangement_from_json(read_json_file(o.input));
  const AnalysisReport r = analyze(a, o.budget);
  std::ostringstream t;
  t << "arrangement: n = " << r.n << ", d = " << r.d << ", " << a.size() << " forms\n";
  t << "essential: " << yes_no(r.essential) << "\n";
  t << "indecomposable (hypothesis of Theorem 1.3): " << yes_no(r.indecomposable) << "\n";
  t << "dense edges:\n";
  for (const auto& e : r.condition.edges) {
    t << "  " << set_string(e.flat.support) << "  dim " << e.flat.dim << "  sum a " << e.sum_mult
      << "  dim - (n/d) sum a = " << to_string(e.r_value) << "\n";
  }
  t << "condition (R) (Theorem 1.3): " << pass_fail(r.condition.pass) << "\n";
  for (const auto& e : r.condition.violators) t << "  violator " << set_string(e.flat.support) << "\n";
  if (r.epsilon) t << "epsilon weights (Lemma 5.1): " << vector_string(r.epsilon->eps) << "\n";
  if (r.epsilon_perturbed) t << "perturbed epsilon: " << vector_string(r.epsilon_perturbed->eps) << "\n";
  if (r.mu) {
    t << "mu and residues (Lemma 4.2), N = " << r.mu->N.get_str() << ":\n";
    for (const auto& m : r.mu->entries) {
      t << "  " << set_string(m.edge.flat.support) << "  mu = " << m.mu << "  residue = " << to_string(m.residue)
        << "\n";
    }
  }
  t << "verdict: " << r.verdict << "\n";
  emit(out, o, "analyze-arrangement", analysis_json(r), t.str());
  return kExitOk;
}

int cmd_weyl_normalize(const Options& o, std::ostream& out) {
  const WeylOperator p = parse_operator(o.expr, o.n);
  Json body{{"n", p.dim()}, {"normal_form", to_string(p)}};
  std::ostringstream t;
  t << "normal form: " << to_string(p) << "\n";
  Json parts = Json::object();
  for (const auto& [k, part] : graded_parts(p)) {
    parts[std::to_string(k)] = to_string(part);
    t << "graded part k = " << k << ": " << to_string(part) << "\n";
  }
  body["graded_parts"] = std::move(parts);
  if (!p.has_s()) {
    Json anti = Json::array();
    for (const auto& [key, c] : to_antinormal(p)) {
      anti.push_back(Json{{"coeff", rational_json(c)}, {"d", key.first.exponents()}, {"x", key.second.exponents()}});
    }
    body["antinormal_form"] = std::move(anti);
    t << "anti-normal form (Lemma 3.3): " << body["antinormal_form"].size() << " terms\n";
    for (const auto& term : body["antinormal_form"]) t << "  " << term.dump() << "\n";
  } else {
    body["antinormal_form"] = nullptr;
  }
  emit(out, o, "weyl-normalize", body, t.str());
  return kExitOk;
}

int cmd_ideal_check(const Options& o, std::ostream& out) {
  const WeylOperator p = parse_operator(o.expr, o.n);
  const IdealCheck c = in_ideal_Dx(p);
  Json body{{"operator", to_string(p)}};
  const Json check = ideal_check_json(c);
  for (const auto& [k, v] : check.items()) body[k] = v;
  std::ostringstream t;
  t << "operator: " << to_string(p) << "\n";
  t << "in D<x1..xn> (Corollary 3.4): " << yes_no(c.member) << "\n";
  for (const auto& f : c.failures) {
    t << "  part k = " << f.k << ", s^" << f.s_power << ", gamma = " << Json(f.gamma.exponents()).dump()
      << ": sum = " << to_string(f.sum) << "\n";
  }
  if (!p.has_s()) {
    const Rational sigma = sigma_invariant(p);
    body["sigma"] = rational_json(sigma);
    t << "sigma of the weight-0 part (Corollary 3.5): " << to_string(sigma) << "\n";
  } else {
    body["sigma"] = nullptr;
  }
  emit(out, o, "ideal-check", body, t.str());
  return kExitOk;
}

int cmd_annihilator_check(const Options& o, std::ostream& out) {
  std::size_t n = o.n.value_or(0);
  n = std::max(n, max_variable_index(o.f_text));
  for (const auto& op : o.operators) n = std::max(n, max_variable_index(op));
  const Polynomial f = parse_polynomial(o.f_text, n);
  const bool homogeneous = is_homogeneous(f).has_value();
  Json ops = Json::array();
  std::ostringstream t;
  t << "f = " << to_string(f) << (homogeneous ? " (homogeneous)" : " (not homogeneous)") << "\n";
  bool criterion_fails = false;
  bool all_annihilate = true;
  for (const auto& text : o.operators) {
    const WeylOperator p = parse_operator(text, n);
    if (p.has_s()) throw PreconditionError("annihilator-check expects operators without s");
    const bool ann = is_annihilator(p, f);
    all_annihilate = all_annihilate && ann;
    Json parts = Json::array();
    t << "operator " << to_string(p) << ": annihilates f^s: " << yes_no(ann) << "\n";
    for (const auto& [k, part] : graded_parts(p)) {
      const bool part_ann = is_annihilator(part, f);
      const IdealCheck c = in_ideal_Dx(part);
      Json pj{{"k", k}, {"operator", to_string(part)}, {"annihilates", part_ann}, {"in_ideal", c.member}};
      t << "  part k = " << k << ": annihilates " << yes_no(part_ann) << ", in D<x> " << yes_no(c.member);
      if (k == 0) {
        const Rational sigma = sigma_invariant(part);
        pj["sigma"] = rational_json(sigma);
        t << ", sigma " << to_string(sigma);
        if (part_ann && sigma != 0) criterion_fails = true;
      }
      t << "\n";
      parts.push_back(std::move(pj));
    }
    ops.push_back(Json{{"operator", to_string(p)}, {"annihilates", ann}, {"graded_parts", std::move(parts)}});
  }
  std::string verdict = criterion_fails
                            ? "criterion fails: an annihilating weight-0 operator has nonzero sigma, so the "
                              "annihilator ideal is not inside D<x1..xn>"
                            : "no counterexample among the supplied operators";
  t << "Corollary 3.5: " << verdict << "\n";
  Json body{{"f", to_string(f)},
            {"homogeneous", homogeneous},
            {"operators", std::move(ops)},
            {"all_annihilate", all_annihilate},
            {"criterion_fails", criterion_fails},
            {"verdict", verdict}};
  emit(out, o, "annihilator-check", body, t.str());
  return kExitOk;
}

int cmd_bs_check(const Options& o, std::ostream& out) {
  const std::size_t n = std::max({o.n.value_or(0), max_variable_index(o.f_text), max_variable_index(o.p_text)});
  const Polynomial f = parse_polynomial(o.f_text, n);
  const WeylOperator p = parse_operator(o.p_text, n);
  const SUnivariate b = parse_s_polynomial(o.b_text);
  const BSCheck c = bs_pair_check({p, b}, f);
  std::ostringstream t;
  t << "P f^(s+1) = b(s) f^s (Definition 1.1): " << pass_fail(c.pass) << "\n";
  t << "f = " << to_string(f) << ", P = " << to_string(p) << ", b = " << to_string(b) << "\n";
  if (!c.pass) t << "residual: " << to_string(c.residual) << "\n";
  Json body{{"f", to_string(f)},          {"P", to_string(p)},
            {"b", to_string(b)},          {"b_monic", b.is_monic()},
            {"pass", c.pass},             {"residual", fs_element_json(c.residual)}};
  emit(out, o, "bs-check", body, t.str());
  return kExitOk;
}

int cmd_fs_apply(const Options& o, std::ostream& out) {
  const std::size_t n = std::max({o.n.value_or(0), max_variable_index(o.f_text), max_variable_index(o.p_text),
                                  max_variable_index(o.g_text)});
  const Polynomial f = parse_polynomial(o.f_text, n);
  const Polynomial g = parse_polynomial(o.g_text, n);
  const WeylOperator p = parse_operator(o.p_text, n);
  FsElement e = apply_to_fs(p, FsElement::times_generator(f, g));
  for (unsigned k = 0; k < o.shifts; ++k) e = t_shift(e);
  std::ostringstream t;
  t << "P (g f^s) = " << to_string(e) << "\n";
  Json body{{"f", to_string(f)}, {"P", to_string(p)}, {"g", to_string(g)}, {"t_shifts", o.shifts},
            {"result", fs_element_json(e)}};
  emit(out, o, "fs-apply", body, t.str());
  return kExitOk;
}

int cmd_euler_witness(const Options& o, std::ostream& out) {
  const Polynomial f = parse_polynomial(o.f_text, o.n);
  const EulerWitness w = euler_root_witness(f);
  std::ostringstream t;
  t << "s f^s = -(n/d) f^s + (1/d) sum d_i(x_i f^s): " << pass_fail(w.verified) << "\n";
  t << "n = " << w.n << ", d = " << w.d << ", candidate root -n/d = " << to_string(-w.n_over_d) << "\n";
  emit(out, o, "euler-witness", euler_witness_json(w), t.str());
  return kExitOk;
}

int cmd_homog_screen(const Options& o, std::ostream& out) {
  const Polynomial f = load_polynomial(o);
  const ScreenReport r = conjecture61_screen(f);
  Json body{{"f", to_string(f)}};
  const Json screen = screen_json(r);
  for (const auto& [k, v] : screen.items()) body[k] = v;
  std::ostringstream t;
  t << "f = " << to_string(f) << "  (n = " << r.n << ", d = " << r.d << ")\n";
  if (r.euler.c) {
    t << "Euler relation f^s = sum c_i d_i(x_i f^s): c = " << vector_string(*r.euler.c)
      << ", verified: " << yes_no(r.euler.verified) << "\n";
  } else {
    t << "Euler relation: infeasible, certificate " << vector_string(r.euler.certificate) << "\n";
  }
  for (const auto& s : r.splits) {
    t << "bidegree-pure split S = " << set_string(s.s) << ", k = " << s.k;
    if (s.balanced) {
      t << ": balanced (nk = dl), no relation forced\n";
    } else {
      t << ": Remark 6.2 coefficients (" << to_string(s.coefficients->first) << ", "
        << to_string(s.coefficients->second) << "), verified: " << yes_no(s.verified) << "\n";
    }
  }
  for (const auto& s : r.separable) {
    t << "separable across S = " << set_string(s.s) << ": (" << to_string(s.factors->first) << ") * ("
      << to_string(s.factors->second) << ")\n";
  }
  t << "Conjecture 6.1 screen: " << r.verdict << "\n(" << r.label << ")\n";
  emit(out, o, "homog-screen", body, t.str());
  return kExitOk;
}

int cmd_lattice(const Options& o, std::ostream& out) {
  const Arrangement a = arrangement_from_json(read_json_file(o.input));
  std::optional<RationalVector> lambda;
  if (!o.lambda_text.empty()) lambda = parse_rational_list(o.lambda_text);
  const HyperplaneOrder order = o.order_text.empty() ? HyperplaneOrder{} : parse_order(o.order_text);
  const LatticeReport r = lattice_report(a, lambda, order, o.budget);
  std::ostringstream t;
  t << "characteristic polynomial: " << char_poly_to_string(r.char_poly) << "\n";
  t << "chi of the projective complement: " << (r.chi_projective ? r.chi_projective->get_str() : "n/a") << "\n";
  t << "predicted top Betti number (Theorem 1.4): "
    << (r.predicted_top_betti ? r.predicted_top_betti->get_str() : "n/a (root criterion does not apply)") << "\n";
  t << "nbc counts:";
  for (std::size_t c : r.nbc_counts) t << " " << c;
  t << "\nAomoto complex, lambda = " << vector_string(r.aomoto.lambda) << ", Betti:";
  for (std::size_t b : r.aomoto.betti) t << " " << b;
  t << "\n";
  emit(out, o, "lattice", lattice_json(r), t.str());
  return kExitOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  std::vector<CheckResult> results;
  for (const auto& c : acceptance_criteria()) results.push_back(run_check(c, o.seed));
  if (!o.acceptance_only) {
    for (const auto& c : oracle_checks()) results.push_back(run_check(c, o.seed));
  }
  bool all = true;
  Json checks = Json::array();
  std::ostringstream t;
  for (const auto& r : results) {
    all = all && r.pass;
    checks.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    t << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << ": " << r.detail << "\n";
  }
  t << (all ? "all checks passed" : "some checks FAILED") << "\n";
  emit(out, o, "selftest", Json{{"seed", o.seed}, {"pass", all}, {"checks", std::move(checks)}}, t.str());
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact checks for Bernstein-Sato roots of hyperplane arrangements", "bsroots"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--budget", o.budget, "maximum number of forms for flat enumeration")->check(CLI::PositiveNumber);

  auto* analyze_cmd = app.add_subcommand("analyze-arrangement", "dense edges, condition (R), epsilon, mu, verdict");
  analyze_cmd->add_option("file", o.input, "arrangement JSON")->required();

  auto* normalize_cmd = app.add_subcommand("weyl-normalize", "normal, anti-normal and graded forms of an operator");
  normalize_cmd->add_option("expr", o.expr, "operator, e.g. \"d1*x1\"")->required();
  normalize_cmd->add_option("--n", o.n, "ambient dimension");

  auto* ideal_cmd = app.add_subcommand("ideal-check", "membership in the left ideal generated by x1..xn");
  ideal_cmd->add_option("expr", o.expr, "operator")->required();
  ideal_cmd->add_option("--n", o.n, "ambient dimension");

  auto* ann_cmd = app.add_subcommand("annihilator-check", "annihilation and the weight-0 sigma criterion");
  ann_cmd->add_option("--f", o.f_text, "polynomial f")->required();
  ann_cmd->add_option("operators", o.operators, "candidate annihilators")->required();
  ann_cmd->add_option("--n", o.n, "ambient dimension");

  auto* bs_cmd = app.add_subcommand("bs-check", "verify P f^(s+1) = b(s) f^s");
  bs_cmd->add_option("--f", o.f_text, "polynomial f")->required();
  bs_cmd->add_option("--P", o.p_text, "operator P(s)")->required();
  bs_cmd->add_option("--b", o.b_text, "polynomial b(s)")->required();
  bs_cmd->add_option("--n", o.n, "ambient dimension");

  auto* fs_cmd = app.add_subcommand("fs-apply", "apply an operator to g f^s");
  fs_cmd->add_option("--f", o.f_text, "polynomial f")->required();
  fs_cmd->add_option("--P", o.p_text, "operator P(s)")->required();
  fs_cmd->add_option("--g", o.g_text, "polynomial factor g (default 1)");
  fs_cmd->add_option("--t-shift", o.shifts, "apply s -> s+1 this many times afterwards");
  fs_cmd->add_option("--n", o.n, "ambient dimension");

  auto* euler_cmd = app.add_subcommand("euler-witness", "the s f^s identity for homogeneous f");
  euler_cmd->add_option("--f", o.f_text, "homogeneous polynomial f")->required();
  euler_cmd->add_option("--n", o.n, "ambient dimension");

  auto* screen_cmd = app.add_subcommand("homog-screen", "Euler relation, bidegree splits, separability");
  screen_cmd->add_option("file", o.input, "polynomial JSON");
  screen_cmd->add_option("--poly", o.poly_text, "polynomial text instead of a file");
  screen_cmd->add_option("--n", o.n, "ambient dimension for --poly");

  auto* lattice_cmd = app.add_subcommand("lattice", "characteristic polynomial, chi, nbc basis, Aomoto Betti");
  lattice_cmd->add_option("file", o.input, "arrangement JSON")->required();
  lattice_cmd->add_option("--lambda", o.lambda_text, "Aomoto weights, comma separated");
  lattice_cmd->add_option("--order", o.order_text, "hyperplane order, 1-based, smallest first");

  auto* self_cmd = app.add_subcommand("selftest", "acceptance criteria and oracle comparisons");
  self_cmd->add_option("--seed", o.seed, "random seed");
  self_cmd->add_flag("--acceptance-only", o.acceptance_only, "skip the extra oracle comparisons");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(o, out);
    if (normalize_cmd->parsed()) return cmd_weyl_normalize(o, out);
    if (ideal_cmd->parsed()) return cmd_ideal_check(o, out);
    if (ann_cmd->parsed()) return cmd_annihilator_check(o, out);
    if (bs_cmd->parsed()) return cmd_bs_check(o, out);
    if (fs_cmd->parsed()) return cmd_fs_apply(o, out);
    if (euler_cmd->parsed()) return cmd_euler_witness(o, out);
    if (screen_cmd->parsed()) return cmd_homog_screen(o, out);
    if (lattice_cmd->parsed()) return cmd_lattice(o, out);
    if (self_cmd->parsed()) return cmd_selftest(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << "no command given\n";
  return kExitParse;
}

}  // namespace bsroots
