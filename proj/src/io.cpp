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

#include "bsroots/io.hpp"

#include <fstream>
#include <sstream>

#include "bsroots/parse.hpp"

namespace bsroots {

namespace {

// Integers built in C++ are stored signed, parsed ones unsigned.
bool is_non_negative(const Json& j) { return j.is_number_integer() && j.get<long long>() >= 0; }

std::size_t size_field(const Json& j, const char* key) {
  if (!j.contains(key) || !is_non_negative(j.at(key))) {
    throw ParseError(std::string("expected a non-negative integer field \"") + key + "\"");
  }
  return j.at(key).get<std::size_t>();
}

Polynomial terms_from_json(const Json& terms, std::optional<std::size_t> n) {
  if (!terms.is_array()) throw ParseError("polynomial terms must be an array");
  if (!n) {
    if (terms.empty()) throw ParseError("empty term list needs an explicit \"n\"");
    const Json& first = terms.front();
    if (!first.is_object() || !first.contains("exps") || !first.at("exps").is_array()) {
      throw ParseError("term needs an \"exps\" array");
    }
    n = first.at("exps").size();
  }
  Polynomial out(*n);
  for (const Json& t : terms) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("exps") || !t.at("exps").is_array()) {
      throw ParseError("each term needs \"coeff\" and \"exps\"");
    }
    const Json& exps = t.at("exps");
    if (exps.size() != *n) throw ParseError("term has " + std::to_string(exps.size()) + " exponents, expected " +
                                            std::to_string(*n));
    MultiIndex e(*n);
    for (std::size_t i = 0; i < *n; ++i) {
      if (!is_non_negative(exps[i])) throw ParseError("exponents must be non-negative integers");
      e[i] = exps[i].get<unsigned>();
    }
    out.add_term(e, rational_from_json(t.at("coeff")));
  }
  return out;
}

Json dense_edge_json(const DenseEdge& e) {
  return Json{{"support", support_json(e.flat.support)},
              {"dim", e.flat.dim},
              {"sum_mult", e.sum_mult},
              {"r_value", rational_json(e.r_value)}};
}

Json vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_json(q));
  return out;
}

Json matrix_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected a rational as an integer or a \"p/q\" string, got " + j.dump());
}

Json support_json(const Support& s) {
  Json out = Json::array();
  for (std::size_t i : s) out.push_back(i + 1);
  return out;
}

Json polynomial_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"coeff", rational_json(c)}, {"exps", e.exponents()}});
  return Json{{"n", p.dim()}, {"terms", std::move(terms)}, {"text", to_string(p)}};
}

Polynomial polynomial_from_json(const Json& j) {
  if (j.is_array()) return terms_from_json(j, std::nullopt);
  if (!j.is_object()) throw ParseError("polynomial must be a term list or an object");
  std::optional<std::size_t> n;
  if (j.contains("n")) n = size_field(j, "n");
  if (j.contains("terms")) return terms_from_json(j.at("terms"), n);
  if (j.contains("poly")) {
    if (!j.at("poly").is_string()) throw ParseError("\"poly\" must be a string");
    return parse_polynomial(j.at("poly").get<std::string>(), n);
  }
  throw ParseError("polynomial object needs \"terms\" or \"poly\"");
}

Json arrangement_json(const Arrangement& a) {
  Json forms = Json::array();
  for (const auto& f : a.forms()) forms.push_back(vector_json(f));
  return Json{{"n", a.dim()}, {"forms", std::move(forms)}, {"mults", a.mults()}};
}

Arrangement arrangement_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("arrangement must be an object");
  const std::size_t n = size_field(j, "n");
  if (!j.contains("forms") || !j.at("forms").is_array()) throw ParseError("arrangement needs a \"forms\" array");
  std::vector<RationalVector> forms;
  for (const Json& f : j.at("forms")) {
    if (!f.is_array()) throw ParseError("each form must be an array of coefficients");
    RationalVector v;
    for (const Json& c : f) v.push_back(rational_from_json(c));
    forms.push_back(std::move(v));
  }
  std::vector<unsigned> mults(forms.size(), 1);
  if (j.contains("mults")) {
    const Json& m = j.at("mults");
    if (!m.is_array()) throw ParseError("\"mults\" must be an array");
    mults.clear();
    for (const Json& a : m) {
      if (!is_non_negative(a)) throw ParseError("multiplicities must be positive integers");
      mults.push_back(a.get<unsigned>());
    }
  }
  return Arrangement(n, std::move(forms), std::move(mults));
}

Json report_header(const std::string& command) { return Json{{"schema", kSchemaVersion}, {"command", command}}; }

Json analysis_json(const AnalysisReport& r) {
  Json out;
  out["n"] = r.n;
  out["d"] = r.d;
  out["essential"] = r.essential;
  out["indecomposable"] = r.indecomposable;
  Json edges = Json::array();
  for (const auto& e : r.condition.edges) edges.push_back(dense_edge_json(e));
  out["dense_edges"] = std::move(edges);
  Json violators = Json::array();
  for (const auto& e : r.condition.violators) violators.push_back(dense_edge_json(e));
  out["condition_R"] = Json{{"pass", r.condition.pass}, {"violators", std::move(violators)}};
  out["epsilon"] = r.epsilon ? vector_json(r.epsilon->eps) : Json(nullptr);
  out["epsilon_perturbed"] = r.epsilon_perturbed ? vector_json(r.epsilon_perturbed->eps) : Json(nullptr);
  if (r.mu) {
    Json mu = Json::array();
    Json residues = Json::array();
    for (const auto& m : r.mu->entries) {
      mu.push_back(Json{{"support", support_json(m.edge.flat.support)},
                        {"eps_sum", rational_json(m.eps_sum)},
                        {"mu", m.mu}});
      residues.push_back(Json{{"support", support_json(m.edge.flat.support)}, {"residue", rational_json(m.residue)}});
    }
    out["mu"] = std::move(mu);
    out["N"] = r.mu->N.get_str();
    out["residues"] = std::move(residues);
  } else {
    out["mu"] = nullptr;
    out["N"] = nullptr;
    out["residues"] = nullptr;
  }
  out["theorem_applies"] = r.theorem_applies;
  out["root"] = r.root ? rational_json(*r.root) : Json(nullptr);
  out["verdict"] = r.verdict;
  return out;
}

Json lattice_json(const LatticeReport& r) {
  Json out;
  Json coeffs = Json::array();
  for (const auto& c : r.char_poly) coeffs.push_back(c.get_str());
  out["char_poly"] = Json{{"coefficients", std::move(coeffs)}, {"text", char_poly_to_string(r.char_poly)}};
  out["chi_projective"] = r.chi_projective ? Json(r.chi_projective->get_str()) : Json(nullptr);
  out["theorem_applies"] = r.theorem_applies;
  out["predicted_top_betti"] = r.predicted_top_betti ? Json(r.predicted_top_betti->get_str()) : Json(nullptr);
  out["nbc_counts"] = r.nbc_counts;
  Json order = Json::array();
  for (std::size_t j : r.aomoto.basis.order) order.push_back(j + 1);
  Json nbc = Json::array();
  for (const auto& level : r.aomoto.basis.nbc) {
    Json sets = Json::array();
    for (const auto& s : level) sets.push_back(support_json(s));
    nbc.push_back(std::move(sets));
  }
  Json broken = Json::array();
  for (const auto& b : r.aomoto.basis.broken_circuits) broken.push_back(support_json(b));
  out["order"] = std::move(order);
  out["broken_circuits"] = std::move(broken);
  out["nbc"] = std::move(nbc);
  Json matrices = Json::array();
  for (const auto& m : r.aomoto.matrices) matrices.push_back(matrix_json(m));
  out["aomoto"] = Json{{"lambda", vector_json(r.aomoto.lambda)},
                       {"betti", r.aomoto.betti},
                       {"matrices", std::move(matrices)}};
  return out;
}

Json euler_search_json(const EulerSearch& e) {
  if (e.c) return Json{{"feasible", true}, {"c", vector_json(*e.c)}, {"verified", e.verified}};
  return Json{{"feasible", false}, {"certificate", vector_json(e.certificate)}};
}

Json split_json(const SplitReport& r) {
  Json out{{"S", support_json(r.s)}, {"k", r.k}, {"d", r.d}, {"n", r.n}, {"l", r.l}, {"balanced", r.balanced}};
  if (r.coefficients) {
    out["coefficients"] = Json::array({rational_json(r.coefficients->first), rational_json(r.coefficients->second)});
    out["c"] = vector_json(r.c);
    out["verified"] = r.verified;
  } else {
    out["coefficients"] = nullptr;
  }
  return out;
}

Json separability_json(const SeparabilityReport& r) {
  Json out{{"S", support_json(r.s)}, {"rank", r.rank}, {"separable", r.separable}};
  if (r.factors) {
    out["g1"] = to_string(r.factors->first);
    out["g2"] = to_string(r.factors->second);
  }
  return out;
}

Json screen_json(const ScreenReport& r) {
  Json out;
  out["n"] = r.n;
  out["d"] = r.d;
  out["euler_relation"] = euler_search_json(r.euler);
  Json splits = Json::array();
  for (const auto& s : r.splits) splits.push_back(split_json(s));
  Json witnesses = Json::array();
  for (const auto& s : r.witnesses) witnesses.push_back(split_json(s));
  Json separable = Json::array();
  for (const auto& s : r.separable) separable.push_back(separability_json(s));
  out["splits"] = std::move(splits);
  out["witnesses"] = std::move(witnesses);
  out["separable"] = std::move(separable);
  out["screen_verdict"] = r.verdict;
  out["scope"] = r.label;
  return out;
}

Json ideal_check_json(const IdealCheck& c) {
  Json failures = Json::array();
  for (const auto& f : c.failures) {
    failures.push_back(Json{{"k", f.k}, {"s_power", f.s_power}, {"gamma", f.gamma.exponents()},
                            {"sum", rational_json(f.sum)}});
  }
  return Json{{"member", c.member}, {"failures", std::move(failures)}};
}

Json fs_element_json(const FsElement& e) {
  Json coeffs = Json::array();
  for (const auto& p : e.numerator().coefficients()) coeffs.push_back(to_string(p));
  return Json{{"text", to_string(e)}, {"numerator_by_s_power", std::move(coeffs)}, {"f_power", e.fpow()}};
}

Json euler_witness_json(const EulerWitness& w) {
  return Json{{"n", w.n},
              {"d", w.d},
              {"n_over_d", rational_json(w.n_over_d)},
              {"root_candidate", rational_json(-w.n_over_d)},
              {"s_fs", fs_element_json(w.s_fs)},
              {"euler", fs_element_json(w.euler)},
              {"shifted", fs_element_json(w.shifted)},
              {"verified", w.verified}};
}

}  // namespace bsroots
