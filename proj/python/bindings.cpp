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


// Python bindings. Reports cross the boundary as JSON text; the package
// wrapper in bsroots/__init__.py decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "bsroots/cli.hpp"
#include "bsroots/fs.hpp"
#include "bsroots/homogeneous.hpp"
#include "bsroots/io.hpp"
#include "bsroots/lattice.hpp"
#include "bsroots/parse.hpp"
#include "bsroots/selftest.hpp"
#include "bsroots/weyl.hpp"

namespace py = pybind11;

namespace {

using bsroots::Json;

bsroots::Arrangement arrangement_of(const std::string& json_text) {
  try {
    return bsroots::arrangement_from_json(Json::parse(json_text));
  } catch (const nlohmann::json::exception& e) {
    throw bsroots::ParseError(e.what());
  }
}

std::string analyze_arrangement(const std::string& arrangement, std::size_t budget) {
  return bsroots::analysis_json(bsroots::analyze(arrangement_of(arrangement), budget)).dump();
}

std::string lattice(const std::string& arrangement, std::optional<std::vector<std::string>> lambda,
                    std::optional<std::vector<std::size_t>> order, std::size_t budget) {
  std::optional<bsroots::RationalVector> weights;
  if (lambda) {
    weights.emplace();
    for (const auto& q : *lambda) weights->push_back(bsroots::parse_rational(q));
  }
  bsroots::HyperplaneOrder ord;
  if (order) {
    for (std::size_t j : *order) {
      if (j == 0) throw bsroots::PreconditionError("order indices are 1-based");
      ord.push_back(j - 1);
    }
  }
  return bsroots::lattice_json(bsroots::lattice_report(arrangement_of(arrangement), weights, ord, budget)).dump();
}

std::string homog_screen(const std::string& poly, std::optional<std::size_t> n) {
  return bsroots::screen_json(bsroots::conjecture61_screen(bsroots::parse_polynomial(poly, n))).dump();
}

std::string euler_witness(const std::string& poly, std::optional<std::size_t> n) {
  return bsroots::euler_witness_json(bsroots::euler_root_witness(bsroots::parse_polynomial(poly, n))).dump();
}

std::string ideal_check(const std::string& op, std::optional<std::size_t> n) {
  const bsroots::WeylOperator p = bsroots::parse_operator(op, n);
  Json out = bsroots::ideal_check_json(bsroots::in_ideal_Dx(p));
  out["sigma"] = p.has_s() ? Json(nullptr) : bsroots::rational_json(bsroots::sigma_invariant(p));
  return out.dump();
}

std::string normalize(const std::string& op, std::optional<std::size_t> n) {
  return bsroots::to_string(bsroots::parse_operator(op, n));
}

bool bs_check(const std::string& f, const std::string& op, const std::string& b) {
  const std::size_t n = std::max(bsroots::max_variable_index(f), bsroots::max_variable_index(op));
  return bsroots::bs_pair_check({bsroots::parse_operator(op, n), bsroots::parse_s_polynomial(b)},
                                bsroots::parse_polynomial(f, n))
      .pass;
}

std::tuple<int, std::string, std::string> run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = bsroots::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::tuple<int, std::string, bool, std::string>> selftest(std::uint64_t seed, bool acceptance_only) {
  std::vector<std::tuple<int, std::string, bool, std::string>> out;
  auto add = [&](const std::vector<bsroots::NamedCheck>& checks) {
    for (const auto& c : checks) {
      const bsroots::CheckResult r = bsroots::run_check(c, seed);
      out.emplace_back(r.id, r.name, r.pass, r.detail);
    }
  };
  add(bsroots::acceptance_criteria());
  if (!acceptance_only) add(bsroots::oracle_checks());
  return out;
}

}  // namespace

PYBIND11_MODULE(_bsroots, m) {
  m.doc() = "Exact arrangement and Weyl-algebra computations behind -n/d root checks";

  py::register_exception<bsroots::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<bsroots::PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.attr("SCHEMA_VERSION") = bsroots::kSchemaVersion;
  m.attr("DEFAULT_SEED") = bsroots::kDefaultSeed;
  m.attr("SCREEN_LABEL") = bsroots::kScreenLabel;

  m.def("analyze_arrangement", &analyze_arrangement, py::arg("arrangement"),
        py::arg("budget") = bsroots::kDefaultFlatBudget);
  m.def("lattice", &lattice, py::arg("arrangement"), py::arg("weights") = py::none(), py::arg("order") = py::none(),
        py::arg("budget") = bsroots::kDefaultFlatBudget);
  m.def("homog_screen", &homog_screen, py::arg("poly"), py::arg("n") = py::none());
  m.def("euler_witness", &euler_witness, py::arg("poly"), py::arg("n") = py::none());
  m.def("ideal_check", &ideal_check, py::arg("op"), py::arg("n") = py::none());
  m.def("normalize", &normalize, py::arg("op"), py::arg("n") = py::none());
  m.def("bs_check", &bs_check, py::arg("f"), py::arg("op"), py::arg("b"));
  m.def("run", &run_cli, py::arg("args"));
  m.def("selftest", &selftest, py::arg("seed") = bsroots::kDefaultSeed, py::arg("acceptance_only") = false);
}
