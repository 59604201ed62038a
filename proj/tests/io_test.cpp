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


#include <gtest/gtest.h>

#include "bsroots/io.hpp"
#include "bsroots/oracles.hpp"
#include "test_support.hpp"

namespace bsroots {
namespace {

using testing::P;

std::string data(const std::string& name) { return std::string(BSROOTS_DATA_DIR) + "/" + name; }

TEST(Io, Rationals) {
  EXPECT_EQ(rational_from_json(Json(3)), 3);
  EXPECT_EQ(rational_from_json(Json("-4/6")), Rational(-2, 3));
  EXPECT_EQ(rational_json(Rational(-2, 3)), Json("-2/3"));
  EXPECT_THROW(rational_from_json(Json(0.5)), ParseError);
  EXPECT_THROW(rational_from_json(Json("half")), ParseError);
  EXPECT_THROW(rational_from_json(Json(nullptr)), ParseError);
}

TEST(Io, PolynomialFormatsAgree) {
  Polynomial text = polynomial_from_json(read_json_file(data("example6.json")));
  Polynomial terms = polynomial_from_json(read_json_file(data("example6_terms.json")));
  EXPECT_EQ(text, terms);
  EXPECT_EQ(text, P("x1*x2*x3 + x1^2*x4 + x2^2*x4", 4));
  Json bare = Json::array({Json{{"coeff", "1/2"}, {"exps", {2, 0}}}});
  EXPECT_EQ(polynomial_from_json(bare), P("1/2*x1^2", 2));
}

TEST(Io, PolynomialErrors) {
  EXPECT_THROW(polynomial_from_json(Json::array()), ParseError);
  EXPECT_THROW(polynomial_from_json(Json{{"n", 2}}), ParseError);
  EXPECT_THROW(polynomial_from_json(Json{{"n", -1}, {"poly", "x1"}}), ParseError);
  Json bad = Json{{"n", 2}, {"terms", Json::array({Json{{"coeff", 1}, {"exps", {1}}}})}};
  EXPECT_THROW(polynomial_from_json(bad), ParseError);
  EXPECT_THROW(polynomial_from_json(Json{{"poly", 7}}), ParseError);
}

TEST(Io, ArrangementReading) {
  Arrangement a = arrangement_from_json(read_json_file(data("perturbation.json")));
  EXPECT_EQ(a.size(), 9u);
  EXPECT_EQ(a.mults(), std::vector<unsigned>(9, 1));
  EXPECT_THROW(arrangement_from_json(Json{{"n", 2}}), ParseError);
  EXPECT_THROW(arrangement_from_json(Json{{"n", 2}, {"forms", {{1, 0}}}, {"mults", {-1}}}), ParseError);
  EXPECT_THROW(arrangement_from_json(Json{{"n", 2}, {"forms", {{1, 0}, {2, 0}}}}), PreconditionError);
}

TEST(Io, FileErrors) {
  EXPECT_THROW(read_json_file(data("does_not_exist.json")), ParseError);
  EXPECT_THROW(read_json_file(BSROOTS_DATA_DIR), ParseError);
}

TEST(Io, AnalysisReportFields) {
  Json j = analysis_json(analyze(testing::braid3()));
  for (const char* key : {"n", "d", "essential", "indecomposable", "dense_edges", "condition_R", "epsilon",
                          "epsilon_perturbed", "mu", "N", "residues", "theorem_applies", "root", "verdict"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["dense_edges"].size(), 3u);
  EXPECT_EQ(j["dense_edges"][0]["support"], Json::array({1}));
  EXPECT_EQ(j["dense_edges"][0]["r_value"], "1/3");
  EXPECT_EQ(j["condition_R"]["pass"], true);
  EXPECT_EQ(j["epsilon"], Json::array({"2/3", "2/3", "2/3"}));
  EXPECT_EQ(j["N"], "3");
  EXPECT_EQ(j["residues"][0]["residue"], "1/3");
  EXPECT_EQ(j["root"], "-2/3");
}

TEST(Io, DecomposableReportHasNulls) {
  Json j = analysis_json(analyze(testing::xy()));
  EXPECT_EQ(j["indecomposable"], false);
  EXPECT_TRUE(j["epsilon"].is_null());
  EXPECT_TRUE(j["mu"].is_null());
  EXPECT_TRUE(j["root"].is_null());
}

TEST(Io, LatticeAndScreenReports) {
  Json l = lattice_json(lattice_report(testing::braid3()));
  EXPECT_EQ(l["char_poly"]["text"], "t^2 - 3*t + 2");
  EXPECT_EQ(l["chi_projective"], "-1");
  EXPECT_EQ(l["predicted_top_betti"], "1");
  EXPECT_EQ(l["broken_circuits"], Json::array({Json::array({2, 3})}));
  Json s = screen_json(conjecture61_screen(P("x1*x2*x3 + x1^2*x4 + x2^2*x4", 4)));
  EXPECT_EQ(s["witnesses"][0]["S"], Json::array({1, 2}));
  EXPECT_EQ(s["witnesses"][0]["k"], 2);
  EXPECT_EQ(s["scope"], kScreenLabel);
}

TEST(IoProperty, PolynomialRoundTrip) {
  oracle::Rng rng(81);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    Polynomial p = rng.polynomial(n, 5, 4);
    Json j = polynomial_json(p);
    EXPECT_EQ(polynomial_from_json(Json::parse(j.dump())), p);
  }
}

TEST(IoProperty, ArrangementRoundTrip) {
  oracle::Rng rng(82);
  for (int i = 0; i < 50; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
    Arrangement a = rng.arrangement(n, static_cast<std::size_t>(rng.integer(1, 6)), 3, 3);
    Arrangement b = arrangement_from_json(Json::parse(arrangement_json(a).dump()));
    EXPECT_EQ(b.forms(), a.forms());
    EXPECT_EQ(b.mults(), a.mults());
  }
}

}  // namespace
}  // namespace bsroots
