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

#include "bsroots/parse.hpp"
#include "test_support.hpp"

namespace bsroots {
namespace {

TEST(Parse, MaxVariableIndex) {
  EXPECT_EQ(max_variable_index("x1*d12 + s"), 12u);
  EXPECT_EQ(max_variable_index("3/4"), 0u);
}

TEST(Parse, PolynomialDimension) {
  Polynomial f = parse_polynomial("x1*x2*x3 + x1^2*x4 + x2^2*x4");
  EXPECT_EQ(f.dim(), 4u);
  EXPECT_EQ(f.term_count(), 3u);
  EXPECT_EQ(parse_polynomial("x1", 3).dim(), 3u);
  EXPECT_THROW(parse_polynomial("x4", 3), ParseError);
}

TEST(Parse, ArithmeticForms) {
  EXPECT_EQ(parse_polynomial("(x1+x2)^2 - 2*x1*x2", 2), parse_polynomial("x1^2 + x2^2", 2));
  EXPECT_EQ(parse_polynomial("(x1 + 1)/2", 1), parse_polynomial("1/2*x1 + 1/2", 1));
  EXPECT_EQ(parse_polynomial("-x1 - -x1", 1), Polynomial(1));
}

TEST(Parse, OperatorsMultiplyInWeylAlgebra) {
  WeylOperator p = parse_operator("d1*x1");
  WeylOperator q = parse_operator("x1*d1 + 1");
  EXPECT_EQ(p, q);
  EXPECT_TRUE(parse_operator("s*x1", 1).has_s());
  EXPECT_TRUE(parse_operator("d2", 2).has_d());
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_polynomial("x1 +", 1), ParseError);
  EXPECT_THROW(parse_polynomial("(x1", 1), ParseError);
  EXPECT_THROW(parse_polynomial("x1)", 1), ParseError);
  EXPECT_THROW(parse_polynomial("x0", 1), ParseError);
  EXPECT_THROW(parse_polynomial("y1", 1), ParseError);
  EXPECT_THROW(parse_polynomial("d1", 1), ParseError);
  EXPECT_THROW(parse_polynomial("s*x1", 1), ParseError);
  EXPECT_THROW(parse_polynomial("x1/x2", 2), ParseError);
  EXPECT_THROW(parse_polynomial("x1/0", 1), ParseError);
  EXPECT_THROW(parse_polynomial("x1^x1", 1), ParseError);
  EXPECT_THROW(parse_polynomial("x1^-1", 1), ParseError);
  EXPECT_THROW(parse_s_polynomial("s + x1"), ParseError);
}

TEST(Parse, SPolynomial) {
  SUnivariate b = parse_s_polynomial("(s+1)^2");
  EXPECT_EQ(b.coefficients(), (std::vector<Rational>{1, 2, 1}));
  EXPECT_EQ(parse_s_polynomial("0"), SUnivariate());
}

}  // namespace
}  // namespace bsroots
