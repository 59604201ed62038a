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

#include "bsroots/oracles.hpp"
#include "bsroots/rational.hpp"

namespace bsroots {
namespace {

TEST(Rational, MakeNormalizes) {
  EXPECT_EQ(make_rational(6, -4), make_rational(-3, 2));
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_THROW(make_rational(1, 0), std::domain_error);
}

TEST(Rational, ParseLiterals) {
  EXPECT_EQ(parse_rational("3/6"), make_rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), make_rational(-7));
  EXPECT_EQ(parse_rational(" 12/4 "), make_rational(3));
  EXPECT_THROW(parse_rational("1/0"), std::exception);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(Rational, FloorAndIntegrality) {
  EXPECT_EQ(floor(make_rational(7, 2)), 3);
  EXPECT_EQ(floor(make_rational(-7, 2)), -4);
  EXPECT_EQ(floor(make_rational(-4)), -4);
  EXPECT_TRUE(is_integer(make_rational(8, 4)));
  EXPECT_FALSE(is_integer(make_rational(8, 3)));
}

TEST(Rational, Factorial) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(factorial(20), Integer("2432902008176640000"));
}

TEST(RationalProperty, FloorBracketsValue) {
  oracle::Rng rng(1);
  for (int i = 0; i < 500; ++i) {
    Rational q = rng.rational(50, 9);
    Rational f(floor(q));
    EXPECT_LE(f, q);
    EXPECT_LT(q, f + 1);
    EXPECT_EQ(is_integer(q), f == q);
  }
}

TEST(RationalProperty, TextRoundTrip) {
  oracle::Rng rng(2);
  for (int i = 0; i < 500; ++i) {
    Rational q = rng.rational(1000, 97);
    EXPECT_EQ(parse_rational(to_string(q)), q);
  }
}

}  // namespace
}  // namespace bsroots
