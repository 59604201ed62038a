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
#include "bsroots/polynomial.hpp"
#include "test_support.hpp"

namespace bsroots {
namespace {

using testing::P;

const char* const kExample = "x1*x2*x3 + x1^2*x4 + x2^2*x4";

TEST(MultiIndex, Arithmetic) {
  MultiIndex a{2, 0, 1};
  MultiIndex b{1, 0, 1};
  EXPECT_EQ(a.total(), 3u);
  EXPECT_EQ(a.factorial(), 2);
  EXPECT_TRUE(b.divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_EQ(a - b, (MultiIndex{1, 0, 0}));
  EXPECT_EQ(a + b, (MultiIndex{3, 0, 2}));
  EXPECT_TRUE(MultiIndex(3).is_zero());
}

TEST(PolyArith, DifferenceOfSquares) {
  EXPECT_EQ(poly_arith(P("x1+x2", 2), P("x1-x2", 2), PolyOp::kMul), P("x1^2-x2^2", 2));
}

TEST(PolyArith, AddZero) {
  Polynomial f = P(kExample, 4);
  EXPECT_EQ(poly_arith(f, Polynomial(4), PolyOp::kAdd), f);
  EXPECT_TRUE(poly_arith(f, f, PolyOp::kSub).is_zero());
}

TEST(PolyArith, HandExpansion) {
  EXPECT_EQ(poly_arith(P("x1*x2*x3 + x1^2*x4", 4), P("x2", 4), PolyOp::kMul), P("x1*x2^2*x3 + x1^2*x2*x4", 4));
}

TEST(PolyArith, DimensionMismatchThrows) {
  EXPECT_THROW(poly_arith(P("x1", 1), P("x1", 2), PolyOp::kAdd), PreconditionError);
}

TEST(DividesExact, Examples) {
  EXPECT_EQ(divides_exact(P("x1*x2", 2), P("x1^2*x2^2", 2)), P("x1*x2", 2));
  EXPECT_EQ(divides_exact(P("x1+x2", 2), P("x1^2-x2^2", 2)), P("x1-x2", 2));
  Polynomial f = P(kExample, 4);
  EXPECT_EQ(divides_exact(f, f * f), f);
  EXPECT_EQ(divides_exact(P("x1+x2", 2), P("x1^2+x2^2", 2)), std::nullopt);
}

TEST(IsHomogeneous, Examples) {
  auto d = is_homogeneous(P("x1*x2*x3 + x1^2*x4", 4));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->value(), 3u);
  EXPECT_FALSE(is_homogeneous(P("x1+x2^2", 2)).has_value());
  auto zero = is_homogeneous(Polynomial(2));
  ASSERT_TRUE(zero.has_value());
  EXPECT_TRUE(zero->is_minus_infinity());
  EXPECT_THROW(zero->value(), std::logic_error);
}

TEST(Polynomial, DerivativeAndEvaluate) {
  Polynomial f = P(kExample, 4);
  EXPECT_EQ(f.derivative(0), P("x2*x3 + 2*x1*x4", 4));
  EXPECT_EQ(f.evaluate({Rational(1), Rational(2), Rational(3), Rational(4)}), Rational(6 + 4 + 16));
  EXPECT_EQ(to_string(P("x1^2 - 1/2*x2", 2)), "x1^2 - 1/2*x2");
}

TEST(SPolynomial, ShiftAndProduct) {
  // (s + x1)(s - x1) = s^2 - x1^2, then s -> s + 1.
  SPolynomial a = SPolynomial::s_power(1, 1) + SPolynomial(P("x1", 1));
  SPolynomial b = SPolynomial::s_power(1, 1) - SPolynomial(P("x1", 1));
  SPolynomial prod = a * b;
  EXPECT_EQ(prod, SPolynomial::s_power(1, 2) - SPolynomial(P("x1^2", 1)));
  SPolynomial shifted = prod.shift_s(1);
  EXPECT_EQ(shifted, SPolynomial::s_power(1, 2) + SPolynomial::s_power(1, 1, 2) +
                         SPolynomial(P("1 - x1^2", 1)));
}

TEST(PolynomialProperty, ProductMatchesNaiveOracle) {
  oracle::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    Polynomial a = rng.polynomial(n, static_cast<std::size_t>(rng.integer(0, 5)), 3);
    Polynomial b = rng.polynomial(n, static_cast<std::size_t>(rng.integer(0, 5)), 3);
    EXPECT_EQ(a * b, oracle::naive_product(a, b));
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(PolynomialProperty, ExactDivisionInvertsProduct) {
  oracle::Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    Polynomial a = rng.polynomial(n, static_cast<std::size_t>(rng.integer(1, 4)), 3);
    Polynomial b = rng.polynomial(n, static_cast<std::size_t>(rng.integer(1, 4)), 3);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ(divides_exact(a, a * b), b);
  }
}

TEST(PolynomialProperty, LeibnizAndEvaluationHomomorphism) {
  oracle::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    Polynomial a = rng.polynomial(n, 4, 3);
    Polynomial b = rng.polynomial(n, 4, 3);
    std::size_t v = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1));
    EXPECT_EQ((a * b).derivative(v), a.derivative(v) * b + a * b.derivative(v));
    std::vector<Rational> pt;
    for (std::size_t k = 0; k < n; ++k) pt.push_back(rng.rational());
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
    EXPECT_EQ((a + b).evaluate(pt), a.evaluate(pt) + b.evaluate(pt));
  }
}

TEST(PolynomialProperty, TextRoundTrip) {
  oracle::Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    Polynomial a = rng.polynomial(n, 5, 4);
    EXPECT_EQ(parse_polynomial(to_string(a), n), a);
  }
}

}  // namespace
}  // namespace bsroots
