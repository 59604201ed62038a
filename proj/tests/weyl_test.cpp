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
#include "bsroots/weyl.hpp"
#include "test_support.hpp"

namespace bsroots {
namespace {

using testing::Op;

AntinormalForm anti(std::initializer_list<std::tuple<MultiIndex, MultiIndex, long>> terms) {
  AntinormalForm out;
  for (const auto& [a, g, c] : terms) out[{a, g}] = c;
  return out;
}

TEST(Normalize, Commutation) {
  EXPECT_EQ(normalize(1, {Generator::d(0), Generator::x(0)}), Op("x1*d1 + 1", 1));
  EXPECT_EQ(normalize(2, {Generator::x(0), Generator::d(1)}), Op("x1*d2", 2));
  Word w{Generator::d(0), Generator::d(0), Generator::x(0), Generator::x(0)};
  EXPECT_EQ(normalize(1, w), Op("x1^2*d1^2 + 4*x1*d1 + 2", 1));
}

TEST(Normalize, ScalarsAndS) {
  Word w{Generator::scalar_of(Rational(1, 2)), Generator::s(), Generator::d(0), Generator::x(0)};
  EXPECT_EQ(normalize(1, w), Op("1/2*s*x1*d1 + 1/2*s", 1));
}

TEST(ToAntinormal, Examples) {
  EXPECT_EQ(to_antinormal(MultiIndex{1}, MultiIndex{1}), anti({{MultiIndex{1}, MultiIndex{1}, 1}, {MultiIndex{0}, MultiIndex{0}, -1}}));
  EXPECT_EQ(to_antinormal(MultiIndex{2}, MultiIndex{2}),
            anti({{MultiIndex{2}, MultiIndex{2}, 1}, {MultiIndex{1}, MultiIndex{1}, -4}, {MultiIndex{0}, MultiIndex{0}, 2}}));
  EXPECT_EQ(to_antinormal(MultiIndex{0}, MultiIndex{3}), anti({{MultiIndex{3}, MultiIndex{0}, 1}}));
}

TEST(GradedParts, Examples) {
  auto parts = graded_parts(Op("x1*d1 + d2", 2));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts.at(0), Op("x1*d1", 2));
  EXPECT_EQ(parts.at(1), Op("d2", 2));
  parts = graded_parts(Op("x1*d1 - x2*d2", 2));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts.at(0), Op("x1*d1 - x2*d2", 2));
  parts = graded_parts(Op("x1^2*d1 + x2", 2));
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts.at(-1), Op("x1^2*d1 + x2", 2));
}

TEST(InIdeal, Examples) {
  EXPECT_TRUE(in_ideal_Dx(Op("x1*d1 - x2*d2", 2)).member);
  IdealCheck c = in_ideal_Dx(Op("x1*d1", 1));
  EXPECT_FALSE(c.member);
  ASSERT_EQ(c.failures.size(), 1u);
  EXPECT_EQ(c.failures[0].k, 0);
  EXPECT_TRUE(c.failures[0].gamma.is_zero());
  EXPECT_EQ(c.failures[0].sum, -1);
  EXPECT_TRUE(in_ideal_Dx(Op("x1^2*d1", 1)).member);
}

TEST(InIdeal, CoefficientwiseInS) {
  EXPECT_TRUE(in_ideal_Dx(Op("s*(x1*d1 - x2*d2)", 2)).member);
  IdealCheck c = in_ideal_Dx(Op("s^2*x1*d1", 1));
  EXPECT_FALSE(c.member);
  ASSERT_FALSE(c.failures.empty());
  EXPECT_EQ(c.failures[0].s_power, 2u);
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma_invariant(Op("x1*d1 - x2*d2", 2)), 0);
  EXPECT_EQ(sigma_invariant(Op("x1*d1", 1)), -1);
  EXPECT_EQ(sigma_invariant(Op("1", 1)), 1);
  EXPECT_EQ(sigma_invariant(Op("x1^2*d1^2", 1)), 2);
  EXPECT_THROW(sigma_invariant(Op("s*x1*d1", 1)), PreconditionError);
}

TEST(WeylProperty, NormalizeMatchesRewriting) {
  oracle::Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    Word w;
    long len = rng.integer(0, 6);
    for (long k = 0; k < len; ++k) {
      std::size_t v = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1));
      switch (rng.integer(0, 3)) {
        case 0: w.push_back(Generator::x(v)); break;
        case 1: w.push_back(Generator::d(v)); break;
        case 2: w.push_back(Generator::s()); break;
        default: w.push_back(Generator::scalar_of(rng.nonzero_rational())); break;
      }
    }
    EXPECT_EQ(normalize(n, w), oracle::rewrite_normal(n, w));
  }
}

TEST(WeylProperty, AntinormalMatchesRewritingAndRoundTrips) {
  oracle::Rng rng(32);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    MultiIndex beta = rng.multi_index(n, 3);
    MultiIndex alpha = rng.multi_index(n, 3);
    EXPECT_EQ(to_antinormal(beta, alpha), oracle::rewrite_antinormal(beta, alpha));
    WeylOperator p = rng.weyl_operator(n, 4, 3);
    EXPECT_EQ(from_antinormal(n, to_antinormal(p)), p);
  }
}

TEST(WeylProperty, ProductIsAssociativeAndDistributive) {
  oracle::Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    WeylOperator a = rng.weyl_operator(n, 3, 2);
    WeylOperator b = rng.weyl_operator(n, 3, 2);
    WeylOperator c = rng.weyl_operator(n, 3, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(WeylProperty, CommutatorRelation) {
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      WeylOperator comm = WeylOperator::d(3, i) * WeylOperator::x(3, j) - WeylOperator::x(3, j) * WeylOperator::d(3, i);
      EXPECT_EQ(comm, WeylOperator::constant(3, i == j ? 1 : 0));
    }
  }
}

TEST(WeylProperty, GradedPartsSumBack) {
  oracle::Rng rng(34);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    WeylOperator p = rng.weyl_operator(n, 6, 3);
    WeylOperator sum(n);
    for (const auto& [k, part] : graded_parts(p)) {
      for (const auto& [m, c] : part.terms()) EXPECT_EQ(m.weight(), k);
      sum += part;
    }
    EXPECT_EQ(sum, p);
  }
}

TEST(WeylProperty, IdealCriteriaMatchAntinormalInspection) {
  oracle::Rng rng(35);
  int members = 0;
  for (int i = 0; i < 200; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    WeylOperator p = rng.graded_operator(n, 3, 2, static_cast<int>(rng.integer(-1, 2)));
    if (rng.coin()) p.add_term(WeylMonomial{MultiIndex(n), MultiIndex(n), 0}, -sigma_invariant(p));
    const bool member = in_ideal_Dx(p).member;
    members += member;
    EXPECT_EQ(member, oracle::antinormal_in_ideal(p)) << to_string(p);
    EXPECT_EQ(sigma_invariant(p), oracle::antinormal_constant(p)) << to_string(p);
  }
  EXPECT_GT(members, 0);
  EXPECT_LT(members, 200);
}

TEST(WeylProperty, LeftMultiplesOfXAreMembers) {
  oracle::Rng rng(36);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    WeylOperator q = rng.weyl_operator(n, 3, 2);
    std::size_t v = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1));
    WeylOperator p = q * WeylOperator::x(n, v);
    EXPECT_TRUE(in_ideal_Dx(p).member) << to_string(p);
    EXPECT_EQ(sigma_invariant(p), 0);
  }
}

}  // namespace
}  // namespace bsroots
