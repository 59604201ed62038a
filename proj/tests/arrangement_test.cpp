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

#include <algorithm>
#include <numeric>

#include "bsroots/arrangement.hpp"
#include "bsroots/oracles.hpp"
#include "test_support.hpp"

namespace bsroots {
namespace {

using testing::A;
using testing::braid3;
using testing::V;
using testing::xy;
using testing::xyz_sum;

// Nine forms in three variables whose constructed weights sum to 1 on the
// dense edge {1, 4, 7}, so the perturbation step has to move them.
Arrangement needs_perturbation() {
  return A(3, {{-1, -2, 2}, {-2, -1, -1}, {-1, 1, -2}, {1, 1, -1}, {0, 0, -1},
               {0, 2, 1}, {1, -1, 1}, {-1, 2, 0}, {-2, 2, 2}});
}

Rational sum_over(const RationalVector& eps, const Support& s) {
  Rational out = 0;
  for (std::size_t j : s) out += eps[j];
  return out;
}

Support all_of(const Arrangement& a) {
  Support s(a.size());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

TEST(Arrangement, Validation) {
  EXPECT_THROW(A(2, {}), PreconditionError);
  EXPECT_THROW(A(2, {{1, 0}, {0, 0}}), PreconditionError);
  EXPECT_THROW(A(2, {{1, 0}, {2, 0}}), PreconditionError);
  EXPECT_THROW(A(2, {{1, 0, 0}}), PreconditionError);
  EXPECT_THROW(A(2, {{1, 0}}, {0}), PreconditionError);
  EXPECT_THROW(Arrangement(0, {}, {}), PreconditionError);
}

TEST(Arrangement, DegreeAndPolynomial) {
  Arrangement a = A(2, {{1, 0}, {0, 1}, {1, 1}}, {4, 1, 1});
  EXPECT_EQ(a.degree(), 6u);
  EXPECT_EQ(a.n_over_d(), Rational(1, 3));
  EXPECT_EQ(a.defining_polynomial(), testing::P("x1^4*x2*(x1+x2)", 2));
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(braid3(), {0, 1, 2}), 2u);
  EXPECT_EQ(rank(braid3(), {}), 0u);
  EXPECT_EQ(rank(xyz_sum(), {0, 3}), 2u);
}

TEST(Closure, Examples) {
  Flat top = closure(braid3(), {0, 1});
  EXPECT_EQ(top.support, (Support{0, 1, 2}));
  EXPECT_EQ(top.dim, 2u);
  Flat line = closure(braid3(), {0});
  EXPECT_EQ(line.support, (Support{0}));
  EXPECT_EQ(line.dim, 1u);
  Flat plane = closure(xyz_sum(), {0, 1});
  EXPECT_EQ(plane.support, (Support{0, 1}));
  EXPECT_EQ(plane.dim, 2u);
}

TEST(EnumerateFlats, Examples) {
  EXPECT_EQ(enumerate_flats(xy()).size(), 2u);
  std::vector<Flat> braid = enumerate_flats(braid3());
  ASSERT_EQ(braid.size(), 3u);
  for (const Flat& f : braid) EXPECT_EQ(f.dim, 1u);
  std::vector<Flat> four = enumerate_flats(xyz_sum());
  EXPECT_EQ(std::count_if(four.begin(), four.end(), [](const Flat& f) { return f.dim == 1; }), 4);
  EXPECT_EQ(std::count_if(four.begin(), four.end(), [](const Flat& f) { return f.dim == 2; }), 6);
  EXPECT_EQ(four.size(), 10u);
}

TEST(EnumerateFlats, BudgetIsEnforced) {
  EXPECT_THROW(enumerate_flats(xyz_sum(), 3), PreconditionError);
  EXPECT_NO_THROW(enumerate_flats(xyz_sum(), 4));
}

TEST(Indecomposable, Examples) {
  EXPECT_FALSE(is_indecomposable(xy()));
  EXPECT_TRUE(is_indecomposable(braid3()));
  EXPECT_TRUE(is_indecomposable(xyz_sum()));
  EXPECT_FALSE(is_indecomposable(xyz_sum(), {0, 1}));
  EXPECT_TRUE(is_indecomposable(xyz_sum(), {0}));
  // Essential but a direct sum: {x, y, x+y} and {z}.
  EXPECT_FALSE(is_indecomposable(A(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}})));
  // Connected but not essential.
  EXPECT_FALSE(is_indecomposable(A(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}})));
}

TEST(MatroidComponents, SplitsDirectSums) {
  Arrangement a = A(4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}});
  std::vector<Support> comps = matroid_components(a, all_of(a));
  std::sort(comps.begin(), comps.end());
  EXPECT_EQ(comps, (std::vector<Support>{{0, 1, 2}, {3, 4, 5}}));
}

TEST(DenseEdges, Examples) {
  std::vector<DenseEdge> braid = dense_edges(braid3());
  ASSERT_EQ(braid.size(), 3u);
  for (const DenseEdge& e : braid) {
    EXPECT_EQ(e.flat.dim, 1u);
    EXPECT_EQ(e.r_value, Rational(1, 3));
  }
  std::vector<DenseEdge> four = dense_edges(xyz_sum());
  ASSERT_EQ(four.size(), 4u);
  for (const DenseEdge& e : four) EXPECT_EQ(e.flat.dim, 1u);
  EXPECT_EQ(dense_edges(A(2, {{1, 0}, {0, 1}, {1, 2}})).size(), 3u);
  // {x, y, x+y, z, x+y+z}: two dense planes.
  std::vector<DenseEdge> five = dense_edges(A(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
  EXPECT_EQ(std::count_if(five.begin(), five.end(), [](const DenseEdge& e) { return e.flat.dim == 2; }), 2);
}

TEST(ConditionR, Examples) {
  ConditionR c = condition_R(braid3());
  EXPECT_TRUE(c.pass);
  EXPECT_TRUE(c.violators.empty());
  c = condition_R(A(2, {{1, 0}, {0, 1}, {1, 1}}, {2, 2, 2}));
  EXPECT_TRUE(c.pass);
  for (const DenseEdge& e : c.edges) EXPECT_EQ(e.r_value, Rational(1, 3));
  c = condition_R(A(2, {{1, 0}, {0, 1}, {1, 1}}, {4, 1, 1}));
  EXPECT_TRUE(c.pass);
  ASSERT_EQ(c.edges.size(), 3u);
  EXPECT_EQ(c.edges[0].flat.support, (Support{0}));
  EXPECT_EQ(c.edges[0].r_value, Rational(-1, 3));
  EXPECT_EQ(c.edges[1].r_value, Rational(2, 3));
}

TEST(ConditionR, Violation) {
  // The plane {x, y, x+y} has r = 2 - (3/9) * 3 = 1.
  Arrangement a = A(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 1, 1}}, {1, 1, 1, 3, 3});
  ConditionR c = condition_R(a);
  EXPECT_FALSE(c.pass);
  ASSERT_EQ(c.violators.size(), 1u);
  EXPECT_EQ(c.violators[0].flat.support, (Support{0, 1, 2}));
  EXPECT_EQ(c.violators[0].r_value, 1);
  AnalysisReport r = analyze(a);
  EXPECT_TRUE(r.indecomposable);
  EXPECT_FALSE(r.theorem_applies);
  EXPECT_FALSE(r.root.has_value());
  EXPECT_NE(r.verdict.find("condition (R) fails"), std::string::npos);
}

TEST(Epsilon, Examples) {
  EXPECT_EQ(epsilon_construct(braid3()).eps, V({"2/3", "2/3", "2/3"}));
  EXPECT_EQ(epsilon_construct(xyz_sum()).eps, V({"3/4", "3/4", "3/4", "3/4"}));
  EXPECT_THROW(epsilon_construct(xy()), PreconditionError);
  EXPECT_EQ(epsilon_construct(A(1, {{1}})).eps, V({"1"}));
}

TEST(Epsilon, PerturbKeepsNonintegralWeights) {
  EpsilonWeights e = epsilon_construct(braid3());
  EXPECT_FALSE(e.perturbed);
  EpsilonWeights p = epsilon_perturb(braid3(), e);
  EXPECT_TRUE(p.perturbed);
  EXPECT_EQ(p.eps, e.eps);
  // Sums on the planes are 15/8, so nothing moves here either.
  Arrangement five = A(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}});
  EpsilonWeights f = epsilon_construct(five);
  EXPECT_EQ(f.eps, V({"3/4", "3/4", "3/4", "3/8", "3/8"}));
  EXPECT_EQ(epsilon_perturb(five, f).eps, f.eps);
}

TEST(Epsilon, PerturbMovesIntegralSums) {
  Arrangement a = needs_perturbation();
  EpsilonWeights e = epsilon_construct(a);
  EXPECT_EQ(e.eps, V({"3/4", "3/4", "3/4", "1/8", "1/8", "1/8", "1/8", "1/8", "1/8"}));
  EXPECT_TRUE(epsilon_valid(a, e.eps, false));
  EXPECT_FALSE(epsilon_valid(a, e.eps, true));
  EXPECT_EQ(closure(a, {0, 3}).support, (Support{0, 3, 6}));
  EXPECT_EQ(sum_over(e.eps, {0, 3, 6}), 1);

  EpsilonWeights p = epsilon_perturb(a, e);
  EXPECT_NE(p.eps, e.eps);
  EXPECT_TRUE(epsilon_valid(a, p.eps, true));
  EXPECT_EQ(sum_over(p.eps, all_of(a)), 3);
  EXPECT_EQ(p.eps, V({"121/216", "251/432", "269/432", "17/432", "53/432", "71/432", "107/432", "125/432",
                      "161/432"}));
  MuAssignment mu = mu_and_residues(a, p);
  EXPECT_EQ(mu.N, 432);
}

TEST(Epsilon, PerturbRejectsInvalidInput) {
  EXPECT_THROW(epsilon_perturb(braid3(), {V({"1", "1", "0"}), false}), PreconditionError);
}

TEST(MuAndResidues, Examples) {
  MuAssignment m = mu_and_residues(braid3(), epsilon_perturb(braid3(), epsilon_construct(braid3())));
  EXPECT_EQ(m.N, 3);
  ASSERT_EQ(m.entries.size(), 3u);
  for (const MuEntry& e : m.entries) {
    EXPECT_EQ(e.mu, 1u);
    EXPECT_EQ(e.residue, Rational(1, 3));
  }
  m = mu_and_residues(xyz_sum(), epsilon_perturb(xyz_sum(), epsilon_construct(xyz_sum())));
  EXPECT_EQ(m.N, 4);
  for (const MuEntry& e : m.entries) {
    EXPECT_EQ(e.mu, 1u);
    EXPECT_EQ(e.residue, Rational(1, 4));
  }
}

TEST(Analyze, Examples) {
  AnalysisReport r = analyze(braid3());
  EXPECT_TRUE(r.theorem_applies);
  ASSERT_TRUE(r.root.has_value());
  EXPECT_EQ(*r.root, Rational(-2, 3));
  r = analyze(xyz_sum());
  EXPECT_TRUE(r.theorem_applies);
  EXPECT_EQ(*r.root, Rational(-3, 4));
  r = analyze(xy());
  EXPECT_FALSE(r.indecomposable);
  EXPECT_FALSE(r.theorem_applies);
  EXPECT_FALSE(r.epsilon.has_value());
  EXPECT_NE(r.verdict.find("decomposable"), std::string::npos);
  r = analyze(A(3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
  EXPECT_FALSE(r.essential);
  EXPECT_FALSE(r.theorem_applies);
}

// Closure computed from rank alone.
Support closure_by_rank(const Arrangement& a, const Support& s) {
  const std::size_t r = rank(a, s);
  Support out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    Support t = s;
    t.push_back(j);
    if (rank(a, t) == r) out.push_back(j);
  }
  return out;
}

TEST(ArrangementProperty, FlatsMatchSubsetEnumeration) {
  oracle::Rng rng(51);
  for (int i = 0; i < 30; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
    std::size_t r = static_cast<std::size_t>(rng.integer(1, 7));
    Arrangement a = rng.arrangement(n, r, 3);
    std::vector<Flat> flats = enumerate_flats(a);
    EXPECT_EQ(flats, oracle::subset_flats(a));
    for (const Flat& f : flats) {
      EXPECT_EQ(closure_by_rank(a, f.support), f.support);
      EXPECT_EQ(rank(a, f.support), f.dim);
    }
  }
}

TEST(ArrangementProperty, ComponentsMatchBipartitionOracle) {
  oracle::Rng rng(52);
  for (int i = 0; i < 20; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
    std::size_t r = static_cast<std::size_t>(rng.integer(2, 8));
    Arrangement a = rng.arrangement(n, r, 2);
    for (unsigned mask = 1; mask < (1u << r); ++mask) {
      Support s;
      for (std::size_t j = 0; j < r; ++j) {
        if (mask >> j & 1u) s.push_back(j);
      }
      EXPECT_EQ(is_indecomposable(a, s), oracle::bipartition_indecomposable(a, s));
      std::size_t total = 0;
      for (const Support& c : matroid_components(a, s)) total += rank(a, c);
      EXPECT_EQ(total, rank(a, s));
    }
  }
}

TEST(ArrangementProperty, WeightsAndResiduesOnRandomArrangements) {
  oracle::Rng rng(53);
  int analysed = 0;
  for (int i = 0; i < 60; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
    std::size_t r = static_cast<std::size_t>(rng.integer(static_cast<long>(n) + 1, static_cast<long>(n) + 4));
    Arrangement a = rng.arrangement(n, r, 2, 3);
    if (!is_indecomposable(a)) continue;
    ++analysed;
    EpsilonWeights e = epsilon_construct(a);
    EXPECT_EQ(sum_over(e.eps, all_of(a)), static_cast<long>(n));
    for (const Flat& w : enumerate_flats(a)) EXPECT_LT(sum_over(e.eps, w.support), static_cast<long>(w.dim));
    EpsilonWeights p = epsilon_perturb(a, e);
    EXPECT_TRUE(epsilon_valid(a, p.eps, true));
    MuAssignment mu = mu_and_residues(a, p);
    for (const MuEntry& m : mu.entries) {
      EXPECT_GE(m.mu, 1u);
      EXPECT_LE(m.mu, m.edge.flat.dim);
      EXPECT_EQ(Integer(m.mu), 1 + floor(m.eps_sum));
      EXPECT_EQ(m.residue, Rational(m.mu) - a.n_over_d() * m.edge.sum_mult);
      EXPECT_EQ(m.residue - m.mu + m.edge.flat.dim, m.edge.r_value);
    }
    AnalysisReport rep = analyze(a);
    EXPECT_EQ(rep.theorem_applies, rep.condition.pass);
  }
  EXPECT_GT(analysed, 10);
}

TEST(ArrangementProperty, InvariantUnderRescalingAndBasisChange) {
  oracle::Rng rng(54);
  for (int i = 0; i < 20; ++i) {
    Arrangement a = rng.arrangement(3, 5, 2);
    // Shear x1 -> x1 + x2 on the dual side and scale every form by a nonzero rational.
    std::vector<RationalVector> forms;
    for (const RationalVector& f : a.forms()) {
      Rational c = rng.nonzero_rational();
      forms.push_back({c * f[0], c * (f[0] + f[1]), c * f[2]});
    }
    Arrangement b(3, forms, a.mults());
    EXPECT_EQ(enumerate_flats(a), enumerate_flats(b));
    EXPECT_EQ(is_indecomposable(a), is_indecomposable(b));
    if (is_indecomposable(a)) EXPECT_EQ(epsilon_construct(a).eps, epsilon_construct(b).eps);
  }
}

}  // namespace
}  // namespace bsroots
