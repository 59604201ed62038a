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

#include "bsroots/lattice.hpp"
#include "bsroots/oracles.hpp"
#include "test_support.hpp"

namespace bsroots {
namespace {

using testing::A;
using testing::braid3;
using testing::V;
using testing::xy;
using testing::xyz_sum;

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

bool contains(const Support& big, const Support& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

TEST(Mobius, BooleanLattice) {
  IntersectionLattice l = mobius(xy());
  ASSERT_EQ(l.elements.size(), 4u);
  EXPECT_EQ(l.bottom().mobius, 1);
  EXPECT_TRUE(l.bottom().flat.support.empty());
  EXPECT_EQ(l.elements[1].mobius, -1);
  EXPECT_EQ(l.elements[2].mobius, -1);
  EXPECT_EQ(l.top().mobius, 1);
  EXPECT_EQ(l.top().flat.dim, 2u);
}

TEST(Mobius, TopValues) {
  EXPECT_EQ(mobius(braid3()).top().mobius, 2);
  EXPECT_EQ(mobius(xyz_sum()).top().mobius, -3);
}

TEST(CharPoly, Examples) {
  EXPECT_EQ(char_poly(xy()), ints({1, -2, 1}));
  EXPECT_EQ(char_poly(braid3()), ints({2, -3, 1}));
  EXPECT_EQ(char_poly(xyz_sum()), ints({-3, 6, -4, 1}));
  EXPECT_EQ(char_poly_to_string(char_poly(xyz_sum())), "t^3 - 4*t^2 + 6*t - 3");
}

TEST(CharPoly, NonEssential) {
  // {x, y} in three variables: (t - 1)^2 t.
  EXPECT_EQ(char_poly(A(3, {{1, 0, 0}, {0, 1, 0}})), ints({0, 1, -2, 1}));
  EXPECT_THROW(chi_projective(A(3, {{1, 0, 0}, {0, 1, 0}})), PreconditionError);
}

TEST(ChiProjective, Examples) {
  EXPECT_EQ(chi_projective(xy()), 0);
  EXPECT_EQ(chi_projective(braid3()), -1);
  EXPECT_EQ(chi_projective(xyz_sum()), 1);
}

TEST(OsNbc, Examples) {
  OSBasis b = os_nbc(braid3());
  EXPECT_EQ(b.circuits, (std::vector<Support>{{0, 1, 2}}));
  EXPECT_EQ(b.broken_circuits, (std::vector<Support>{{1, 2}}));
  ASSERT_EQ(b.nbc.size(), 3u);
  EXPECT_EQ(b.nbc[2], (std::vector<Support>{{0, 1}, {0, 2}}));
  EXPECT_EQ(b.counts(), (std::vector<std::size_t>{1, 3, 2}));

  OSBasis boolean = os_nbc(xy());
  EXPECT_TRUE(boolean.circuits.empty());
  EXPECT_EQ(boolean.nbc[0], (std::vector<Support>{{}}));
  EXPECT_EQ(boolean.nbc[1], (std::vector<Support>{{0}, {1}}));
  EXPECT_EQ(boolean.nbc[2], (std::vector<Support>{{0, 1}}));
}

TEST(OsNbc, OrderChangesBrokenCircuits) {
  OSBasis b = os_nbc(braid3(), {2, 0, 1});
  EXPECT_EQ(b.order, (HyperplaneOrder{2, 0, 1}));
  EXPECT_EQ(b.broken_circuits, (std::vector<Support>{{0, 1}}));
  EXPECT_EQ(b.nbc[2], (std::vector<Support>{{0, 2}, {1, 2}}));
  EXPECT_THROW(os_nbc(braid3(), {0, 0, 1}), PreconditionError);
  EXPECT_THROW(os_nbc(braid3(), {0, 1}), PreconditionError);
}

TEST(Aomoto, ZeroWeightsGiveNbcCounts) {
  EXPECT_EQ(aomoto_betti(braid3(), V({"0", "0", "0"})), (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(aomoto_betti(xyz_sum(), V({"0", "0", "0", "0"})), (std::vector<std::size_t>{1, 4, 6, 3}));
}

TEST(Aomoto, NonzeroSumIsAcyclic) {
  EXPECT_EQ(aomoto_betti(braid3(), V({"1", "1", "1"})), (std::vector<std::size_t>{0, 0, 0}));
}

TEST(Aomoto, ZeroSumGenericWeights) {
  // Euler characteristic 1 - 3 + 2 = 0 forces the degree-2 class next to the degree-1 one.
  AomotoComplex c = aomoto_complex(braid3(), V({"-2/3", "-2/3", "4/3"}));
  EXPECT_EQ(c.betti, (std::vector<std::size_t>{0, 1, 1}));
  ASSERT_EQ(c.matrices.size(), 2u);
  EXPECT_TRUE((c.matrices[1] * c.matrices[0]).is_zero());
  EXPECT_THROW(aomoto_complex(braid3(), V({"1", "1"})), PreconditionError);
}

TEST(DefaultWeights, SumToZeroAndAreDistinct) {
  RationalVector w = default_aomoto_weights(5);
  ASSERT_EQ(w.size(), 5u);
  Rational sum = 0;
  for (const Rational& q : w) sum += q;
  EXPECT_EQ(sum, 0);
  EXPECT_EQ(std::adjacent_find(w.begin(), w.end()), w.end());
}

TEST(LatticeReport, Braid) {
  LatticeReport r = lattice_report(braid3());
  EXPECT_EQ(r.char_poly, ints({2, -3, 1}));
  ASSERT_TRUE(r.chi_projective.has_value());
  EXPECT_EQ(*r.chi_projective, -1);
  EXPECT_TRUE(r.theorem_applies);
  ASSERT_TRUE(r.predicted_top_betti.has_value());
  EXPECT_EQ(*r.predicted_top_betti, 1);
  EXPECT_EQ(r.nbc_counts, (std::vector<std::size_t>{1, 3, 2}));
}

TEST(LatticeReport, DecomposableHasNoPrediction) {
  LatticeReport r = lattice_report(xy());
  EXPECT_FALSE(r.theorem_applies);
  EXPECT_FALSE(r.predicted_top_betti.has_value());
  EXPECT_EQ(*r.chi_projective, 0);
}

TEST(LatticeProperty, MobiusRecursionAndWhitneyExpansion) {
  oracle::Rng rng(61);
  for (int i = 0; i < 25; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
    std::size_t r = static_cast<std::size_t>(rng.integer(1, 7));
    Arrangement a = rng.arrangement(n, r, 3);
    IntersectionLattice l = mobius(a);
    EXPECT_EQ(l.bottom().mobius, 1);
    for (std::size_t x = 1; x < l.elements.size(); ++x) {
      Integer sum = 0;
      for (const LatticeElement& y : l.elements) {
        if (contains(l.elements[x].flat.support, y.flat.support)) sum += y.mobius;
      }
      EXPECT_EQ(sum, 0);
    }
    EXPECT_EQ(char_poly(a), oracle::whitney_char_poly(a));
  }
}

TEST(LatticeProperty, NbcCountsAreWhitneyNumbers) {
  oracle::Rng rng(62);
  for (int i = 0; i < 25; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
    std::size_t r = static_cast<std::size_t>(rng.integer(n, n + 4));
    Arrangement a = rng.arrangement(n, r, 2);
    std::vector<Integer> p = char_poly(a);
    OSBasis b = os_nbc(a, rng.permutation(r));
    std::vector<std::size_t> counts = b.counts();
    for (std::size_t k = 0; k <= n; ++k) {
      std::size_t c = k < counts.size() ? counts[k] : 0;
      EXPECT_EQ(Integer(c), abs(p[n - k]));
    }
    for (const Support& c : b.circuits) {
      EXPECT_EQ(rank(a, c), c.size() - 1);
      for (std::size_t drop = 0; drop < c.size(); ++drop) {
        Support sub = c;
        sub.erase(sub.begin() + static_cast<long>(drop));
        EXPECT_EQ(rank(a, sub), sub.size());
      }
    }
    for (const auto& level : b.nbc) {
      for (const Support& s : level) {
        EXPECT_EQ(rank(a, s), s.size());
        for (const Support& bc : b.broken_circuits) EXPECT_FALSE(contains(s, bc));
      }
    }
  }
}

TEST(LatticeProperty, AomotoComplexInvariants) {
  oracle::Rng rng(63);
  for (int i = 0; i < 15; ++i) {
    std::size_t n = static_cast<std::size_t>(rng.integer(2, 3));
    std::size_t r = static_cast<std::size_t>(rng.integer(n + 1, n + 3));
    Arrangement a = rng.arrangement(n, r, 2);
    RationalVector lambda;
    for (std::size_t j = 0; j < r; ++j) lambda.push_back(rng.rational());
    AomotoComplex c = aomoto_complex(a, lambda);
    for (std::size_t k = 0; k + 1 < c.matrices.size(); ++k) {
      EXPECT_TRUE((c.matrices[k + 1] * c.matrices[k]).is_zero());
    }
    long euler_nbc = 0;
    long euler_betti = 0;
    std::vector<std::size_t> counts = c.basis.counts();
    for (std::size_t k = 0; k < counts.size(); ++k) {
      euler_nbc += (k % 2 == 0 ? 1 : -1) * static_cast<long>(counts[k]);
      euler_betti += (k % 2 == 0 ? 1 : -1) * static_cast<long>(c.betti[k]);
    }
    EXPECT_EQ(euler_nbc, euler_betti);
    Rational sum = 0;
    for (const Rational& q : lambda) sum += q;
    if (sum != 0) {
      for (std::size_t b : c.betti) EXPECT_EQ(b, 0u);
    }
    EXPECT_EQ(aomoto_betti(a, lambda, rng.permutation(r)), c.betti);
    RationalVector centred = default_aomoto_weights(r);
    EXPECT_EQ(aomoto_betti(a, centred, rng.permutation(r)), aomoto_betti(a, centred));
  }
}

}  // namespace
}  // namespace bsroots
