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

// Central hyperplane arrangements with multiplicities: flats, dense edges,
// the nonresonance condition, positive epsilon weights and the residue
// bookkeeping that feeds the -n/d root criterion.

#ifndef BSROOTS_ARRANGEMENT_HPP_
#define BSROOTS_ARRANGEMENT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bsroots/linalg.hpp"
#include "bsroots/polynomial.hpp"

namespace bsroots {

// Sorted 0-based indices into the list of forms.
using Support = std::vector<std::size_t>;

inline constexpr std::size_t kDefaultFlatBudget = 20;

class Arrangement {
 public:
  // forms[j] holds the coefficients of L_j; mults[j] = a_j >= 1. Throws
  // PreconditionError on zero or pairwise proportional forms, bad lengths
  // or zero multiplicities.
  Arrangement(std::size_t n, std::vector<RationalVector> forms, std::vector<unsigned> mults);

  std::size_t dim() const { return n_; }
  std::size_t size() const { return forms_.size(); }
  const std::vector<RationalVector>& forms() const { return forms_; }
  const std::vector<unsigned>& mults() const { return mults_; }
  // d = sum a_j
  unsigned degree() const;
  // n/d
  Rational n_over_d() const;
  // f = prod L_j^a_j
  Polynomial defining_polynomial() const;

 private:
  std::size_t n_;
  std::vector<RationalVector> forms_;
  std::vector<unsigned> mults_;
};

struct Flat {
  Support support;
  std::size_t dim = 0;

  friend bool operator==(const Flat&, const Flat&) = default;
};

// (dim, support) order.
bool flat_less(const Flat& a, const Flat& b);

// dim span{L_j : j in S}
std::size_t rank(const Arrangement& a, const Support& s);

// support = {j : L_j in span S}.
Flat closure(const Arrangement& a, const Support& s);

bool is_essential(const Arrangement& a);

// Proper nonzero flats (1 <= dim <= n-1), deduplicated, sorted by
// (dim, support). Throws PreconditionError when r exceeds the budget.
std::vector<Flat> enumerate_flats(const Arrangement& a, std::size_t budget = kDefaultFlatBudget);

// Connected components of the linear matroid on {L_j : j in S}, each sorted,
// listed by smallest element. Components merge along fundamental circuits
// of the greedy basis.
std::vector<Support> matroid_components(const Arrangement& a, const Support& s);

// {L_j : j in S} is indecomposable inside its own span (matroid connected).
// Requires S nonempty.
bool is_indecomposable(const Arrangement& a, const Support& s);

// The whole arrangement is indecomposable in (C^n)*: essential and connected.
bool is_indecomposable(const Arrangement& a);

struct DenseEdge {
  Flat flat;
  unsigned sum_mult = 0;
  // dim W - (n/d) sum_{j in W} a_j
  Rational r_value;
};

// Proper flats whose support is matroid-connected (singletons included).
std::vector<DenseEdge> dense_edges(const Arrangement& a, std::size_t budget = kDefaultFlatBudget);

struct ConditionR {
  bool pass = true;
  std::vector<DenseEdge> edges;
  std::vector<DenseEdge> violators;  // r_value a positive integer
};

ConditionR condition_R(const Arrangement& a, std::size_t budget = kDefaultFlatBudget);

struct EpsilonWeights {
  RationalVector eps;
  bool perturbed = false;
};

// Positive weights with sum n and sum_{j in W} eps_j < dim W on every proper
// nonzero flat, from the greedy (lexicographically first) basis B:
//   eps_j = n/(n+1) for j in B,
//   eps_j = (sum_{i in B_j} 1/b_i) / (n+1) otherwise,
// where B_j is the basis support of L_j and b_i = #{j not in B : i in B_j}.
// Throws PreconditionError on decomposable input; std::logic_error if the
// result fails its own postconditions.
EpsilonWeights epsilon_construct(const Arrangement& a, std::size_t budget = kDefaultFlatBudget);

// Nudges eps so that sum_{j in W} eps_j is non-integral on every dense edge
// while keeping the sum and all strict flat inequalities. Deterministic:
// eps + w/Q with w_j = p_j - mean(p) over the first r primes and
// Q = D * 2^t * 3 (D the largest denominator of eps), t = 1..40.
EpsilonWeights epsilon_perturb(const Arrangement& a, const EpsilonWeights& eps,
                               std::size_t budget = kDefaultFlatBudget);

// Checks sum = n, positivity and the strict flat inequalities; when
// require_nonintegral also the dense-edge non-integrality.
bool epsilon_valid(const Arrangement& a, const RationalVector& eps, bool require_nonintegral,
                   std::size_t budget = kDefaultFlatBudget);

struct MuEntry {
  DenseEdge edge;
  Rational eps_sum;
  unsigned mu = 0;
  // mu(W) - (n/d) sum_{j in W} a_j
  Rational residue;
};

struct MuAssignment {
  std::vector<MuEntry> entries;
  Integer N;  // lcm of the denominators of eps
};

// mu(W) = 1 + floor(sum_{j in W} eps_j), N, and residues; throws
// std::logic_error if 1 <= mu <= dim W, 0 < N(1 + sum - mu) < N or (when
// condition (R) holds) residue not in Z_{>0} fails.
MuAssignment mu_and_residues(const Arrangement& a, const EpsilonWeights& eps,
                             std::size_t budget = kDefaultFlatBudget);

struct AnalysisReport {
  std::size_t n = 0;
  unsigned d = 0;
  bool essential = false;
  bool indecomposable = false;
  ConditionR condition;
  std::optional<EpsilonWeights> epsilon;
  std::optional<EpsilonWeights> epsilon_perturbed;
  std::optional<MuAssignment> mu;
  bool theorem_applies = false;
  // -n/d when the theorem applies.
  std::optional<Rational> root;
  std::string verdict;
};

AnalysisReport analyze(const Arrangement& a, std::size_t budget = kDefaultFlatBudget);

}  // namespace bsroots

#endif  // BSROOTS_ARRANGEMENT_HPP_
