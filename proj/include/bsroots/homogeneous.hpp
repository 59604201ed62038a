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

// Homogeneous polynomials that are not arrangements: Euler relations
// f^s = sum c_i d_i (x_i f^s), bidegree-pure coordinate splits, and
// coordinate separability.

#ifndef BSROOTS_HOMOGENEOUS_HPP_
#define BSROOTS_HOMOGENEOUS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bsroots/arrangement.hpp"
#include "bsroots/fs.hpp"
#include "bsroots/linalg.hpp"
#include "bsroots/polynomial.hpp"

namespace bsroots {

// Variable subsets reuse Support: sorted 0-based variable indices.
using VariableSet = Support;

struct EulerSearch {
  // sum c_i = 1 and <c, e> = 0 for every exponent e of f.
  std::optional<RationalVector> c;
  // f^s == sum c_i d_i (x_i f^s) as f^s elements.
  bool verified = false;
  // When infeasible: z over the monomials of f (grlex order) with
  // E^T z = (1,...,1), so every solution of E c = 0 has sum c_i = 0.
  RationalVector certificate;
};

// Throws PreconditionError unless f is nonzero and homogeneous.
EulerSearch euler_relation_find(const Polynomial& f);

// apply_to_fs(sum c_i d_i x_i, f^s) == f^s
bool verify_euler_relation(const Polynomial& f, const RationalVector& c);

struct SplitReport {
  VariableSet s;
  unsigned k = 0;  // S-degree shared by every monomial
  unsigned d = 0;
  std::size_t n = 0;
  std::size_t l = 0;  // |S|
  bool balanced = false;  // nk = dl: no relation forced
  // (-(d-k)/(nk-dl), k/(nk-dl)) for S and its complement.
  std::optional<std::pair<Rational, Rational>> coefficients;
  RationalVector c;
  bool verified = false;
};

// nullopt when the monomials of f have different S-degrees. Throws
// PreconditionError unless f is nonzero homogeneous and S is a nonempty
// proper subset of the variables.
std::optional<SplitReport> bidegree_split_check(const Polynomial& f, const VariableSet& s);

struct SeparabilityReport {
  VariableSet s;
  std::size_t rank = 0;  // of the S-monomial x complement-monomial matrix
  bool separable = false;
  // f = g1 * g2 with g1 in the S variables, g2 in the rest; multiplied back
  // and compared.
  std::optional<std::pair<Polynomial, Polynomial>> factors;
};

SeparabilityReport separability_test(const Polynomial& f, const VariableSet& s);

inline constexpr const char* kScreenLabel =
    "fixed-coordinate screen: not a proof over all linear decompositions";

struct ScreenReport {
  std::size_t n = 0;
  unsigned d = 0;
  EulerSearch euler;
  // Bidegree-pure splits, including balanced ones.
  std::vector<SplitReport> splits;
  // Unbalanced pure splits: coordinate witnesses against the hypothesis.
  std::vector<SplitReport> witnesses;
  std::vector<SeparabilityReport> separable;
  std::string verdict;
  std::string label = kScreenLabel;
};

// Scans the coordinate bipartitions {S, S^c} (each once, S containing the
// first variable). Throws PreconditionError unless f is nonzero homogeneous.
ScreenReport conjecture61_screen(const Polynomial& f);

}  // namespace bsroots

#endif  // BSROOTS_HOMOGENEOUS_HPP_
