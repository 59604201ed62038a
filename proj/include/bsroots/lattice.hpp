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

// Intersection lattice invariants: Moebius function, characteristic
// polynomial, Euler characteristic of the projective complement, the
// no-broken-circuit basis of the Orlik-Solomon algebra and Aomoto complexes.

#ifndef BSROOTS_LATTICE_HPP_
#define BSROOTS_LATTICE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bsroots/arrangement.hpp"
#include "bsroots/linalg.hpp"

namespace bsroots {

struct LatticeElement {
  Flat flat;
  Integer mobius;
};

struct IntersectionLattice {
  // Bottom (empty support, dim 0) first, then proper flats, then the top
  // closure of all forms; sorted by (dim, support).
  std::vector<LatticeElement> elements;

  const LatticeElement& bottom() const { return elements.front(); }
  const LatticeElement& top() const { return elements.back(); }
};

IntersectionLattice mobius(const Arrangement& a, std::size_t budget = kDefaultFlatBudget);

// Coefficients of p_A(t) = sum_X mu(X) t^(n - dim X), index = power of t.
std::vector<Integer> char_poly(const Arrangement& a, std::size_t budget = kDefaultFlatBudget);

// Integer polynomial in t, e.g. "t^2 - 3*t + 2".
std::string char_poly_to_string(const std::vector<Integer>& coeffs);

// q(1) where p_A(t) = (t - 1) q(t). Throws PreconditionError unless A is
// essential.
Integer chi_projective(const Arrangement& a, std::size_t budget = kDefaultFlatBudget);

// order[k] is the 0-based index of the k-th smallest hyperplane. Empty means
// input order.
using HyperplaneOrder = std::vector<std::size_t>;

struct OSBasis {
  HyperplaneOrder order;
  // Minimal dependent sets and broken circuits (circuit minus its smallest
  // element); each listed as sorted original indices.
  std::vector<Support> circuits;
  std::vector<Support> broken_circuits;
  // nbc[k]: degree-k nbc sets, sorted original indices.
  std::vector<std::vector<Support>> nbc;

  std::vector<std::size_t> counts() const;
};

OSBasis os_nbc(const Arrangement& a, const HyperplaneOrder& order = {});

struct AomotoComplex {
  RationalVector lambda;
  OSBasis basis;
  // matrices[k] maps degree k to degree k + 1 (rows: nbc[k+1], cols: nbc[k]).
  std::vector<RationalMatrix> matrices;
  std::vector<std::size_t> betti;
};

// Multiplication by omega = sum lambda_j e_j on the Orlik-Solomon algebra,
// written in the nbc basis. Throws PreconditionError on a wrong lambda length.
AomotoComplex aomoto_complex(const Arrangement& a, const RationalVector& lambda, const HyperplaneOrder& order = {});

std::vector<std::size_t> aomoto_betti(const Arrangement& a, const RationalVector& lambda,
                                      const HyperplaneOrder& order = {});

// lambda_j = p_j - mean(p) over the first r primes: sum zero, otherwise generic.
RationalVector default_aomoto_weights(std::size_t r);

struct LatticeReport {
  std::vector<Integer> char_poly;
  std::optional<Integer> chi_projective;  // essential arrangements only
  bool theorem_applies = false;
  // |chi| when the -n/d root criterion applies: the expected dimension of the
  // top twisted cohomology if it concentrates there.
  std::optional<Integer> predicted_top_betti;
  std::vector<std::size_t> nbc_counts;
  AomotoComplex aomoto;
};

// lambda defaults to default_aomoto_weights(r).
LatticeReport lattice_report(const Arrangement& a, const std::optional<RationalVector>& lambda = std::nullopt,
                             const HyperplaneOrder& order = {}, std::size_t budget = kDefaultFlatBudget);

}  // namespace bsroots

#endif  // BSROOTS_LATTICE_HPP_
