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

// Slow reference implementations and seeded random inputs. Nothing in the
// library proper depends on this header; the tests and the selftest command
// compare the fast code against it.

#ifndef BSROOTS_ORACLES_HPP_
#define BSROOTS_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "bsroots/arrangement.hpp"
#include "bsroots/forms.hpp"
#include "bsroots/polynomial.hpp"
#include "bsroots/weyl.hpp"

namespace bsroots::oracle {

// Word rewriting with d_i x_i -> x_i d_i + 1 until every x sits left of
// every d.
WeylOperator rewrite_normal(std::size_t n, const Word& word);

// Word rewriting with x_i d_i -> d_i x_i - 1 applied to x^beta d^alpha.
AntinormalForm rewrite_antinormal(const MultiIndex& beta, const MultiIndex& alpha);

// Anti-normal form of an s-free operator by rewriting each term.
AntinormalForm rewrite_antinormal(const WeylOperator& p);

// P lies in the left ideal generated by x_1..x_n iff its anti-normal form has
// no pure d^gamma term.
bool antinormal_in_ideal(const WeylOperator& p);

// Constant term of the anti-normal form of the weight-0 part.
Rational antinormal_constant(const WeylOperator& p);

// No bipartition S = S1 + S2 (both nonempty) with rank(S1) + rank(S2) =
// rank(S). Singletons count as indecomposable.
bool bipartition_indecomposable(const Arrangement& a, const Support& s);

// Closures of all subsets, proper and nonzero, sorted by (dim, support).
std::vector<Flat> subset_flats(const Arrangement& a);

// Whitney's subset expansion p(t) = sum_S (-1)^|S| t^(n - rank S).
std::vector<Integer> whitney_char_poly(const Arrangement& a);

// Term-by-term expansion of a polynomial product.
Polynomial naive_product(const Polynomial& a, const Polynomial& b);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi);
  // p/q with |p| <= num_bound, 1 <= q <= den_bound.
  Rational rational(long num_bound = 5, long den_bound = 4);
  Rational nonzero_rational(long num_bound = 5, long den_bound = 4);
  bool coin() { return integer(0, 1) == 1; }

  MultiIndex multi_index(std::size_t n, unsigned max_entry);
  Polynomial polynomial(std::size_t n, std::size_t terms, unsigned max_degree);
  // Nonzero, every term of total degree d.
  Polynomial homogeneous(std::size_t n, unsigned d, std::size_t terms);
  // s-free operator with exponents <= max_entry.
  WeylOperator weyl_operator(std::size_t n, std::size_t terms, unsigned max_entry);
  // s-free operator with a single weight |alpha| - |beta| = k.
  WeylOperator graded_operator(std::size_t n, std::size_t terms, unsigned max_entry, int k);
  DifferentialForm form(std::size_t n, std::size_t degree, std::size_t terms, unsigned max_degree);
  // r pairwise non-proportional forms with small integer coefficients.
  Arrangement arrangement(std::size_t n, std::size_t r, long coeff_bound = 2, unsigned max_mult = 1);
  std::vector<std::size_t> permutation(std::size_t r);

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace bsroots::oracle

#endif  // BSROOTS_ORACLES_HPP_
