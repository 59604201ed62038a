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

// Elements of the Weyl algebra D[s] = Q[x1..xn]<d1..dn>[s] in x-left normal
// form, and the left ideal D<x1..xn> membership criteria.

#ifndef BSROOTS_WEYL_HPP_
#define BSROOTS_WEYL_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bsroots/polynomial.hpp"

namespace bsroots {

// x^x_exp d^d_exp s^s_exp
struct WeylMonomial {
  MultiIndex x_exp;
  MultiIndex d_exp;
  unsigned s_exp = 0;

  // |alpha| - |beta|, the grading with deg x = -1 and deg d = +1.
  int weight() const { return static_cast<int>(d_exp.total()) - static_cast<int>(x_exp.total()); }

  friend bool operator==(const WeylMonomial&, const WeylMonomial&) = default;
  friend auto operator<=>(const WeylMonomial&, const WeylMonomial&) = default;
};

class WeylOperator {
 public:
  using Terms = std::map<WeylMonomial, Rational>;

  WeylOperator() = default;
  explicit WeylOperator(std::size_t n) : n_(n) {}

  static WeylOperator constant(std::size_t n, const Rational& c);
  static WeylOperator x(std::size_t n, std::size_t i);
  static WeylOperator d(std::size_t n, std::size_t i);
  static WeylOperator s(std::size_t n);
  static WeylOperator monomial(const MultiIndex& x_exp, const MultiIndex& d_exp, unsigned s_exp,
                               const Rational& c);
  // Multiplication by the polynomial p.
  static WeylOperator multiplication(const Polynomial& p);

  std::size_t dim() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_s() const;
  bool has_d() const;

  void add_term(const WeylMonomial& m, const Rational& c);

  WeylOperator scaled(const Rational& c) const;
  WeylOperator& operator+=(const WeylOperator& other);
  WeylOperator& operator-=(const WeylOperator& other);
  WeylOperator operator-() const { return scaled(-1); }
  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  // Product in D[s], normal ordered through d^a x^b = sum_j C(a,j) b!/(b-j)! x^(b-j) d^(a-j).
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);
  friend bool operator==(const WeylOperator&, const WeylOperator&) = default;

 private:
  void check_dim(const WeylOperator& other) const;

  std::size_t n_ = 0;
  Terms terms_;
};

// Power of an operator; the zeroth power is the identity.
WeylOperator pow(const WeylOperator& p, unsigned k);

std::string to_string(const WeylOperator& p);

// One letter of a word in D[s].
struct Generator {
  enum class Kind { kX, kD, kS, kScalar };
  Kind kind = Kind::kScalar;
  std::size_t index = 0;  // variable index for kX / kD
  Rational scalar = 1;    // value for kScalar

  static Generator x(std::size_t i) { return {Kind::kX, i, 1}; }
  static Generator d(std::size_t i) { return {Kind::kD, i, 1}; }
  static Generator s() { return {Kind::kS, 0, 1}; }
  static Generator scalar_of(const Rational& c) { return {Kind::kScalar, 0, c}; }
};

using Word = std::vector<Generator>;

// Product of the letters, in x-left normal form; s is central.
WeylOperator normalize(std::size_t n, const Word& word);

// Anti-normal (d-left) form: (d exponent, x exponent) -> coefficient, meaning
// sum c * d^a x^g.
using AntinormalForm = std::map<std::pair<MultiIndex, MultiIndex>, Rational>;

// Closed-form rewriting of x^beta d^alpha as a combination of d^(alpha-beta+gamma) x^gamma.
AntinormalForm to_antinormal(const MultiIndex& beta, const MultiIndex& alpha);

// Anti-normal form of an s-free operator (sum of to_antinormal over terms).
AntinormalForm to_antinormal(const WeylOperator& p);

// Re-expands d^a x^g terms into x-left normal form.
WeylOperator from_antinormal(std::size_t n, const AntinormalForm& form);

// Splits P by k = |alpha| - |beta|; the parts sum to P.
std::map<int, WeylOperator> graded_parts(const WeylOperator& p);

struct IdealFailure {
  int k = 0;             // graded part
  unsigned s_power = 0;  // coefficient of s^s_power
  MultiIndex gamma;      // the failing alpha - beta
  Rational sum;          // sum (-1)^|alpha| alpha! lambda_{beta,alpha}
};

struct IdealCheck {
  bool member = true;
  std::vector<IdealFailure> failures;
};

// Membership in the left ideal D<x1..xn> (D[s]<x1..xn> for operators in s,
// tested coefficientwise in s). Every graded part k >= 0 is tested against
//   sum_{alpha - beta = gamma} (-1)^|alpha| alpha! lambda_{beta,alpha} = 0 for all |gamma| = k;
// parts with k < 0 always pass.
IdealCheck in_ideal_Dx(const WeylOperator& p);

// sum_alpha (-1)^|alpha| alpha! lambda_{alpha,alpha}. Requires an s-free
// operator (PreconditionError otherwise); only the alpha = beta terms count,
// so callers may pass the weight-0 part or the whole operator.
Rational sigma_invariant(const WeylOperator& p);

}  // namespace bsroots

#endif  // BSROOTS_WEYL_HPP_
