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

// Sparse multivariate polynomials over the rationals.

#ifndef BSROOTS_POLYNOMIAL_HPP_
#define BSROOTS_POLYNOMIAL_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsroots/rational.hpp"

namespace bsroots {

// Exponent vector of fixed length. Componentwise arithmetic requires equal
// lengths and throws PreconditionError otherwise.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : exps_(n, 0) {}
  MultiIndex(std::initializer_list<unsigned> exps) : exps_(exps) {}
  explicit MultiIndex(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  static MultiIndex unit(std::size_t n, std::size_t i);

  std::size_t size() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  // |alpha|
  unsigned total() const;
  // alpha! = prod alpha_i!
  Integer factorial() const;
  bool is_zero() const;

  // Componentwise partial order.
  bool divides(const MultiIndex& other) const;

  MultiIndex operator+(const MultiIndex& other) const;
  // Requires other <= *this componentwise.
  MultiIndex operator-(const MultiIndex& other) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> exps_;
};

// Graded lexicographic order: total degree first, then lexicographic with
// x1 > x2 > ... > xn.
struct GrlexLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

// Total degree; the zero polynomial carries the distinguished
// minus-infinity marker instead of a numeric sentinel.
class Degree {
 public:
  static Degree minus_infinity() { return Degree(); }
  static Degree of(unsigned d) { return Degree(d); }

  bool is_minus_infinity() const { return !value_.has_value(); }
  // Throws std::logic_error on minus infinity.
  unsigned value() const;

  friend bool operator==(const Degree&, const Degree&) = default;

 private:
  Degree() = default;
  explicit Degree(unsigned d) : value_(d) {}
  std::optional<unsigned> value_;
};

class Polynomial {
 public:
  using Terms = std::map<MultiIndex, Rational, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(std::size_t n) : n_(n) {}

  static Polynomial constant(std::size_t n, const Rational& c);
  static Polynomial variable(std::size_t n, std::size_t i);
  static Polynomial monomial(const MultiIndex& e, const Rational& c);

  std::size_t dim() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * x^e; drops the term if the coefficient cancels.
  void add_term(const MultiIndex& e, const Rational& c);
  Rational coefficient(const MultiIndex& e) const;

  Degree degree() const;
  // Largest term in graded lex order. Requires a nonzero polynomial.
  const Terms::value_type& leading_term() const;

  Polynomial derivative(std::size_t i) const;
  // Multiplies by x^e.
  Polynomial shifted(const MultiIndex& e) const;
  Polynomial scaled(const Rational& c) const;
  Rational evaluate(const std::vector<Rational>& point) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p) { return p.scaled(c); }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_dim(const Polynomial& other) const;

  std::size_t n_ = 0;
  Terms terms_;
};

enum class PolyOp { kAdd, kSub, kMul };

// Exact ring operation; throws PreconditionError on dimension mismatch.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

Polynomial pow(const Polynomial& p, unsigned k);

// Returns q with g = f * q when f divides g exactly, otherwise nullopt.
// Division uses graded lex leading terms. Throws PreconditionError if f = 0.
std::optional<Polynomial> divides_exact(const Polynomial& f, const Polynomial& g);

// nullopt when f is not homogeneous; Degree::minus_infinity() for f = 0,
// which is homogeneous of every degree.
std::optional<Degree> is_homogeneous(const Polynomial& f);

// "c*x1^e1*...*xn^en" terms in descending graded lex order; "0" for zero.
std::string to_string(const Polynomial& p);

// Polynomial in x with coefficients in Q[s]: coeffs[k] multiplies s^k.
class SPolynomial {
 public:
  SPolynomial() = default;
  explicit SPolynomial(std::size_t n) : n_(n) {}
  explicit SPolynomial(const Polynomial& p);

  static SPolynomial s_power(std::size_t n, unsigned k, const Rational& c = 1);

  std::size_t dim() const { return n_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Number of stored s-coefficients (s-degree + 1; 0 for the zero element).
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Polynomial>& coefficients() const { return coeffs_; }
  // Zero polynomial past the stored range.
  Polynomial coefficient(std::size_t k) const;

  void add(std::size_t k, const Polynomial& p);

  SPolynomial times_s() const;
  SPolynomial scaled(const Rational& c) const;
  SPolynomial times(const Polynomial& p) const;
  SPolynomial derivative(std::size_t i) const;
  // Substitutes s -> s + c.
  SPolynomial shift_s(const Rational& c) const;

  SPolynomial& operator+=(const SPolynomial& other);
  SPolynomial& operator-=(const SPolynomial& other);
  friend SPolynomial operator+(SPolynomial a, const SPolynomial& b) { return a += b; }
  friend SPolynomial operator-(SPolynomial a, const SPolynomial& b) { return a -= b; }
  friend SPolynomial operator*(const SPolynomial& a, const SPolynomial& b);
  friend bool operator==(const SPolynomial&, const SPolynomial&) = default;

 private:
  void trim();

  std::size_t n_ = 0;
  std::vector<Polynomial> coeffs_;
};

std::string to_string(const SPolynomial& p);

}  // namespace bsroots

#endif  // BSROOTS_POLYNOMIAL_HPP_
