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

// The module R_f[s] f^s and the action of D[s] on it.

#ifndef BSROOTS_FS_HPP_
#define BSROOTS_FS_HPP_

#include <string>
#include <vector>

#include "bsroots/polynomial.hpp"
#include "bsroots/weyl.hpp"

namespace bsroots {

// (numerator / f^m) * f^s with numerator in Q[x][s]. Kept normalized: m is
// minimal, so f does not divide every s-coefficient of the numerator when
// m > 0, and zero has m = 0. Equality is therefore syntactic.
class FsElement {
 public:
  FsElement(Polynomial f, SPolynomial numerator, unsigned fpow);

  // f^s itself.
  static FsElement generator(const Polynomial& f);
  // g * f^s for a polynomial g.
  static FsElement times_generator(const Polynomial& f, const Polynomial& g);

  const Polynomial& reference() const { return f_; }
  const SPolynomial& numerator() const { return num_; }
  unsigned fpow() const { return fpow_; }
  bool is_zero() const { return num_.is_zero(); }

  FsElement times_s() const;
  FsElement times(const Polynomial& g) const;
  FsElement scaled(const Rational& c) const;
  // d_i((N / f^m) f^s) = ((f d_i N + (s - m) N d_i f) / f^(m+1)) f^s
  FsElement partial(std::size_t i) const;

  FsElement& operator+=(const FsElement& other);
  FsElement& operator-=(const FsElement& other);
  friend FsElement operator+(FsElement a, const FsElement& b) { return a += b; }
  friend FsElement operator-(FsElement a, const FsElement& b) { return a -= b; }
  friend bool operator==(const FsElement&, const FsElement&) = default;

 private:
  void normalize();
  void check_reference(const FsElement& other) const;

  Polynomial f_;
  SPolynomial num_;
  unsigned fpow_ = 0;
};

std::string to_string(const FsElement& e);

FsElement apply_to_fs(const WeylOperator& p, const FsElement& e);

// t P(s) f^s = P(s+1) f^(s+1).
FsElement t_shift(const FsElement& e);

bool is_annihilator(const WeylOperator& p, const Polynomial& f);

// Univariate polynomial in s; coeffs[k] multiplies s^k. Trailing zeros trimmed.
class SUnivariate {
 public:
  SUnivariate() = default;
  explicit SUnivariate(std::vector<Rational> coeffs);
  // prod (s + root_shift[i]), i.e. roots at -root_shift[i].
  static SUnivariate from_shifts(const std::vector<Rational>& root_shifts);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Rational evaluate(const Rational& s) const;
  SPolynomial embed(std::size_t n) const;

  friend SUnivariate operator*(const SUnivariate& a, const SUnivariate& b);
  friend bool operator==(const SUnivariate&, const SUnivariate&) = default;

 private:
  std::vector<Rational> coeffs_;
};

std::string to_string(const SUnivariate& b);

struct BSPair {
  WeylOperator op;
  SUnivariate bpoly;
};

struct BSCheck {
  bool pass = false;
  // P f^(s+1) - b(s) f^s
  FsElement residual;
};

// Checks P(s) f^(s+1) = b(s) f^s. Requires f != 0 and f(0) = 0.
BSCheck bs_pair_check(const BSPair& pair, const Polynomial& f);

struct EulerWitness {
  unsigned n = 0;
  unsigned d = 0;
  Rational n_over_d;
  FsElement s_fs;    // s f^s
  FsElement euler;   // (1/d) sum x_i d_i f^s
  FsElement shifted; // -(n/d) f^s + (1/d) sum d_i (x_i f^s)
  bool verified = false;
};

// Verifies s f^s = (1/d) sum x_i d_i f^s = -(n/d) f^s + (1/d) sum d_i(x_i f^s),
// the identity that makes -n/d the candidate root. Requires f homogeneous of
// degree d >= 1.
EulerWitness euler_root_witness(const Polynomial& f);

// sum_i c_i d_i x_i as an operator (x-left form: c_i (x_i d_i + 1)).
WeylOperator euler_combination(const std::vector<Rational>& c);

}  // namespace bsroots

#endif  // BSROOTS_FS_HPP_
