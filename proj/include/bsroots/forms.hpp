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

// Exterior forms with polynomial coefficients on affine n-space.

#ifndef BSROOTS_FORMS_HPP_
#define BSROOTS_FORMS_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "bsroots/polynomial.hpp"

namespace bsroots {

// Strictly increasing 0-based variable indices i0 < ... < ip-1 standing for
// dx_{i0+1} ^ ... ^ dx_{ip-1 + 1}.
using FormIndex = std::vector<std::size_t>;

class DifferentialForm {
 public:
  using Components = std::map<FormIndex, Polynomial>;

  DifferentialForm(std::size_t n, std::size_t degree);

  // dx_{indices}, with the indices in any order; the sign of the sorting
  // permutation is absorbed into the coefficient (zero on repeats).
  static DifferentialForm basis(std::size_t n, const std::vector<std::size_t>& indices,
                                const Polynomial& coeff);
  // dx = dx1 ^ ... ^ dxn
  static DifferentialForm top(std::size_t n);
  // The 0-form g.
  static DifferentialForm function(const Polynomial& g);
  // df = sum d_i f dx_i
  static DifferentialForm exact(const Polynomial& f);

  std::size_t dim() const { return n_; }
  std::size_t degree() const { return degree_; }
  const Components& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }
  Polynomial component(const FormIndex& index) const;

  void add(const FormIndex& sorted_index, const Polynomial& coeff);

  DifferentialForm scaled(const Polynomial& g) const;
  DifferentialForm& operator+=(const DifferentialForm& other);
  DifferentialForm& operator-=(const DifferentialForm& other);
  friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
  friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }
  friend bool operator==(const DifferentialForm&, const DifferentialForm&) = default;

 private:
  void check_compatible(const DifferentialForm& other) const;

  std::size_t n_;
  std::size_t degree_;
  Components components_;
};

DifferentialForm exterior_d(const DifferentialForm& omega);

// Graded product; returns the zero form of degree p+q when p+q > n.
DifferentialForm wedge(const DifferentialForm& omega, const DifferentialForm& eta);

// Contraction with the Euler field scaled by 1/d:
//   h(dx_{i0} ^ ... ^ dx_{ip}) = sum_j (-1)^j x_{ij}/d dx_{i0} ^ .. ^ dx_{ij}^ .. ^ dx_{ip},
// extended linearly over polynomial coefficients. A 0-form maps to zero.
DifferentialForm euler_contraction(const DifferentialForm& omega, unsigned d);

// (1/d) sum_i (-1)^(i-1) x_i dx_1 ^ .. ^ dx_i^ .. ^ dx_n, i.e.
// euler_contraction(dx, d).
DifferentialForm omega0(std::size_t n, unsigned d);

std::string to_string(const DifferentialForm& omega);

}  // namespace bsroots

#endif  // BSROOTS_FORMS_HPP_
