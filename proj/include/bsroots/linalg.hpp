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

// Dense exact Gaussian elimination over Q.

#ifndef BSROOTS_LINALG_HPP_
#define BSROOTS_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "bsroots/rational.hpp"

namespace bsroots {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix transposed() const;
  RationalVector operator*(const RationalVector& v) const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  bool is_zero() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m);

std::size_t rank(RationalMatrix m);

// Basis of {x : m x = 0}.
std::vector<RationalVector> nullspace(RationalMatrix m);

// Some x with m x = b (free variables set to zero), or nullopt.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

}  // namespace bsroots

#endif  // BSROOTS_LINALG_HPP_
