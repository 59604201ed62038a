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

#include "bsroots/linalg.hpp"

#include <utility>

namespace bsroots {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw PreconditionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
  if (v.size() != cols_) throw PreconditionError("matrix-vector size mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product size mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& q : data_) {
    if (q != 0) return false;
  }
  return true;
}

std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
    }
    Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return rref(m).size(); }

std::vector<RationalVector> nullspace(RationalMatrix m) {
  auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  if (b.size() != m.rows()) throw PreconditionError("right-hand side size mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RationalVector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

}  // namespace bsroots
