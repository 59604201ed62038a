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

#include "bsroots/homogeneous.hpp"

#include <algorithm>
#include <map>

namespace bsroots {

namespace {

unsigned homogeneous_degree(const Polynomial& f) {
  auto deg = is_homogeneous(f);
  if (f.is_zero() || !deg) throw PreconditionError("expected a nonzero homogeneous polynomial");
  return deg->value();
}

void check_split(const Polynomial& f, const VariableSet& s) {
  if (s.empty() || s.size() >= f.dim()) throw PreconditionError("split needs a nonempty proper variable set");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= f.dim() || (i > 0 && s[i] <= s[i - 1])) {
      throw PreconditionError("split variables must be sorted, distinct and in range");
    }
  }
}

std::vector<bool> membership(std::size_t n, const VariableSet& s) {
  std::vector<bool> in(n, false);
  for (std::size_t i : s) in[i] = true;
  return in;
}

std::pair<MultiIndex, MultiIndex> split_exponent(const MultiIndex& e, const std::vector<bool>& in) {
  MultiIndex a(e.size());
  MultiIndex b(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) (in[i] ? a : b)[i] = e[i];
  return {a, b};
}

}  // namespace

bool verify_euler_relation(const Polynomial& f, const RationalVector& c) {
  if (c.size() != f.dim()) throw PreconditionError("Euler relation needs one weight per variable");
  FsElement fs = FsElement::generator(f);
  return apply_to_fs(euler_combination(c), fs) == fs;
}

EulerSearch euler_relation_find(const Polynomial& f) {
  homogeneous_degree(f);
  const std::size_t n = f.dim();
  std::vector<RationalVector> rows;
  for (const auto& [e, coeff] : f.terms()) {
    RationalVector row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = e[i];
    rows.push_back(std::move(row));
  }
  RationalMatrix e = RationalMatrix::from_rows(rows, n);

  // [E; 1^T] c = [0; 1]
  RationalMatrix system(rows.size() + 1, n);
  RationalVector rhs(rows.size() + 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < n; ++i) system(r, i) = e(r, i);
  }
  for (std::size_t i = 0; i < n; ++i) system(rows.size(), i) = 1;
  rhs.back() = 1;

  EulerSearch out;
  out.c = solve(system, rhs);
  if (out.c) {
    out.verified = verify_euler_relation(f, *out.c);
    return out;
  }
  auto z = solve(e.transposed(), RationalVector(n, Rational(1)));
  if (!z) throw std::logic_error("Euler system infeasible without a row-space certificate");
  out.certificate = *z;
  return out;
}

std::optional<SplitReport> bidegree_split_check(const Polynomial& f, const VariableSet& s) {
  const unsigned d = homogeneous_degree(f);
  check_split(f, s);
  const auto in = membership(f.dim(), s);
  std::optional<unsigned> k;
  for (const auto& [e, coeff] : f.terms()) {
    unsigned ks = split_exponent(e, in).first.total();
    if (k && *k != ks) return std::nullopt;
    k = ks;
  }
  SplitReport out;
  out.s = s;
  out.k = *k;
  out.d = d;
  out.n = f.dim();
  out.l = s.size();
  const long gap = static_cast<long>(out.n * out.k) - static_cast<long>(out.d * out.l);
  if (gap == 0) {
    out.balanced = true;
    return out;
  }
  Rational first = make_rational(-static_cast<long>(d - out.k), gap);
  Rational second = make_rational(static_cast<long>(out.k), gap);
  out.coefficients = std::make_pair(first, second);
  for (std::size_t i = 0; i < out.n; ++i) out.c.push_back(in[i] ? first : second);
  out.verified = verify_euler_relation(f, out.c);
  return out;
}

SeparabilityReport separability_test(const Polynomial& f, const VariableSet& s) {
  check_split(f, s);
  SeparabilityReport out;
  out.s = s;
  const auto in = membership(f.dim(), s);
  std::map<MultiIndex, std::size_t> row_of;
  std::map<MultiIndex, std::size_t> col_of;
  for (const auto& [e, coeff] : f.terms()) {
    auto [a, b] = split_exponent(e, in);
    row_of.emplace(a, row_of.size());
    col_of.emplace(b, col_of.size());
  }
  RationalMatrix m(row_of.size(), col_of.size());
  for (const auto& [e, coeff] : f.terms()) {
    auto [a, b] = split_exponent(e, in);
    m(row_of.at(a), col_of.at(b)) = coeff;
  }
  out.rank = rank(m);
  if (out.rank != 1) return out;

  // Rank one: f = (column j0) (row i0) / pivot.
  const auto& [e0, pivot] = *f.terms().begin();
  auto [a0, b0] = split_exponent(e0, in);
  Polynomial g1(f.dim());
  Polynomial g2(f.dim());
  for (const auto& [a, i] : row_of) g1.add_term(a, m(i, col_of.at(b0)));
  for (const auto& [b, j] : col_of) g2.add_term(b, m(row_of.at(a0), j) / pivot);
  if (!(g1 * g2 == f)) throw std::logic_error("rank-one split failed to multiply back");
  out.separable = true;
  out.factors = std::make_pair(std::move(g1), std::move(g2));
  return out;
}

ScreenReport conjecture61_screen(const Polynomial& f) {
  ScreenReport out;
  out.d = homogeneous_degree(f);
  out.n = f.dim();
  out.euler = euler_relation_find(f);
  const std::size_t n = f.dim();
  if (n >= 2 && n < 63) {
    // Bit 0 always set: each unordered bipartition once.
    for (unsigned long long mask = 1; mask < (1ULL << n) - 1; mask += 2) {
      VariableSet s;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1ULL) s.push_back(i);
      }
      if (auto split = bidegree_split_check(f, s)) {
        out.splits.push_back(*split);
        if (!split->balanced) out.witnesses.push_back(*split);
      }
      SeparabilityReport sep = separability_test(f, s);
      if (sep.separable) out.separable.push_back(std::move(sep));
    }
  }
  if (!out.witnesses.empty()) {
    out.verdict = "bidegree-pure split found: the hypothesis fails in these coordinates, the conjecture is silent";
  } else if (!out.separable.empty()) {
    out.verdict = "coordinate factorization found: f decomposes in these coordinates";
  } else {
    out.verdict = "no coordinate witness found";
  }
  return out;
}

}  // namespace bsroots
