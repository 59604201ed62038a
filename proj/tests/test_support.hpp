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


// Small constructors shared by the unit tests.

#ifndef BSROOTS_TESTS_TEST_SUPPORT_HPP_
#define BSROOTS_TESTS_TEST_SUPPORT_HPP_

#include <string>
#include <vector>

#include "bsroots/arrangement.hpp"
#include "bsroots/parse.hpp"
#include "bsroots/rational.hpp"

namespace bsroots::testing {

inline Rational Q(const std::string& text) { return parse_rational(text); }

inline Polynomial P(const std::string& text, std::size_t n) { return parse_polynomial(text, n); }

inline WeylOperator Op(const std::string& text, std::size_t n) { return parse_operator(text, n); }

inline RationalVector V(std::initializer_list<const char*> entries) {
  RationalVector v;
  for (const char* e : entries) v.push_back(parse_rational(e));
  return v;
}

// Forms given by integer coefficient rows, multiplicities default to 1.
inline Arrangement A(std::size_t n, const std::vector<std::vector<long>>& rows, std::vector<unsigned> mults = {}) {
  std::vector<RationalVector> forms;
  for (const auto& row : rows) {
    RationalVector f;
    for (long c : row) f.emplace_back(c);
    forms.push_back(std::move(f));
  }
  if (mults.empty()) mults.assign(forms.size(), 1);
  return Arrangement(n, std::move(forms), std::move(mults));
}

inline Arrangement xy() { return A(2, {{1, 0}, {0, 1}}); }
inline Arrangement braid3() { return A(2, {{1, 0}, {0, 1}, {1, 1}}); }
inline Arrangement xyz_sum() { return A(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}); }

}  // namespace bsroots::testing

#endif  // BSROOTS_TESTS_TEST_SUPPORT_HPP_
