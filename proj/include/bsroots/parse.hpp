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

// Text formats for polynomials and operators.
//
// Expressions use tokens x1..xn, d1..dn and s, rational literals, the binary
// operators + - * and ^ (non-negative integer exponent), division by a
// constant, and parentheses. Products are taken in D[s], so "d1*x1" reads as
// x1*d1 + 1. Examples:
//   "x1*x2*x3 + x1^2*x4 + x2^2*x4"
//   "-1/2*x1*d1 - 1/2*x2*d2 + x3*d3 + x4*d4"
//   "(s+1)^2"

#ifndef BSROOTS_PARSE_HPP_
#define BSROOTS_PARSE_HPP_

#include <cstddef>
#include <optional>
#include <string_view>

#include "bsroots/fs.hpp"
#include "bsroots/polynomial.hpp"
#include "bsroots/weyl.hpp"

namespace bsroots {

// Largest variable index appearing in the text (x_i or d_i), 0 if none.
std::size_t max_variable_index(std::string_view text);

// The dimension is max(dim, largest index in the text); dim smaller than an
// index that appears is a ParseError.
WeylOperator parse_operator(std::string_view text, std::optional<std::size_t> dim = std::nullopt);

// Rejects d_i and s.
Polynomial parse_polynomial(std::string_view text, std::optional<std::size_t> dim = std::nullopt);

// Univariate in s only.
SUnivariate parse_s_polynomial(std::string_view text);

}  // namespace bsroots

#endif  // BSROOTS_PARSE_HPP_
