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

#ifndef BSROOTS_RATIONAL_HPP_
#define BSROOTS_RATIONAL_HPP_

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bsroots {

// Exact rationals. mpq_class keeps results of arithmetic canonical; values
// built from a numerator/denominator pair go through make_rational().
using Rational = mpq_class;
using Integer = mpz_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an input violates an operation's precondition (dimension
// mismatch, decomposable arrangement, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// Parses "p", "-p", "p/q". Throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);
Integer floor(const Rational& q);
Integer factorial(unsigned k);

}  // namespace bsroots

#endif  // BSROOTS_RATIONAL_HPP_
