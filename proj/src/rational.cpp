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

#include "bsroots/rational.hpp"

#include <cctype>

namespace bsroots {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational literal '" + std::string(text) + "'");
  }
  Integer p(std::string(num), 10);
  Integer q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) p = -p;
  return make_rational(p, q);
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Integer factorial(unsigned k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

}  // namespace bsroots
