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

#include "bsroots/parse.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace bsroots {

namespace {

struct Token {
  enum class Kind { kNumber, kX, kD, kS, kOp, kEnd };
  Kind kind;
  std::string text;     // digits or operator character
  std::size_t index{};  // 0-based variable index for kX / kD
  std::size_t pos{};
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto read_digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = read_digits(i);
      out.push_back({Token::Kind::kNumber, std::string(s.substr(i, j - i)), 0, i});
      i = j;
    } else if (c == 'x' || c == 'd') {
      std::size_t j = read_digits(i + 1);
      if (j == i + 1) throw ParseError("variable '" + std::string(1, c) + "' needs an index at " + std::to_string(i));
      std::size_t idx = std::stoul(std::string(s.substr(i + 1, j - i - 1)));
      if (idx == 0) throw ParseError("variable indices start at 1");
      out.push_back({c == 'x' ? Token::Kind::kX : Token::Kind::kD, "", idx - 1, i});
      i = j;
    } else if (c == 's') {
      out.push_back({Token::Kind::kS, "", 0, i});
      ++i;
    } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::kOp, std::string(1, c), 0, i});
      ++i;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' at " + std::to_string(i));
    }
  }
  out.push_back({Token::Kind::kEnd, "", 0, s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::size_t n) : tokens_(std::move(tokens)), n_(n) {}

  WeylOperator parse() {
    WeylOperator out = expr();
    if (peek().kind != Token::Kind::kEnd) fail("trailing input");
    return out;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at_op(char c) const { return peek().kind == Token::Kind::kOp && peek().text[0] == c; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(peek().pos));
  }

  WeylOperator expr() {
    WeylOperator acc = term();
    while (at_op('+') || at_op('-')) {
      bool minus = at_op('-');
      ++pos_;
      WeylOperator rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  WeylOperator term() {
    WeylOperator acc = unary();
    while (at_op('*') || at_op('/')) {
      bool divide = at_op('/');
      ++pos_;
      WeylOperator rhs = unary();
      if (divide) {
        const auto& terms = rhs.terms();
        if (terms.size() != 1 || terms.begin()->first.weight() != 0 || terms.begin()->first.s_exp != 0 ||
            !terms.begin()->first.x_exp.is_zero()) {
          fail("division only by a nonzero constant");
        }
        acc = acc.scaled(1 / terms.begin()->second);
      } else {
        acc = acc * rhs;
      }
    }
    return acc;
  }

  WeylOperator unary() {
    if (at_op('-')) {
      ++pos_;
      return -unary();
    }
    if (at_op('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  WeylOperator power() {
    WeylOperator base = primary();
    if (at_op('^')) {
      ++pos_;
      if (peek().kind != Token::Kind::kNumber) fail("exponent must be a non-negative integer");
      unsigned long k = std::stoul(peek().text);
      if (k > 1000) fail("exponent too large");
      ++pos_;
      return pow(base, static_cast<unsigned>(k));
    }
    return base;
  }

  WeylOperator primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Token::Kind::kNumber: {
        ++pos_;
        return WeylOperator::constant(n_, Rational(Integer(t.text, 10)));
      }
      case Token::Kind::kX:
        ++pos_;
        return WeylOperator::x(n_, t.index);
      case Token::Kind::kD:
        ++pos_;
        return WeylOperator::d(n_, t.index);
      case Token::Kind::kS:
        ++pos_;
        return WeylOperator::s(n_);
      case Token::Kind::kOp:
        if (t.text == "(") {
          ++pos_;
          WeylOperator inner = expr();
          if (!at_op(')')) fail("expected ')'");
          ++pos_;
          return inner;
        }
        fail("unexpected '" + t.text + "'");
      case Token::Kind::kEnd:
        fail("unexpected end of input");
    }
    fail("unexpected token");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t n_;
};

std::size_t max_index(const std::vector<Token>& tokens) {
  std::size_t n = 0;
  for (const auto& t : tokens) {
    if (t.kind == Token::Kind::kX || t.kind == Token::Kind::kD) n = std::max(n, t.index + 1);
  }
  return n;
}

}  // namespace

std::size_t max_variable_index(std::string_view text) { return max_index(tokenize(text)); }

WeylOperator parse_operator(std::string_view text, std::optional<std::size_t> dim) {
  auto tokens = tokenize(text);
  std::size_t found = max_index(tokens);
  if (dim && *dim < found) {
    throw ParseError("expression uses variable " + std::to_string(found) + " but dimension is " +
                     std::to_string(*dim));
  }
  std::size_t n = dim ? *dim : found;
  return Parser(std::move(tokens), n).parse();
}

Polynomial parse_polynomial(std::string_view text, std::optional<std::size_t> dim) {
  WeylOperator op = parse_operator(text, dim);
  Polynomial out(op.dim());
  for (const auto& [m, c] : op.terms()) {
    if (m.s_exp != 0 || !m.d_exp.is_zero()) throw ParseError("polynomial may not contain d_i or s");
    out.add_term(m.x_exp, c);
  }
  return out;
}

SUnivariate parse_s_polynomial(std::string_view text) {
  WeylOperator op = parse_operator(text, 0);
  std::vector<Rational> coeffs;
  for (const auto& [m, c] : op.terms()) {
    if (coeffs.size() <= m.s_exp) coeffs.resize(m.s_exp + 1);
    coeffs[m.s_exp] += c;
  }
  return SUnivariate(std::move(coeffs));
}

}  // namespace bsroots
