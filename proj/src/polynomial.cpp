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

#include "bsroots/polynomial.hpp"

#include <numeric>
#include <sstream>

namespace bsroots {

// ---------------------------------------------------------------------------
// MultiIndex

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i) {
  MultiIndex e(n);
  e.exps_.at(i) = 1;
  return e;
}

unsigned MultiIndex::total() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Integer MultiIndex::factorial() const {
  Integer out = 1;
  for (unsigned e : exps_) out *= bsroots::factorial(e);
  return out;
}

bool MultiIndex::is_zero() const {
  for (unsigned e : exps_) {
    if (e != 0) return false;
  }
  return true;
}

bool MultiIndex::divides(const MultiIndex& other) const {
  if (size() != other.size()) throw PreconditionError("multi-index length mismatch");
  for (std::size_t i = 0; i < size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (size() != other.size()) throw PreconditionError("multi-index length mismatch");
  MultiIndex out(*this);
  for (std::size_t i = 0; i < size(); ++i) out.exps_[i] += other.exps_[i];
  return out;
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (!other.divides(*this)) throw PreconditionError("multi-index subtraction underflow");
  MultiIndex out(*this);
  for (std::size_t i = 0; i < size(); ++i) out.exps_[i] -= other.exps_[i];
  return out;
}

bool GrlexLess::operator()(const MultiIndex& a, const MultiIndex& b) const {
  unsigned ta = a.total();
  unsigned tb = b.total();
  if (ta != tb) return ta < tb;
  return a.exponents() < b.exponents();
}

unsigned Degree::value() const {
  if (!value_) throw std::logic_error("degree of the zero polynomial is minus infinity");
  return *value_;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(std::size_t n, const Rational& c) {
  Polynomial p(n);
  p.add_term(MultiIndex(n), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t i) {
  return monomial(MultiIndex::unit(n, i), 1);
}

Polynomial Polynomial::monomial(const MultiIndex& e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

void Polynomial::add_term(const MultiIndex& e, const Rational& c) {
  if (e.size() != n_) throw PreconditionError("monomial length does not match polynomial dimension");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational Polynomial::coefficient(const MultiIndex& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Degree Polynomial::degree() const {
  if (terms_.empty()) return Degree::minus_infinity();
  return Degree::of(terms_.rbegin()->first.total());
}

const Polynomial::Terms::value_type& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return *terms_.rbegin();
}

Polynomial Polynomial::derivative(std::size_t i) const {
  Polynomial out(n_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    MultiIndex d = e;
    d[i] -= 1;
    out.add_term(d, c * e[i]);
  }
  return out;
}

Polynomial Polynomial::shifted(const MultiIndex& e) const {
  Polynomial out(n_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m + e, c);
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(n_);
  Polynomial out(n_);
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != n_) throw PreconditionError("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < n_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

void Polynomial::check_dim(const Polynomial& other) const {
  if (n_ != other.n_) {
    throw PreconditionError("polynomial dimension mismatch (" + std::to_string(n_) + " vs " +
                            std::to_string(other.n_) + ")");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_dim(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_dim(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_dim(b);
  Polynomial out(a.n_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.n_ == b.n_ && a.terms_ == b.terms_;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
  switch (op) {
    case PolyOp::kAdd:
      return a + b;
    case PolyOp::kSub:
      return a - b;
    case PolyOp::kMul:
      return a * b;
  }
  throw std::logic_error("unknown polynomial operation");
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial out = Polynomial::constant(p.dim(), 1);
  for (unsigned i = 0; i < k; ++i) out = out * p;
  return out;
}

std::optional<Polynomial> divides_exact(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) throw PreconditionError("division by the zero polynomial");
  if (f.dim() != g.dim()) throw PreconditionError("polynomial dimension mismatch");
  const auto& [lead_exp, lead_coeff] = f.leading_term();
  Polynomial quotient(f.dim());
  Polynomial rest = g;
  while (!rest.is_zero()) {
    const auto& [e, c] = rest.leading_term();
    if (!lead_exp.divides(e)) return std::nullopt;
    Polynomial step = Polynomial::monomial(e - lead_exp, c / lead_coeff);
    quotient += step;
    rest -= step * f;
  }
  return quotient;
}

std::optional<Degree> is_homogeneous(const Polynomial& f) {
  if (f.is_zero()) return Degree::minus_infinity();
  unsigned d = f.terms().begin()->first.total();
  for (const auto& [e, c] : f.terms()) {
    if (e.total() != d) return std::nullopt;
  }
  return Degree::of(d);
}

namespace {

// Writes "x1^2*x3" (empty for the unit monomial).
std::string monomial_text(const MultiIndex& e, const char* var = "x") {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += var + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mono = monomial_text(e);
    if (mono.empty()) {
      os << to_string(mag);
    } else if (mag == 1) {
      os << mono;
    } else {
      os << to_string(mag) << "*" << mono;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// SPolynomial

SPolynomial::SPolynomial(const Polynomial& p) : n_(p.dim()) {
  if (!p.is_zero()) coeffs_.push_back(p);
}

SPolynomial SPolynomial::s_power(std::size_t n, unsigned k, const Rational& c) {
  SPolynomial out(n);
  out.add(k, Polynomial::constant(n, c));
  return out;
}

Polynomial SPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Polynomial(n_);
}

void SPolynomial::add(std::size_t k, const Polynomial& p) {
  if (p.dim() != n_) throw PreconditionError("SPolynomial dimension mismatch");
  if (p.is_zero()) return;
  if (coeffs_.size() <= k) coeffs_.resize(k + 1, Polynomial(n_));
  coeffs_[k] += p;
  trim();
}

void SPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

SPolynomial SPolynomial::times_s() const {
  SPolynomial out(n_);
  if (coeffs_.empty()) return out;
  out.coeffs_.reserve(coeffs_.size() + 1);
  out.coeffs_.push_back(Polynomial(n_));
  for (const auto& c : coeffs_) out.coeffs_.push_back(c);
  return out;
}

SPolynomial SPolynomial::scaled(const Rational& c) const {
  SPolynomial out(n_);
  if (c == 0) return out;
  for (const auto& p : coeffs_) out.coeffs_.push_back(p.scaled(c));
  return out;
}

SPolynomial SPolynomial::times(const Polynomial& p) const {
  SPolynomial out(n_);
  for (const auto& c : coeffs_) out.coeffs_.push_back(c * p);
  out.trim();
  return out;
}

SPolynomial SPolynomial::derivative(std::size_t i) const {
  SPolynomial out(n_);
  for (const auto& c : coeffs_) out.coeffs_.push_back(c.derivative(i));
  out.trim();
  return out;
}

SPolynomial SPolynomial::shift_s(const Rational& c) const {
  // (s + c)^k = sum_j C(k, j) c^(k-j) s^j
  SPolynomial out(n_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    for (std::size_t j = 0; j <= k; ++j) {
      Integer binom;
      mpz_bin_uiui(binom.get_mpz_t(), k, j);
      Rational power = 1;
      for (std::size_t t = j; t < k; ++t) power *= c;
      out.add(j, coeffs_[k].scaled(Rational(binom) * power));
    }
  }
  return out;
}

SPolynomial& SPolynomial::operator+=(const SPolynomial& other) {
  if (other.n_ != n_) throw PreconditionError("SPolynomial dimension mismatch");
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) add(k, other.coeffs_[k]);
  return *this;
}

SPolynomial& SPolynomial::operator-=(const SPolynomial& other) {
  if (other.n_ != n_) throw PreconditionError("SPolynomial dimension mismatch");
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) add(k, -other.coeffs_[k]);
  return *this;
}

SPolynomial operator*(const SPolynomial& a, const SPolynomial& b) {
  if (a.n_ != b.n_) throw PreconditionError("SPolynomial dimension mismatch");
  SPolynomial out(a.n_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.add(i + j, a.coeffs_[i] * b.coeffs_[j]);
  }
  return out;
}

std::string to_string(const SPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Polynomial& c = p.coefficients()[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string sp = k == 0 ? "" : (k == 1 ? "s" : "s^" + std::to_string(k));
    if (sp.empty()) {
      out += "(" + to_string(c) + ")";
    } else {
      out += "(" + to_string(c) + ")*" + sp;
    }
  }
  return out;
}

}  // namespace bsroots
