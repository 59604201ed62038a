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

#include "bsroots/fs.hpp"

#include <map>

namespace bsroots {

FsElement::FsElement(Polynomial f, SPolynomial numerator, unsigned fpow)
    : f_(std::move(f)), num_(std::move(numerator)), fpow_(fpow) {
  if (f_.is_zero()) throw PreconditionError("f^s needs a nonzero f");
  if (num_.dim() != f_.dim()) throw PreconditionError("numerator and f differ in dimension");
  normalize();
}

FsElement FsElement::generator(const Polynomial& f) {
  return FsElement(f, SPolynomial(Polynomial::constant(f.dim(), 1)), 0);
}

FsElement FsElement::times_generator(const Polynomial& f, const Polynomial& g) {
  return FsElement(f, SPolynomial(g), 0);
}

void FsElement::normalize() {
  if (num_.is_zero()) {
    fpow_ = 0;
    return;
  }
  while (fpow_ > 0) {
    SPolynomial reduced(f_.dim());
    for (std::size_t k = 0; k < num_.size(); ++k) {
      const Polynomial& c = num_.coefficients()[k];
      if (c.is_zero()) continue;
      auto q = divides_exact(f_, c);
      if (!q) return;
      reduced.add(k, *q);
    }
    num_ = std::move(reduced);
    --fpow_;
  }
}

void FsElement::check_reference(const FsElement& other) const {
  if (!(f_ == other.f_)) throw PreconditionError("f^s elements over different f");
}

FsElement FsElement::times_s() const { return FsElement(f_, num_.times_s(), fpow_); }

FsElement FsElement::times(const Polynomial& g) const { return FsElement(f_, num_.times(g), fpow_); }

FsElement FsElement::scaled(const Rational& c) const { return FsElement(f_, num_.scaled(c), fpow_); }

FsElement FsElement::partial(std::size_t i) const {
  if (i >= f_.dim()) throw PreconditionError("derivative index out of range");
  Polynomial df = f_.derivative(i);
  SPolynomial first = num_.derivative(i).times(f_);
  SPolynomial second = num_.times(df);
  // (s - m) * N * d_i f
  SPolynomial twisted = second.times_s() - second.scaled(Rational(fpow_));
  return FsElement(f_, first + twisted, fpow_ + 1);
}

FsElement& FsElement::operator+=(const FsElement& other) {
  check_reference(other);
  unsigned m = std::max(fpow_, other.fpow_);
  SPolynomial a = num_.times(pow(f_, m - fpow_));
  SPolynomial b = other.num_.times(pow(f_, m - other.fpow_));
  *this = FsElement(f_, a + b, m);
  return *this;
}

FsElement& FsElement::operator-=(const FsElement& other) { return *this += other.scaled(-1); }

std::string to_string(const FsElement& e) {
  if (e.is_zero()) return "0";
  std::string num = to_string(e.numerator());
  if (e.fpow() == 0) return "[" + num + "] * f^s";
  return "[" + num + "] / f^" + std::to_string(e.fpow()) + " * f^s";
}

FsElement apply_to_fs(const WeylOperator& p, const FsElement& e) {
  if (p.dim() != e.reference().dim()) throw PreconditionError("operator and f differ in dimension");
  // d^alpha e, cached: several terms usually share a derivative pattern.
  std::map<MultiIndex, FsElement> derived;
  auto derivative = [&](const MultiIndex& alpha) -> const FsElement& {
    auto it = derived.find(alpha);
    if (it != derived.end()) return it->second;
    FsElement cur = e;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      for (unsigned k = 0; k < alpha[i]; ++k) cur = cur.partial(i);
    }
    return derived.emplace(alpha, std::move(cur)).first->second;
  };
  FsElement out(e.reference(), SPolynomial(e.reference().dim()), 0);
  for (const auto& [m, c] : p.terms()) {
    FsElement term = derivative(m.d_exp);
    for (unsigned k = 0; k < m.s_exp; ++k) term = term.times_s();
    term = term.times(Polynomial::monomial(m.x_exp, c));
    out += term;
  }
  return out;
}

FsElement t_shift(const FsElement& e) {
  SPolynomial num = e.numerator().shift_s(1);
  if (e.fpow() > 0) return FsElement(e.reference(), num, e.fpow() - 1);
  return FsElement(e.reference(), num.times(e.reference()), 0);
}

bool is_annihilator(const WeylOperator& p, const Polynomial& f) {
  return apply_to_fs(p, FsElement::generator(f)).is_zero();
}

// ---------------------------------------------------------------------------

SUnivariate::SUnivariate(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

SUnivariate SUnivariate::from_shifts(const std::vector<Rational>& root_shifts) {
  SUnivariate out({Rational(1)});
  for (const auto& a : root_shifts) out = out * SUnivariate({a, Rational(1)});
  return out;
}

Rational SUnivariate::evaluate(const Rational& s) const {
  Rational acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * s + coeffs_[k];
  return acc;
}

SPolynomial SUnivariate::embed(std::size_t n) const {
  SPolynomial out(n);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.add(k, Polynomial::constant(n, coeffs_[k]));
  return out;
}

SUnivariate operator*(const SUnivariate& a, const SUnivariate& b) {
  if (a.is_zero() || b.is_zero()) return SUnivariate();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return SUnivariate(std::move(c));
}

std::string to_string(const SUnivariate& b) {
  if (b.is_zero()) return "0";
  std::string out;
  const auto& c = b.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    Rational mag = abs(c[k]);
    if (out.empty()) {
      if (c[k] < 0) out += "-";
    } else {
      out += c[k] < 0 ? " - " : " + ";
    }
    std::string sp = k == 0 ? "" : (k == 1 ? "s" : "s^" + std::to_string(k));
    if (sp.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += sp;
    } else {
      out += to_string(mag) + "*" + sp;
    }
  }
  return out;
}

BSCheck bs_pair_check(const BSPair& pair, const Polynomial& f) {
  if (f.is_zero()) throw PreconditionError("bs_pair_check needs f != 0");
  if (f.coefficient(MultiIndex(f.dim())) != 0) throw PreconditionError("bs_pair_check needs f(0) = 0");
  if (pair.op.dim() != f.dim()) throw PreconditionError("operator and f differ in dimension");
  FsElement lhs = apply_to_fs(pair.op, FsElement::times_generator(f, f));
  FsElement rhs(f, pair.bpoly.embed(f.dim()), 0);
  FsElement residual = lhs - rhs;
  return {residual.is_zero(), residual};
}

WeylOperator euler_combination(const std::vector<Rational>& c) {
  const std::size_t n = c.size();
  WeylOperator out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out += (WeylOperator::d(n, i) * WeylOperator::x(n, i)).scaled(c[i]);
  }
  return out;
}

EulerWitness euler_root_witness(const Polynomial& f) {
  auto deg = is_homogeneous(f);
  if (!deg || deg->is_minus_infinity() || deg->value() == 0) {
    throw PreconditionError("euler_root_witness needs a homogeneous f of positive degree");
  }
  const std::size_t n = f.dim();
  EulerWitness w{.n = static_cast<unsigned>(n),
                 .d = deg->value(),
                 .n_over_d = make_rational(static_cast<long>(n), deg->value()),
                 .s_fs = FsElement::generator(f).times_s(),
                 .euler = FsElement::generator(f),
                 .shifted = FsElement::generator(f)};
  const Rational inv_d = make_rational(1, w.d);
  FsElement fs = FsElement::generator(f);
  WeylOperator euler_field(n);
  for (std::size_t i = 0; i < n; ++i) euler_field += WeylOperator::x(n, i) * WeylOperator::d(n, i);
  w.euler = apply_to_fs(euler_field.scaled(inv_d), fs);
  std::vector<Rational> c(n, inv_d);
  w.shifted = fs.scaled(-w.n_over_d) + apply_to_fs(euler_combination(c), fs);
  w.verified = w.s_fs == w.euler && w.s_fs == w.shifted;
  return w;
}

}  // namespace bsroots
