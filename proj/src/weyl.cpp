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

#include "bsroots/weyl.hpp"

#include <sstream>
#include <tuple>

namespace bsroots {

namespace {

Integer falling(unsigned b, unsigned j) {
  Integer out = 1;
  for (unsigned t = 0; t < j; ++t) out *= b - t;
  return out;
}

Integer binomial(unsigned a, unsigned j) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), a, j);
  return out;
}

int parity_sign(unsigned k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

WeylOperator WeylOperator::constant(std::size_t n, const Rational& c) {
  WeylOperator op(n);
  op.add_term({MultiIndex(n), MultiIndex(n), 0}, c);
  return op;
}

WeylOperator WeylOperator::x(std::size_t n, std::size_t i) {
  return monomial(MultiIndex::unit(n, i), MultiIndex(n), 0, 1);
}

WeylOperator WeylOperator::d(std::size_t n, std::size_t i) {
  return monomial(MultiIndex(n), MultiIndex::unit(n, i), 0, 1);
}

WeylOperator WeylOperator::s(std::size_t n) { return monomial(MultiIndex(n), MultiIndex(n), 1, 1); }

WeylOperator WeylOperator::monomial(const MultiIndex& x_exp, const MultiIndex& d_exp, unsigned s_exp,
                                    const Rational& c) {
  if (x_exp.size() != d_exp.size()) throw PreconditionError("x and d exponents differ in length");
  WeylOperator op(x_exp.size());
  op.add_term({x_exp, d_exp, s_exp}, c);
  return op;
}

WeylOperator WeylOperator::multiplication(const Polynomial& p) {
  WeylOperator op(p.dim());
  for (const auto& [e, c] : p.terms()) op.add_term({e, MultiIndex(p.dim()), 0}, c);
  return op;
}

bool WeylOperator::has_s() const {
  for (const auto& [m, c] : terms_) {
    if (m.s_exp != 0) return true;
  }
  return false;
}

bool WeylOperator::has_d() const {
  for (const auto& [m, c] : terms_) {
    if (!m.d_exp.is_zero()) return true;
  }
  return false;
}

void WeylOperator::add_term(const WeylMonomial& m, const Rational& c) {
  if (m.x_exp.size() != n_ || m.d_exp.size() != n_) {
    throw PreconditionError("Weyl monomial has wrong dimension");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylOperator WeylOperator::scaled(const Rational& c) const {
  WeylOperator out(n_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

void WeylOperator::check_dim(const WeylOperator& other) const {
  if (n_ != other.n_) throw PreconditionError("Weyl operator dimension mismatch");
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& other) {
  check_dim(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& other) {
  check_dim(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
  a.check_dim(b);
  const std::size_t n = a.n_;
  WeylOperator out(n);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      // x^ba d^aa * x^bb d^ab: commute d^aa past x^bb variable by variable.
      std::vector<unsigned> limit(n);
      for (std::size_t i = 0; i < n; ++i) limit[i] = std::min(ma.d_exp[i], mb.x_exp[i]);
      std::vector<unsigned> j(n, 0);
      while (true) {
        Rational coeff = ca * cb;
        MultiIndex xe = ma.x_exp + mb.x_exp;
        MultiIndex de = ma.d_exp + mb.d_exp;
        for (std::size_t i = 0; i < n; ++i) {
          if (j[i] == 0) continue;
          coeff *= Rational(binomial(ma.d_exp[i], j[i]) * falling(mb.x_exp[i], j[i]));
          xe[i] -= j[i];
          de[i] -= j[i];
        }
        out.add_term({std::move(xe), std::move(de), ma.s_exp + mb.s_exp}, coeff);
        std::size_t i = 0;
        while (i < n && j[i] == limit[i]) j[i++] = 0;
        if (i == n) break;
        ++j[i];
      }
    }
  }
  return out;
}

WeylOperator pow(const WeylOperator& p, unsigned k) {
  WeylOperator out = WeylOperator::constant(p.dim(), 1);
  for (unsigned i = 0; i < k; ++i) out = out * p;
  return out;
}

std::string to_string(const WeylOperator& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Largest exponents first, as for polynomials.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    auto append = [&mono](const std::string& factor) {
      if (!mono.empty()) mono += "*";
      mono += factor;
    };
    for (std::size_t i = 0; i < m.x_exp.size(); ++i) {
      if (m.x_exp[i] == 0) continue;
      append("x" + std::to_string(i + 1) + (m.x_exp[i] > 1 ? "^" + std::to_string(m.x_exp[i]) : ""));
    }
    for (std::size_t i = 0; i < m.d_exp.size(); ++i) {
      if (m.d_exp[i] == 0) continue;
      append("d" + std::to_string(i + 1) + (m.d_exp[i] > 1 ? "^" + std::to_string(m.d_exp[i]) : ""));
    }
    if (m.s_exp > 0) append("s" + (m.s_exp > 1 ? "^" + std::to_string(m.s_exp) : std::string()));
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
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

WeylOperator normalize(std::size_t n, const Word& word) {
  WeylOperator out = WeylOperator::constant(n, 1);
  for (const Generator& g : word) {
    switch (g.kind) {
      case Generator::Kind::kX:
        if (g.index >= n) throw PreconditionError("generator index out of range");
        out = out * WeylOperator::x(n, g.index);
        break;
      case Generator::Kind::kD:
        if (g.index >= n) throw PreconditionError("generator index out of range");
        out = out * WeylOperator::d(n, g.index);
        break;
      case Generator::Kind::kS:
        out = out * WeylOperator::s(n);
        break;
      case Generator::Kind::kScalar:
        out = out.scaled(g.scalar);
        break;
    }
  }
  return out;
}

AntinormalForm to_antinormal(const MultiIndex& beta, const MultiIndex& alpha) {
  if (beta.size() != alpha.size()) throw PreconditionError("multi-index length mismatch");
  const std::size_t n = beta.size();
  AntinormalForm out;
  // gamma ranges over max(0, beta - alpha) <= gamma <= beta.
  std::vector<unsigned> lo(n);
  for (std::size_t i = 0; i < n; ++i) lo[i] = beta[i] > alpha[i] ? beta[i] - alpha[i] : 0;
  MultiIndex gamma{lo};
  const Integer numerator_base = alpha.factorial() * beta.factorial();
  while (true) {
    MultiIndex rest = beta - gamma;
    MultiIndex d_exp = (alpha + gamma) - beta;    // alpha - beta + gamma
    Integer denom = gamma.factorial() * rest.factorial() * d_exp.factorial();
    Rational c = make_rational(numerator_base, denom);
    if (rest.total() % 2 == 1) c = -c;
    out[{d_exp, gamma}] += c;
    std::size_t i = 0;
    while (i < n && gamma[i] == beta[i]) {
      gamma[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++gamma[i];
  }
  return out;
}

AntinormalForm to_antinormal(const WeylOperator& p) {
  if (p.has_s()) throw PreconditionError("anti-normal form is defined here for s-free operators");
  AntinormalForm out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [key, v] : to_antinormal(m.x_exp, m.d_exp)) {
      Rational& slot = out[key];
      slot += c * v;
      if (slot == 0) out.erase(key);
    }
  }
  return out;
}

WeylOperator from_antinormal(std::size_t n, const AntinormalForm& form) {
  WeylOperator out(n);
  for (const auto& [key, c] : form) {
    const auto& [d_exp, x_exp] = key;
    out += WeylOperator::monomial(MultiIndex(n), d_exp, 0, c) *
           WeylOperator::monomial(x_exp, MultiIndex(n), 0, 1);
  }
  return out;
}

std::map<int, WeylOperator> graded_parts(const WeylOperator& p) {
  std::map<int, WeylOperator> parts;
  for (const auto& [m, c] : p.terms()) {
    auto [it, inserted] = parts.try_emplace(m.weight(), WeylOperator(p.dim()));
    it->second.add_term(m, c);
  }
  return parts;
}

IdealCheck in_ideal_Dx(const WeylOperator& p) {
  // (k, s power, gamma) -> accumulated sum
  std::map<std::tuple<int, unsigned, MultiIndex>, Rational> sums;
  for (const auto& [m, c] : p.terms()) {
    int k = m.weight();
    if (k < 0 || !m.x_exp.divides(m.d_exp)) continue;
    MultiIndex gamma = m.d_exp - m.x_exp;
    Rational term = c * Rational(m.d_exp.factorial());
    if (m.d_exp.total() % 2 == 1) term = -term;
    sums[{k, m.s_exp, gamma}] += term;
  }
  IdealCheck out;
  for (const auto& [key, sum] : sums) {
    if (sum == 0) continue;
    const auto& [k, s_power, gamma] = key;
    out.member = false;
    out.failures.push_back({k, s_power, gamma, sum});
  }
  return out;
}

Rational sigma_invariant(const WeylOperator& p) {
  if (p.has_s()) throw PreconditionError("sigma_invariant expects an s-free operator");
  Rational sum = 0;
  for (const auto& [m, c] : p.terms()) {
    if (m.x_exp != m.d_exp) continue;
    sum += parity_sign(m.d_exp.total()) * Rational(m.d_exp.factorial()) * c;
  }
  return sum;
}

}  // namespace bsroots
