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

#include "bsroots/forms.hpp"

#include <algorithm>

namespace bsroots {

namespace {

// Sorts indices in place and returns the permutation sign; 0 on a repeat.
int sort_with_sign(std::vector<std::size_t>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace

DifferentialForm::DifferentialForm(std::size_t n, std::size_t degree) : n_(n), degree_(degree) {}

DifferentialForm DifferentialForm::basis(std::size_t n, const std::vector<std::size_t>& indices,
                                         const Polynomial& coeff) {
  DifferentialForm out(n, indices.size());
  for (std::size_t i : indices) {
    if (i >= n) throw PreconditionError("form index out of range");
  }
  std::vector<std::size_t> idx = indices;
  int sign = sort_with_sign(idx);
  if (sign != 0) out.add(idx, sign > 0 ? coeff : -coeff);
  return out;
}

DifferentialForm DifferentialForm::top(std::size_t n) {
  FormIndex all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  return basis(n, all, Polynomial::constant(n, 1));
}

DifferentialForm DifferentialForm::function(const Polynomial& g) {
  DifferentialForm out(g.dim(), 0);
  out.add({}, g);
  return out;
}

DifferentialForm DifferentialForm::exact(const Polynomial& f) {
  return exterior_d(function(f));
}

Polynomial DifferentialForm::component(const FormIndex& index) const {
  auto it = components_.find(index);
  return it == components_.end() ? Polynomial(n_) : it->second;
}

void DifferentialForm::add(const FormIndex& sorted_index, const Polynomial& coeff) {
  if (sorted_index.size() != degree_) throw PreconditionError("form component has wrong degree");
  if (coeff.dim() != n_) throw PreconditionError("form coefficient has wrong dimension");
  if (coeff.is_zero()) return;
  auto [it, inserted] = components_.try_emplace(sorted_index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) components_.erase(it);
  }
}

DifferentialForm DifferentialForm::scaled(const Polynomial& g) const {
  DifferentialForm out(n_, degree_);
  for (const auto& [idx, c] : components_) out.add(idx, c * g);
  return out;
}

void DifferentialForm::check_compatible(const DifferentialForm& other) const {
  if (n_ != other.n_ || degree_ != other.degree_) {
    throw PreconditionError("adding forms of different dimension or degree");
  }
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& other) {
  check_compatible(other);
  for (const auto& [idx, c] : other.components_) add(idx, c);
  return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& other) {
  check_compatible(other);
  for (const auto& [idx, c] : other.components_) add(idx, -c);
  return *this;
}

DifferentialForm exterior_d(const DifferentialForm& omega) {
  const std::size_t n = omega.dim();
  DifferentialForm out(n, omega.degree() + 1);
  if (omega.degree() >= n) return out;
  for (const auto& [idx, c] : omega.components()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (std::binary_search(idx.begin(), idx.end(), i)) continue;
      Polynomial di = c.derivative(i);
      if (di.is_zero()) continue;
      // dx_i ^ dx_I: moving dx_i past the smaller indices of I.
      auto pos = std::lower_bound(idx.begin(), idx.end(), i);
      std::size_t before = static_cast<std::size_t>(pos - idx.begin());
      FormIndex merged(idx.begin(), pos);
      merged.push_back(i);
      merged.insert(merged.end(), pos, idx.end());
      out.add(merged, before % 2 == 0 ? di : -di);
    }
  }
  return out;
}

DifferentialForm wedge(const DifferentialForm& omega, const DifferentialForm& eta) {
  if (omega.dim() != eta.dim()) throw PreconditionError("wedge of forms on different spaces");
  const std::size_t n = omega.dim();
  DifferentialForm out(n, omega.degree() + eta.degree());
  if (omega.degree() + eta.degree() > n) return out;
  for (const auto& [i1, c1] : omega.components()) {
    for (const auto& [i2, c2] : eta.components()) {
      std::vector<std::size_t> idx = i1;
      idx.insert(idx.end(), i2.begin(), i2.end());
      int sign = sort_with_sign(idx);
      if (sign == 0) continue;
      Polynomial c = c1 * c2;
      out.add(idx, sign > 0 ? c : -c);
    }
  }
  return out;
}

DifferentialForm euler_contraction(const DifferentialForm& omega, unsigned d) {
  if (d == 0) throw PreconditionError("euler_contraction needs a positive degree");
  const std::size_t n = omega.dim();
  if (omega.degree() == 0) return DifferentialForm(n, 0);
  DifferentialForm out(n, omega.degree() - 1);
  Rational inv = make_rational(1, d);
  for (const auto& [idx, c] : omega.components()) {
    for (std::size_t j = 0; j < idx.size(); ++j) {
      FormIndex rest = idx;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
      Polynomial term = c * Polynomial::variable(n, idx[j]);
      out.add(rest, term.scaled(j % 2 == 0 ? inv : -inv));
    }
  }
  return out;
}

DifferentialForm omega0(std::size_t n, unsigned d) {
  if (n == 0) throw PreconditionError("omega0 needs n >= 1");
  return euler_contraction(DifferentialForm::top(n), d);
}

std::string to_string(const DifferentialForm& omega) {
  if (omega.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, c] : omega.components()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c) + ")";
    for (std::size_t k = 0; k < idx.size(); ++k) {
      out += (k == 0 ? "*" : "^");
      out += "dx" + std::to_string(idx[k] + 1);
    }
  }
  return out;
}

}  // namespace bsroots
