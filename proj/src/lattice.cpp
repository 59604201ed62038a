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

#include "bsroots/lattice.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

namespace bsroots {

namespace {

bool is_subset(const Support& a, const Support& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Positions are ranks in the hyperplane order; `to_index` maps them back.
struct Relabeling {
  std::vector<std::size_t> to_index;

  std::size_t size() const { return to_index.size(); }
  Support indices(const std::vector<std::size_t>& positions) const {
    Support out;
    for (std::size_t p : positions) out.push_back(to_index[p]);
    std::sort(out.begin(), out.end());
    return out;
  }
};

Relabeling relabel(const Arrangement& a, const HyperplaneOrder& order) {
  Relabeling out;
  if (order.empty()) {
    out.to_index.resize(a.size());
    std::iota(out.to_index.begin(), out.to_index.end(), 0);
    return out;
  }
  std::vector<bool> seen(a.size(), false);
  if (order.size() != a.size()) throw PreconditionError("hyperplane order must list every form once");
  for (std::size_t j : order) {
    if (j >= a.size() || seen[j]) throw PreconditionError("hyperplane order must be a permutation");
    seen[j] = true;
  }
  out.to_index = order;
  return out;
}

// Wedge of two sorted blocks: sign and merged set, nullopt when they meet.
std::optional<std::pair<int, std::vector<std::size_t>>> merge_sign(const std::vector<std::size_t>& a,
                                                                   const std::vector<std::size_t>& b) {
  std::vector<std::size_t> merged;
  merged.reserve(a.size() + b.size());
  int sign = 1;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      merged.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      // b[j] jumps over the a-elements not yet placed.
      if ((a.size() - i) % 2 == 1) sign = -sign;
      merged.push_back(b[j++]);
    } else {
      return std::nullopt;
    }
  }
  return std::make_pair(sign, std::move(merged));
}

using Chain = std::map<std::vector<std::size_t>, Rational>;

class OrlikSolomon {
 public:
  OrlikSolomon(const Arrangement& a, Relabeling labels) : a_(a), labels_(std::move(labels)) {
    find_circuits();
    find_nbc();
  }

  const std::vector<std::vector<std::size_t>>& circuits() const { return circuits_; }
  const std::vector<std::vector<std::vector<std::size_t>>>& nbc() const { return nbc_; }
  const Relabeling& labels() const { return labels_; }

  bool independent(const std::vector<std::size_t>& positions) const {
    return rank(a_, labels_.indices(positions)) == positions.size();
  }

  // e_T in the nbc basis.
  const Chain& reduce(const std::vector<std::size_t>& t) {
    auto it = memo_.find(t);
    if (it != memo_.end()) return it->second;
    Chain out;
    if (!independent(t)) {
      // zero
    } else if (const auto* c = broken_circuit_in(t)) {
      // e_B = -sum_{k>=1} (-1)^k e_{C - c_k} with B = C - c_0.
      std::vector<std::size_t> b(c->begin() + 1, c->end());
      std::vector<std::size_t> rest;
      std::set_difference(t.begin(), t.end(), b.begin(), b.end(), std::back_inserter(rest));
      auto front = merge_sign(b, rest);
      const int to_front = front->first;
      for (std::size_t k = 1; k < c->size(); ++k) {
        std::vector<std::size_t> face = *c;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
        auto merged = merge_sign(face, rest);
        if (!merged) continue;
        int sign = -to_front * merged->first * (k % 2 == 0 ? 1 : -1);
        Chain sub = reduce(merged->second);
        for (const auto& [s, v] : sub) out[s] += v * sign;
      }
      std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    } else {
      out[t] = 1;
    }
    return memo_.emplace(t, std::move(out)).first->second;
  }

 private:
  const std::vector<std::size_t>* broken_circuit_in(const std::vector<std::size_t>& t) const {
    for (const auto& c : circuits_) {
      if (std::includes(t.begin(), t.end(), c.begin() + 1, c.end())) return &c;
    }
    return nullptr;
  }

  void find_circuits() {
    const std::size_t r = labels_.size();
    // C = I + {j}, j = max C, I independent, every maximal proper subset of C
    // independent and C dependent.
    std::vector<std::size_t> current;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
      for (std::size_t j = from; j < r; ++j) {
        std::vector<std::size_t> c = current;
        c.push_back(j);
        if (independent(c)) {
          current.push_back(j);
          grow(j + 1);
          current.pop_back();
          continue;
        }
        if (c.size() < 2) continue;
        bool minimal = true;
        for (std::size_t k = 0; k + 1 < c.size() && minimal; ++k) {
          std::vector<std::size_t> face = c;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(k));
          minimal = independent(face);
        }
        if (minimal) circuits_.push_back(c);
      }
    };
    grow(0);
    std::sort(circuits_.begin(), circuits_.end());
  }

  void find_nbc() {
    const std::size_t r = labels_.size();
    std::vector<std::size_t> current;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
      if (nbc_.size() <= current.size()) nbc_.resize(current.size() + 1);
      nbc_[current.size()].push_back(current);
      for (std::size_t j = from; j < r; ++j) {
        current.push_back(j);
        if (independent(current) && broken_circuit_in(current) == nullptr) grow(j + 1);
        current.pop_back();
      }
    };
    grow(0);
  }

  const Arrangement& a_;
  Relabeling labels_;
  std::vector<std::vector<std::size_t>> circuits_;  // sorted positions
  std::vector<std::vector<std::vector<std::size_t>>> nbc_;
  std::map<std::vector<std::size_t>, Chain> memo_;
};

}  // namespace

IntersectionLattice mobius(const Arrangement& a, std::size_t budget) {
  IntersectionLattice out;
  out.elements.push_back({Flat{{}, 0}, 0});
  for (Flat& f : enumerate_flats(a, budget)) out.elements.push_back({std::move(f), 0});
  if (is_essential(a)) {
    Support all(a.size());
    std::iota(all.begin(), all.end(), 0);
    out.elements.push_back({Flat{all, a.dim()}, 0});
  }
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    if (i == 0) {
      out.elements[i].mobius = 1;
      continue;
    }
    Integer sum = 0;
    for (std::size_t j = 0; j < i; ++j) {
      const auto& y = out.elements[j];
      if (y.flat.dim < out.elements[i].flat.dim && is_subset(y.flat.support, out.elements[i].flat.support)) {
        sum += y.mobius;
      }
    }
    out.elements[i].mobius = -sum;
  }
  return out;
}

std::vector<Integer> char_poly(const Arrangement& a, std::size_t budget) {
  std::vector<Integer> coeffs(a.dim() + 1, 0);
  for (const auto& e : mobius(a, budget).elements) coeffs[a.dim() - e.flat.dim] += e.mobius;
  return coeffs;
}

std::string char_poly_to_string(const std::vector<Integer>& coeffs) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] == 0) continue;
    Integer mag = abs(coeffs[k]);
    if (out.empty()) {
      if (coeffs[k] < 0) out += "-";
    } else {
      out += coeffs[k] < 0 ? " - " : " + ";
    }
    std::string tp = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (tp.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += tp;
    } else {
      out += mag.get_str() + "*" + tp;
    }
  }
  return out.empty() ? "0" : out;
}

Integer chi_projective(const Arrangement& a, std::size_t budget) {
  if (!is_essential(a)) throw PreconditionError("chi of the projective complement needs an essential arrangement");
  std::vector<Integer> p = char_poly(a, budget);
  // Synthetic division by (t - 1), high degree first.
  std::vector<Integer> q(p.size() - 1);
  Integer carry = 0;
  for (std::size_t k = p.size(); k-- > 1;) {
    carry = p[k] + carry;
    q[k - 1] = carry;
  }
  if (p[0] + carry != 0) throw std::logic_error("t - 1 does not divide the characteristic polynomial");
  return std::accumulate(q.begin(), q.end(), Integer(0));
}

std::vector<std::size_t> OSBasis::counts() const {
  std::vector<std::size_t> out;
  for (const auto& level : nbc) out.push_back(level.size());
  return out;
}

OSBasis os_nbc(const Arrangement& a, const HyperplaneOrder& order) {
  OrlikSolomon os(a, relabel(a, order));
  OSBasis out;
  out.order = os.labels().to_index;
  for (const auto& c : os.circuits()) {
    out.circuits.push_back(os.labels().indices(c));
    out.broken_circuits.push_back(os.labels().indices({c.begin() + 1, c.end()}));
  }
  for (const auto& level : os.nbc()) {
    out.nbc.emplace_back();
    for (const auto& s : level) out.nbc.back().push_back(os.labels().indices(s));
  }
  return out;
}

AomotoComplex aomoto_complex(const Arrangement& a, const RationalVector& lambda, const HyperplaneOrder& order) {
  if (lambda.size() != a.size()) throw PreconditionError("lambda needs one weight per form");
  OrlikSolomon os(a, relabel(a, order));
  AomotoComplex out;
  out.lambda = lambda;
  out.basis = os_nbc(a, order);
  const auto& nbc = os.nbc();
  for (std::size_t k = 0; k + 1 < nbc.size(); ++k) {
    std::map<std::vector<std::size_t>, std::size_t> row_of;
    for (std::size_t i = 0; i < nbc[k + 1].size(); ++i) row_of[nbc[k + 1][i]] = i;
    RationalMatrix m(nbc[k + 1].size(), nbc[k].size());
    for (std::size_t col = 0; col < nbc[k].size(); ++col) {
      for (std::size_t p = 0; p < os.labels().size(); ++p) {
        const Rational& w = lambda[os.labels().to_index[p]];
        if (w == 0) continue;
        auto merged = merge_sign({p}, nbc[k][col]);
        if (!merged) continue;
        for (const auto& [s, v] : os.reduce(merged->second)) m(row_of.at(s), col) += w * v * merged->first;
      }
    }
    out.matrices.push_back(std::move(m));
  }
  std::vector<std::size_t> ranks;
  for (const auto& m : out.matrices) ranks.push_back(rank(m));
  for (std::size_t k = 0; k < nbc.size(); ++k) {
    std::size_t b = nbc[k].size();
    if (k < ranks.size()) b -= ranks[k];
    if (k > 0) b -= ranks[k - 1];
    out.betti.push_back(b);
  }
  return out;
}

std::vector<std::size_t> aomoto_betti(const Arrangement& a, const RationalVector& lambda,
                                      const HyperplaneOrder& order) {
  return aomoto_complex(a, lambda, order).betti;
}

RationalVector default_aomoto_weights(std::size_t r) {
  std::vector<long> primes;
  for (long c = 2; primes.size() < r; ++c) {
    bool prime = true;
    for (long p : primes) prime = prime && c % p != 0;
    if (prime) primes.push_back(c);
  }
  Rational mean = make_rational(std::accumulate(primes.begin(), primes.end(), 0L), static_cast<long>(r));
  RationalVector out;
  for (long p : primes) out.push_back(Rational(p) - mean);
  return out;
}

LatticeReport lattice_report(const Arrangement& a, const std::optional<RationalVector>& lambda,
                             const HyperplaneOrder& order, std::size_t budget) {
  LatticeReport out;
  out.char_poly = char_poly(a, budget);
  if (is_essential(a)) out.chi_projective = chi_projective(a, budget);
  out.theorem_applies = is_indecomposable(a) && condition_R(a, budget).pass;
  if (out.theorem_applies && out.chi_projective) out.predicted_top_betti = abs(*out.chi_projective);
  out.aomoto = aomoto_complex(a, lambda ? *lambda : default_aomoto_weights(a.size()), order);
  out.nbc_counts = out.aomoto.basis.counts();
  return out;
}

}  // namespace bsroots
