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

#include "bsroots/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bsroots {

namespace {

RationalMatrix rows_of(const Arrangement& a, const Support& s) {
  RationalMatrix m(s.size(), a.dim());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a.forms()[s[i]][j];
  }
  return m;
}

Support all_indices(const Arrangement& a) {
  Support s(a.size());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

// Greedy basis of span S, scanning S in order.
Support greedy_basis(const Arrangement& a, const Support& s) {
  Support basis;
  for (std::size_t j : s) {
    basis.push_back(j);
    if (rank(a, basis) < basis.size()) basis.pop_back();
  }
  return basis;
}

// Coordinates of L_j in the independent set `basis`.
RationalVector coordinates(const Arrangement& a, const Support& basis, std::size_t j) {
  RationalMatrix bt = rows_of(a, basis).transposed();
  auto c = solve(bt, a.forms()[j]);
  if (!c) throw std::logic_error("form outside the span of its basis");
  return *c;
}

Rational subset_sum(const RationalVector& eps, const Support& s) {
  Rational sum = 0;
  for (std::size_t j : s) sum += eps[j];
  return sum;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::vector<unsigned> first_primes(std::size_t count) {
  std::vector<unsigned> primes;
  for (unsigned c = 2; primes.size() < count; ++c) {
    bool prime = true;
    for (unsigned p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

}  // namespace

Arrangement::Arrangement(std::size_t n, std::vector<RationalVector> forms, std::vector<unsigned> mults)
    : n_(n), forms_(std::move(forms)), mults_(std::move(mults)) {
  if (n_ == 0) throw PreconditionError("arrangement needs n >= 1");
  if (forms_.empty()) throw PreconditionError("arrangement needs at least one form");
  if (mults_.size() != forms_.size()) throw PreconditionError("one multiplicity per form required");
  for (std::size_t j = 0; j < forms_.size(); ++j) {
    if (forms_[j].size() != n_) {
      throw PreconditionError("form " + std::to_string(j + 1) + " has " + std::to_string(forms_[j].size()) +
                              " coefficients, expected " + std::to_string(n_));
    }
    if (std::all_of(forms_[j].begin(), forms_[j].end(), [](const Rational& q) { return q == 0; })) {
      throw PreconditionError("form " + std::to_string(j + 1) + " is zero");
    }
    if (mults_[j] == 0) throw PreconditionError("multiplicities must be positive");
  }
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    for (std::size_t j = i + 1; j < forms_.size(); ++j) {
      if (rank(*this, {i, j}) < 2) {
        throw PreconditionError("forms " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                " are proportional");
      }
    }
  }
}

unsigned Arrangement::degree() const { return std::accumulate(mults_.begin(), mults_.end(), 0u); }

Rational Arrangement::n_over_d() const { return make_rational(static_cast<long>(n_), degree()); }

Polynomial Arrangement::defining_polynomial() const {
  Polynomial f = Polynomial::constant(n_, 1);
  for (std::size_t j = 0; j < forms_.size(); ++j) {
    Polynomial l(n_);
    for (std::size_t i = 0; i < n_; ++i) l.add_term(MultiIndex::unit(n_, i), forms_[j][i]);
    f = f * pow(l, mults_[j]);
  }
  return f;
}

bool flat_less(const Flat& a, const Flat& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  return a.support < b.support;
}

std::size_t rank(const Arrangement& a, const Support& s) {
  if (s.empty()) return 0;
  for (std::size_t j : s) {
    if (j >= a.size()) throw PreconditionError("support index out of range");
  }
  return rank(rows_of(a, s));
}

Flat closure(const Arrangement& a, const Support& s) {
  Support basis = greedy_basis(a, s);
  Flat flat{{}, basis.size()};
  for (std::size_t j = 0; j < a.size(); ++j) {
    Support probe = basis;
    probe.push_back(j);
    if (rank(a, probe) == basis.size()) flat.support.push_back(j);
  }
  return flat;
}

bool is_essential(const Arrangement& a) { return rank(a, all_indices(a)) == a.dim(); }

std::vector<Flat> enumerate_flats(const Arrangement& a, std::size_t budget) {
  if (a.size() > budget) {
    throw PreconditionError("arrangement has " + std::to_string(a.size()) + " forms, flat enumeration budget is " +
                            std::to_string(budget));
  }
  // Rank-k flats arise as closures of a rank-(k-1) flat plus one more form.
  std::set<Support> seen;
  std::vector<Flat> out;
  std::vector<Flat> layer{Flat{{}, 0}};
  while (!layer.empty()) {
    std::vector<Flat> next;
    for (const Flat& base : layer) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (std::binary_search(base.support.begin(), base.support.end(), j)) continue;
        Support s = base.support;
        s.insert(std::upper_bound(s.begin(), s.end(), j), j);
        Flat f = closure(a, s);
        if (f.dim >= a.dim()) continue;
        if (!seen.insert(f.support).second) continue;
        next.push_back(f);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end(), flat_less);
  return out;
}

std::vector<Support> matroid_components(const Arrangement& a, const Support& s) {
  if (s.empty()) return {};
  Support sorted = s;
  std::sort(sorted.begin(), sorted.end());
  Support basis = greedy_basis(a, sorted);
  auto pos = [&sorted](std::size_t j) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), j) - sorted.begin());
  };
  DisjointSets sets(sorted.size());
  for (std::size_t j : sorted) {
    if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
    RationalVector c = coordinates(a, basis, j);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (c[i] != 0) sets.unite(pos(j), pos(basis[i]));
    }
  }
  std::vector<Support> components;
  std::vector<std::ptrdiff_t> slot(sorted.size(), -1);
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    std::size_t root = sets.find(k);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::ptrdiff_t>(components.size());
      components.emplace_back();
    }
    components[static_cast<std::size_t>(slot[root])].push_back(sorted[k]);
  }
  return components;
}

bool is_indecomposable(const Arrangement& a, const Support& s) {
  if (s.empty()) throw PreconditionError("indecomposability of an empty set");
  return matroid_components(a, s).size() == 1;
}

bool is_indecomposable(const Arrangement& a) {
  return is_essential(a) && is_indecomposable(a, all_indices(a));
}

std::vector<DenseEdge> dense_edges(const Arrangement& a, std::size_t budget) {
  std::vector<DenseEdge> out;
  const Rational nd = a.n_over_d();
  for (Flat& flat : enumerate_flats(a, budget)) {
    if (!is_indecomposable(a, flat.support)) continue;
    unsigned sum = 0;
    for (std::size_t j : flat.support) sum += a.mults()[j];
    Rational r_value = Rational(static_cast<long>(flat.dim)) - nd * sum;
    out.push_back({std::move(flat), sum, r_value});
  }
  return out;
}

ConditionR condition_R(const Arrangement& a, std::size_t budget) {
  ConditionR out;
  out.edges = dense_edges(a, budget);
  for (const auto& e : out.edges) {
    if (is_integer(e.r_value) && e.r_value > 0) {
      out.pass = false;
      out.violators.push_back(e);
    }
  }
  return out;
}

bool epsilon_valid(const Arrangement& a, const RationalVector& eps, bool require_nonintegral,
                   std::size_t budget) {
  if (eps.size() != a.size()) return false;
  Rational total = 0;
  for (const auto& e : eps) {
    if (e <= 0) return false;
    total += e;
  }
  if (total != static_cast<long>(a.dim())) return false;
  for (const Flat& w : enumerate_flats(a, budget)) {
    if (subset_sum(eps, w.support) >= static_cast<long>(w.dim)) return false;
  }
  if (require_nonintegral) {
    for (const DenseEdge& e : dense_edges(a, budget)) {
      if (is_integer(subset_sum(eps, e.flat.support))) return false;
    }
  }
  return true;
}

EpsilonWeights epsilon_construct(const Arrangement& a, std::size_t budget) {
  if (!is_indecomposable(a)) throw PreconditionError("epsilon weights need an indecomposable arrangement");
  const std::size_t n = a.dim();
  const std::size_t r = a.size();
  EpsilonWeights out{RationalVector(r), false};
  if (n == 1) {
    // A single line; there are no proper nonzero subspaces.
    out.eps[0] = 1;
    return out;
  }
  Support basis = greedy_basis(a, all_indices(a));
  std::vector<bool> in_basis(r, false);
  for (std::size_t b : basis) in_basis[b] = true;

  std::vector<Support> basis_support(r);  // B_j, as positions in `basis`
  std::vector<unsigned> b_count(n, 0);
  for (std::size_t j = 0; j < r; ++j) {
    if (in_basis[j]) continue;
    RationalVector c = coordinates(a, basis, j);
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] != 0) {
        basis_support[j].push_back(i);
        ++b_count[i];
      }
    }
  }
  const Rational inv = make_rational(1, static_cast<long>(n + 1));
  for (std::size_t j = 0; j < r; ++j) {
    if (in_basis[j]) {
      out.eps[j] = make_rational(static_cast<long>(n), static_cast<long>(n + 1));
      continue;
    }
    Rational sum = 0;
    for (std::size_t i : basis_support[j]) sum += make_rational(1, b_count[i]);
    out.eps[j] = sum * inv;
  }
  if (!epsilon_valid(a, out.eps, false, budget)) {
    throw std::logic_error("constructed epsilon weights violate their postconditions");
  }
  return out;
}

EpsilonWeights epsilon_perturb(const Arrangement& a, const EpsilonWeights& eps, std::size_t budget) {
  if (!epsilon_valid(a, eps.eps, false, budget)) throw PreconditionError("epsilon_perturb needs valid weights");
  if (epsilon_valid(a, eps.eps, true, budget)) return {eps.eps, true};
  const std::size_t r = a.size();
  auto primes = first_primes(r);
  Rational mean = make_rational(std::accumulate(primes.begin(), primes.end(), 0L), static_cast<long>(r));
  Integer largest_den = 1;
  for (const auto& e : eps.eps) largest_den = std::max(largest_den, Integer(e.get_den()));
  for (unsigned t = 1; t <= 40; ++t) {
    Integer q = largest_den * 3;
    q <<= t;
    RationalVector candidate = eps.eps;
    for (std::size_t j = 0; j < r; ++j) candidate[j] += (Rational(primes[j]) - mean) / Rational(q);
    if (epsilon_valid(a, candidate, true, budget)) return {std::move(candidate), true};
  }
  throw std::logic_error("epsilon perturbation did not converge");
}

MuAssignment mu_and_residues(const Arrangement& a, const EpsilonWeights& eps, std::size_t budget) {
  MuAssignment out;
  out.N = 1;
  for (const auto& e : eps.eps) mpz_lcm(out.N.get_mpz_t(), out.N.get_mpz_t(), e.get_den_mpz_t());
  const ConditionR cond = condition_R(a, budget);
  const Rational nd = a.n_over_d();
  for (const DenseEdge& edge : cond.edges) {
    MuEntry entry{edge, subset_sum(eps.eps, edge.flat.support), 0, 0};
    if (is_integer(entry.eps_sum)) throw std::logic_error("mu_and_residues needs perturbed weights");
    Integer mu = floor(entry.eps_sum) + 1;
    if (mu < 1 || mu > static_cast<long>(edge.flat.dim)) throw std::logic_error("mu(W) outside [1, dim W]");
    entry.mu = static_cast<unsigned>(mu.get_ui());
    Rational frac = Rational(out.N) * (1 + entry.eps_sum - Rational(mu));
    if (!is_integer(frac) || frac <= 0 || frac >= Rational(out.N)) {
      throw std::logic_error("N(1 + sum eps - mu) outside (0, N)");
    }
    entry.residue = Rational(mu) - nd * edge.sum_mult;
    if (cond.pass && is_integer(entry.residue) && entry.residue > 0) {
      throw std::logic_error("positive integral residue under condition (R)");
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

AnalysisReport analyze(const Arrangement& a, std::size_t budget) {
  AnalysisReport out;
  out.n = a.dim();
  out.d = a.degree();
  out.essential = is_essential(a);
  out.indecomposable = is_indecomposable(a);
  out.condition = condition_R(a, budget);
  if (!out.indecomposable) {
    out.verdict = out.essential ? "decomposable: the theorem is silent"
                                : "not essential, hence decomposable: the theorem is silent";
    return out;
  }
  out.epsilon = epsilon_construct(a, budget);
  out.epsilon_perturbed = epsilon_perturb(a, *out.epsilon, budget);
  out.mu = mu_and_residues(a, *out.epsilon_perturbed, budget);
  if (!out.condition.pass) {
    out.verdict = "condition (R) fails: the theorem is silent";
    return out;
  }
  out.theorem_applies = true;
  out.root = -a.n_over_d();
  out.verdict = "Theorem 1.3 applies: " + to_string(*out.root) + " is a root of b_{f,0}";
  return out;
}

}  // namespace bsroots
