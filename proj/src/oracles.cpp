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

#include "bsroots/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bsroots::oracle {

namespace {

// A letter is x_i (is_d = false) or d_i (is_d = true).
struct Letter {
  bool is_d;
  std::size_t index;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct Key {
  std::vector<Letter> letters;
  unsigned s_power = 0;
  friend auto operator<=>(const Key&, const Key&) = default;
};

// Repeatedly resolves the first adjacent pair (first, second) with
// first.is_d == left_is_d and second.is_d != left_is_d; same-index pairs
// pick up the commutator term with sign `commutator`.
std::map<Key, Rational> rewrite(std::map<Key, Rational> work, bool left_is_d, int commutator) {
  std::map<Key, Rational> done;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    Key key = std::move(node.key());
    const Rational c = node.mapped();
    if (c == 0) continue;
    std::size_t pos = key.letters.size();
    for (std::size_t i = 0; i + 1 < key.letters.size(); ++i) {
      if (key.letters[i].is_d == left_is_d && key.letters[i + 1].is_d != left_is_d) {
        pos = i;
        break;
      }
    }
    if (pos == key.letters.size()) {
      done[key] += c;
      continue;
    }
    const bool same = key.letters[pos].index == key.letters[pos + 1].index;
    if (same) {
      Key dropped = key;
      dropped.letters.erase(dropped.letters.begin() + static_cast<std::ptrdiff_t>(pos),
                            dropped.letters.begin() + static_cast<std::ptrdiff_t>(pos + 2));
      work[dropped] += c * commutator;
    }
    std::swap(key.letters[pos], key.letters[pos + 1]);
    work[key] += c;
  }
  return done;
}

std::pair<MultiIndex, MultiIndex> exponents(std::size_t n, const std::vector<Letter>& letters) {
  MultiIndex x(n);
  MultiIndex d(n);
  for (const Letter& l : letters) ++(l.is_d ? d : x)[l.index];
  return {x, d};
}

Key word_key(const MultiIndex& first, bool first_is_d, const MultiIndex& second) {
  Key key;
  for (std::size_t i = 0; i < first.size(); ++i) {
    for (unsigned k = 0; k < first[i]; ++k) key.letters.push_back({first_is_d, i});
  }
  for (std::size_t i = 0; i < second.size(); ++i) {
    for (unsigned k = 0; k < second[i]; ++k) key.letters.push_back({!first_is_d, i});
  }
  return key;
}

}  // namespace

WeylOperator rewrite_normal(std::size_t n, const Word& word) {
  Key key;
  Rational c = 1;
  for (const Generator& g : word) {
    switch (g.kind) {
      case Generator::Kind::kX:
        key.letters.push_back({false, g.index});
        break;
      case Generator::Kind::kD:
        key.letters.push_back({true, g.index});
        break;
      case Generator::Kind::kS:
        ++key.s_power;
        break;
      case Generator::Kind::kScalar:
        c *= g.scalar;
        break;
    }
  }
  WeylOperator out(n);
  // d_i x_i = x_i d_i + 1
  for (const auto& [k, v] : rewrite({{key, c}}, true, 1)) {
    auto [x, d] = exponents(n, k.letters);
    out.add_term(WeylMonomial{x, d, k.s_power}, v);
  }
  return out;
}

AntinormalForm rewrite_antinormal(const MultiIndex& beta, const MultiIndex& alpha) {
  const std::size_t n = beta.size();
  AntinormalForm out;
  // x_i d_i = d_i x_i - 1
  for (const auto& [k, v] : rewrite({{word_key(beta, false, alpha), Rational(1)}}, false, -1)) {
    auto [x, d] = exponents(n, k.letters);
    out[{d, x}] += v;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

AntinormalForm rewrite_antinormal(const WeylOperator& p) {
  if (p.has_s()) throw PreconditionError("anti-normal rewriting needs an s-free operator");
  AntinormalForm out;
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [key, v] : rewrite_antinormal(m.x_exp, m.d_exp)) out[key] += c * v;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool antinormal_in_ideal(const WeylOperator& p) {
  for (const auto& [key, c] : rewrite_antinormal(p)) {
    if (key.second.is_zero() && c != 0) return false;
  }
  return true;
}

Rational antinormal_constant(const WeylOperator& p) {
  WeylOperator part(p.dim());
  for (const auto& [m, c] : p.terms()) {
    if (m.weight() == 0) part.add_term(m, c);
  }
  const MultiIndex zero(p.dim());
  auto form = rewrite_antinormal(part);
  auto it = form.find({zero, zero});
  return it == form.end() ? Rational(0) : it->second;
}

bool bipartition_indecomposable(const Arrangement& a, const Support& s) {
  if (s.size() <= 1) return true;
  const std::size_t total = rank(a, s);
  const std::size_t m = s.size();
  // s[0] always lands in the first block.
  for (unsigned long long mask = 1; mask < (1ULL << m) - 1; mask += 2) {
    Support s1;
    Support s2;
    for (std::size_t i = 0; i < m; ++i) ((mask >> i & 1ULL) ? s1 : s2).push_back(s[i]);
    if (rank(a, s1) + rank(a, s2) == total) return false;
  }
  return true;
}

std::vector<Flat> subset_flats(const Arrangement& a) {
  std::set<Support> seen;
  std::vector<Flat> out;
  const std::size_t r = a.size();
  for (unsigned long long mask = 1; mask < (1ULL << r); ++mask) {
    Support s;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask >> i & 1ULL) s.push_back(i);
    }
    Flat f = closure(a, s);
    if (f.dim == 0 || f.dim >= a.dim()) continue;
    if (seen.insert(f.support).second) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), flat_less);
  return out;
}

std::vector<Integer> whitney_char_poly(const Arrangement& a) {
  std::vector<Integer> out(a.dim() + 1, 0);
  const std::size_t r = a.size();
  for (unsigned long long mask = 0; mask < (1ULL << r); ++mask) {
    Support s;
    for (std::size_t i = 0; i < r; ++i) {
      if (mask >> i & 1ULL) s.push_back(i);
    }
    out[a.dim() - rank(a, s)] += s.size() % 2 == 0 ? 1 : -1;
  }
  return out;
}

Polynomial naive_product(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.dim());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

// ---------------------------------------------------------------------------

long Rng::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

Rational Rng::rational(long num_bound, long den_bound) {
  return make_rational(integer(-num_bound, num_bound), integer(1, den_bound));
}

Rational Rng::nonzero_rational(long num_bound, long den_bound) {
  long p = 0;
  while (p == 0) p = integer(-num_bound, num_bound);
  return make_rational(p, integer(1, den_bound));
}

MultiIndex Rng::multi_index(std::size_t n, unsigned max_entry) {
  MultiIndex e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<unsigned>(integer(0, max_entry));
  return e;
}

namespace {

MultiIndex spread(Rng& rng, std::size_t n, unsigned total) {
  MultiIndex e(n);
  for (unsigned k = 0; k < total; ++k) ++e[static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1))];
  return e;
}

}  // namespace

Polynomial Rng::polynomial(std::size_t n, std::size_t terms, unsigned max_degree) {
  Polynomial p(n);
  for (std::size_t t = 0; t < terms; ++t) {
    p.add_term(spread(*this, n, static_cast<unsigned>(integer(0, max_degree))), nonzero_rational());
  }
  return p;
}

Polynomial Rng::homogeneous(std::size_t n, unsigned d, std::size_t terms) {
  for (;;) {
    Polynomial p(n);
    for (std::size_t t = 0; t < terms; ++t) p.add_term(spread(*this, n, d), nonzero_rational());
    if (!p.is_zero()) return p;
  }
}

WeylOperator Rng::weyl_operator(std::size_t n, std::size_t terms, unsigned max_entry) {
  WeylOperator p(n);
  for (std::size_t t = 0; t < terms; ++t) {
    p.add_term(WeylMonomial{multi_index(n, max_entry), multi_index(n, max_entry), 0}, nonzero_rational());
  }
  return p;
}

WeylOperator Rng::graded_operator(std::size_t n, std::size_t terms, unsigned max_entry, int k) {
  WeylOperator p(n);
  for (std::size_t t = 0; t < terms; ++t) {
    MultiIndex beta = multi_index(n, max_entry);
    int target = static_cast<int>(beta.total()) + k;
    if (target < 0) {
      beta = spread(*this, n, static_cast<unsigned>(-k));
      target = 0;
    }
    p.add_term(WeylMonomial{beta, spread(*this, n, static_cast<unsigned>(target)), 0}, nonzero_rational());
  }
  return p;
}

DifferentialForm Rng::form(std::size_t n, std::size_t degree, std::size_t terms, unsigned max_degree) {
  DifferentialForm out(n, degree);
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), gen_);
    idx.resize(degree);
    std::sort(idx.begin(), idx.end());
    out.add(idx, polynomial(n, 2, max_degree));
  }
  return out;
}

Arrangement Rng::arrangement(std::size_t n, std::size_t r, long coeff_bound, unsigned max_mult) {
  std::vector<RationalVector> forms;
  std::vector<unsigned> mults;
  for (int attempt = 0; forms.size() < r; ++attempt) {
    if (attempt > 10000) throw std::runtime_error("could not draw enough non-proportional forms");
    RationalVector v(n);
    for (auto& c : v) c = integer(-coeff_bound, coeff_bound);
    if (std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; })) continue;
    bool proportional = false;
    for (const auto& w : forms) {
      RationalMatrix m = RationalMatrix::from_rows({v, w}, n);
      if (bsroots::rank(m) < 2) {
        proportional = true;
        break;
      }
    }
    if (proportional) continue;
    forms.push_back(std::move(v));
    mults.push_back(static_cast<unsigned>(integer(1, max_mult)));
  }
  return Arrangement(n, std::move(forms), std::move(mults));
}

std::vector<std::size_t> Rng::permutation(std::size_t r) {
  std::vector<std::size_t> p(r);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), gen_);
  return p;
}

}  // namespace bsroots::oracle
