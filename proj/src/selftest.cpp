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

#include "bsroots/selftest.hpp"

#include <numeric>
#include <sstream>

#include "bsroots/arrangement.hpp"
#include "bsroots/fs.hpp"
#include "bsroots/homogeneous.hpp"
#include "bsroots/lattice.hpp"
#include "bsroots/oracles.hpp"
#include "bsroots/parse.hpp"
#include "bsroots/weyl.hpp"

namespace bsroots {

namespace {

// Counts cases and keeps the first failure.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  CheckResult result(int id, const std::string& name, const std::string& summary) const {
    std::ostringstream out;
    out << cases_ << " cases";
    if (!summary.empty()) out << "; " << summary;
    if (failures_ > 0) out << "; " << failures_ << " failed, first: " << first_;
    return {id, name, failures_ == 0 && cases_ > 0, out.str()};
  }

 private:
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

Polynomial poly(const char* text, std::size_t n) { return parse_polynomial(text, n); }

Arrangement make(std::size_t n, std::vector<std::vector<long>> forms, std::vector<unsigned> mults = {}) {
  std::vector<RationalVector> rows;
  for (const auto& f : forms) {
    RationalVector v;
    for (long c : f) v.push_back(c);
    rows.push_back(std::move(v));
  }
  if (mults.empty()) mults.assign(rows.size(), 1);
  return Arrangement(n, std::move(rows), std::move(mults));
}

bool orthogonal_to_exponents(const Polynomial& f, const RationalVector& c) {
  for (const auto& [e, coeff] : f.terms()) {
    Rational dot = 0;
    for (std::size_t i = 0; i < c.size(); ++i) dot += c[i] * e[i];
    if (dot != 0) return false;
  }
  return true;
}

Rational sum_of(const RationalVector& v) { return std::accumulate(v.begin(), v.end(), Rational(0)); }

std::string vec_string(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + ")";
}

// ---------------------------------------------------------------------------

CheckResult criterion_worked_example(std::uint64_t) {
  Tally t;
  const Polynomial f = poly("x1*x2*x3 + x1^2*x4 + x2^2*x4", 4);
  EulerSearch e = euler_relation_find(f);
  t.expect(e.c.has_value(), "no Euler relation found");
  std::string summary;
  if (e.c) {
    t.expect(sum_of(*e.c) == 1, "sum c != 1");
    t.expect(orthogonal_to_exponents(f, *e.c), "<c, e> != 0");
    t.expect(e.verified, "f^s identity failed for the returned c");
    summary = "c = " + vec_string(*e.c);
  }
  const RationalVector displayed{make_rational(-1, 2), make_rational(-1, 2), 1, 1};
  t.expect(sum_of(displayed) == 1 && orthogonal_to_exponents(f, displayed), "(-1/2,-1/2,1,1) not a solution");
  t.expect(verify_euler_relation(f, displayed), "f^s identity failed for (-1/2,-1/2,1,1)");
  return t.result(1, "", summary);
}

CheckResult criterion_family(std::uint64_t) {
  Tally t;
  for (unsigned k = 1; k <= 4; ++k) {
    Polynomial f(4);
    f.add_term(MultiIndex{k, k, 1, 0}, 1);
    f.add_term(MultiIndex{2 * k, 0, 0, 1}, 1);
    f.add_term(MultiIndex{0, 2 * k, 0, 1}, 1);
    EulerSearch e = euler_relation_find(f);
    const std::string tag = "k=" + std::to_string(k);
    t.expect(e.c && e.verified, tag + ": no verified relation");
    if (e.c) t.expect(sum_of(*e.c) == 1 && orthogonal_to_exponents(f, *e.c), tag + ": constraints");
    const Rational a = make_rational(1, 2 - 4 * static_cast<long>(k));
    const Rational b = -2 * static_cast<long>(k) * a;
    t.expect(verify_euler_relation(f, {a, a, b, b}), tag + ": (a, a, -2ka, -2ka) fails");
  }
  return t.result(2, "", "k = 1..4");
}

CheckResult criterion_antinormal(std::uint64_t) {
  Tally t;
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t cells = 1;
    for (std::size_t i = 0; i < 2 * n; ++i) cells *= 4;
    for (std::size_t code = 0; code < cells; ++code) {
      MultiIndex beta(n);
      MultiIndex alpha(n);
      std::size_t c = code;
      for (std::size_t i = 0; i < n; ++i, c /= 4) beta[i] = static_cast<unsigned>(c % 4);
      for (std::size_t i = 0; i < n; ++i, c /= 4) alpha[i] = static_cast<unsigned>(c % 4);
      t.expect(to_antinormal(beta, alpha) == oracle::rewrite_antinormal(beta, alpha),
               "n=" + std::to_string(n) + " case " + std::to_string(code));
    }
  }
  return t.result(3, "", "n <= 3, exponents <= 3");
}

CheckResult criterion_ideal(std::uint64_t seed) {
  Tally t;
  oracle::Rng rng(seed);
  std::size_t members = 0;
  std::size_t zero_sigma = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    WeylOperator p(n);
    switch (i % 4) {
      case 0:
        p = rng.weyl_operator(n, 3, 2);
        break;
      case 1:
        p = rng.graded_operator(n, 3, 2, static_cast<int>(rng.integer(-1, 2)));
        break;
      case 2: {
        // Left multiples of x_i lie in the ideal.
        const std::size_t v = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1));
        p = rng.weyl_operator(n, 2, 2) * WeylOperator::x(n, v);
        break;
      }
      default: {
        // Weight 0 with a cancelling constant: sigma = 0 but membership may fail.
        p = rng.graded_operator(n, 2, 2, 0);
        p.add_term(WeylMonomial{MultiIndex(n), MultiIndex(n), 0}, -sigma_invariant(p));
        break;
      }
    }
    const bool member = in_ideal_Dx(p).member;
    const Rational sigma = sigma_invariant(p);
    members += member;
    zero_sigma += sigma == 0;
    t.expect(member == oracle::antinormal_in_ideal(p), "membership differs for " + to_string(p));
    t.expect(sigma == oracle::antinormal_constant(p), "sigma differs for " + to_string(p));
  }
  return t.result(4, "",
                  std::to_string(members) + " members, " + std::to_string(zero_sigma) + " with zero sigma");
}

CheckResult criterion_euler_identity(std::uint64_t seed) {
  Tally t;
  oracle::Rng rng(seed + 1);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    const unsigned d = static_cast<unsigned>(rng.integer(1, 5));
    const Polynomial f = rng.homogeneous(n, d, static_cast<std::size_t>(rng.integer(1, 3)));
    EulerWitness w = euler_root_witness(f);
    t.expect(w.verified, "identity fails for " + to_string(f));
    t.expect(w.n_over_d == make_rational(static_cast<long>(n), d), "n/d mismatch");
  }
  return t.result(5, "", "n <= 4, d <= 5");
}

CheckResult criterion_bs_pairs(std::uint64_t) {
  Tally t;
  struct Case {
    Polynomial f;
    WeylOperator op;
    std::vector<Rational> shifts;
    std::string tag;
  };
  std::vector<Case> cases;
  cases.push_back({poly("x1", 1), WeylOperator::d(1, 0), {1}, "x"});
  cases.push_back({poly("x1*x2", 2), WeylOperator::d(2, 0) * WeylOperator::d(2, 1), {1, 1}, "x1*x2"});
  for (unsigned a = 1; a <= 4; ++a) {
    std::vector<Rational> shifts;
    for (unsigned i = 1; i <= a; ++i) shifts.push_back(make_rational(i, a));
    Rational scale = 1;
    for (unsigned i = 0; i < a; ++i) scale /= a;
    cases.push_back({pow(Polynomial::variable(1, 0), a), pow(WeylOperator::d(1, 0), a).scaled(scale), shifts,
                     "x^" + std::to_string(a)});
  }
  for (const Case& c : cases) {
    BSPair pair{c.op, SUnivariate::from_shifts(c.shifts)};
    t.expect(bs_pair_check(pair, c.f).pass, c.tag + ": pair does not verify");
    // b + 1 and a moved root must both leave a residual.
    std::vector<Rational> coeffs = pair.bpoly.coefficients();
    coeffs[0] += 1;
    BSCheck bad = bs_pair_check({c.op, SUnivariate(coeffs)}, c.f);
    t.expect(!bad.pass && !bad.residual.is_zero(), c.tag + ": b + 1 verifies");
    std::vector<Rational> moved = c.shifts;
    moved[0] += 1;
    BSCheck bad2 = bs_pair_check({c.op, SUnivariate::from_shifts(moved)}, c.f);
    t.expect(!bad2.pass && !bad2.residual.is_zero(), c.tag + ": moved root verifies");
  }
  return t.result(6, "", std::to_string(cases.size()) + " pairs and their perturbations");
}

CheckResult criterion_homotopy(std::uint64_t seed) {
  Tally t;
  oracle::Rng rng(seed + 2);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    const unsigned d = static_cast<unsigned>(rng.integer(1, 4));
    const Polynomial f = rng.homogeneous(n, d, static_cast<std::size_t>(rng.integer(1, 3)));
    const std::size_t p = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n)));
    const DifferentialForm omega = rng.form(n, p, 2, 2);
    t.expect(homotopy_identity_holds(f, omega), "h identity fails for f = " + to_string(f));
  }
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    const unsigned d = static_cast<unsigned>(rng.integer(1, 5));
    const Polynomial f = rng.homogeneous(n, d, static_cast<std::size_t>(rng.integer(1, 3)));
    const DifferentialForm w0 = omega0(n, d);
    const DifferentialForm dx = DifferentialForm::top(n);
    t.expect(wedge(DifferentialForm::exact(f), w0) == dx.scaled(f), "df ^ w0 != f dx for " + to_string(f));
    t.expect(exterior_d(w0) == dx.scaled(Polynomial::constant(n, make_rational(static_cast<long>(n), d))),
             "d w0 != (n/d) dx");
  }
  return t.result(7, "", "50 homotopy pairs, 20 base-form checks");
}

CheckResult criterion_pipeline(std::uint64_t) {
  Tally t;
  struct Case {
    Arrangement a;
    Rational eps;
    Rational residue;
    Rational root;
    long n_value;
  };
  std::vector<Case> cases;
  cases.push_back({make(2, {{1, 0}, {0, 1}, {1, 1}}), make_rational(2, 3), make_rational(1, 3), make_rational(-2, 3), 3});
  cases.push_back({make(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}), make_rational(3, 4), make_rational(1, 4),
                   make_rational(-3, 4), 4});
  for (const Case& c : cases) {
    const std::string tag = "n=" + std::to_string(c.a.dim());
    AnalysisReport r = analyze(c.a);
    t.expect(r.indecomposable, tag + ": not indecomposable");
    t.expect(r.condition.pass, tag + ": condition (R) fails");
    t.expect(r.epsilon && r.epsilon->eps == RationalVector(c.a.size(), c.eps), tag + ": epsilon");
    t.expect(r.mu.has_value(), tag + ": no mu");
    if (r.mu) {
      t.expect(r.mu->N == c.n_value, tag + ": N");
      for (const MuEntry& m : r.mu->entries) {
        const Rational frac = Rational(r.mu->N) * (1 + m.eps_sum - m.mu);
        t.expect(m.mu == 1, tag + ": mu != 1");
        t.expect(m.mu >= 1 && m.mu <= m.edge.flat.dim, tag + ": mu range");
        t.expect(frac > 0 && frac < Rational(r.mu->N), tag + ": N bound");
        t.expect(m.residue == c.residue, tag + ": residue");
        t.expect(!(is_integer(m.residue) && m.residue > 0), tag + ": positive integral residue");
      }
    }
    t.expect(r.theorem_applies && r.root && *r.root == c.root, tag + ": verdict");
  }
  return t.result(8, "", "xy(x+y) and xyz(x+y+z)");
}

CheckResult criterion_matroid(std::uint64_t seed) {
  Tally t;
  oracle::Rng rng(seed + 3);
  const std::size_t sizes[][2] = {{2, 5}, {3, 7}, {3, 8}, {4, 9}, {3, 10}, {4, 10}};
  std::size_t subsets = 0;
  for (const auto& [n, r] : sizes) {
    Arrangement a = rng.arrangement(n, r, 2);
    for (unsigned long long mask = 1; mask < (1ULL << r); ++mask) {
      Support s;
      for (std::size_t i = 0; i < r; ++i) {
        if (mask >> i & 1ULL) s.push_back(i);
      }
      ++subsets;
      t.expect(is_indecomposable(a, s) == oracle::bipartition_indecomposable(a, s),
               "n=" + std::to_string(n) + " r=" + std::to_string(r) + " mask " + std::to_string(mask));
    }
  }
  return t.result(9, "", "6 arrangements, r <= 10");
}

CheckResult criterion_lattice(std::uint64_t seed) {
  Tally t;
  const Arrangement braid = make(2, {{1, 0}, {0, 1}, {1, 1}});
  t.expect(char_poly(braid) == std::vector<Integer>{2, -3, 1}, "char_poly != t^2 - 3t + 2");
  t.expect(chi_projective(braid) == -1, "chi != -1");
  LatticeReport rep = lattice_report(braid);
  t.expect(rep.predicted_top_betti && *rep.predicted_top_betti == 1, "predicted top Betti != 1");

  oracle::Rng rng(seed + 4);
  for (int i = 0; i < 10; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
    const std::size_t r = static_cast<std::size_t>(rng.integer(static_cast<long>(n), 7));
    Arrangement a = rng.arrangement(n, r, 2);
    const std::string tag = "arrangement " + std::to_string(i);
    const std::vector<Integer> p = char_poly(a);
    const std::vector<std::size_t> counts = os_nbc(a).counts();
    const std::size_t top = rank(a, [&] {
      Support all(r);
      std::iota(all.begin(), all.end(), 0);
      return all;
    }());
    t.expect(counts.size() == top + 1, tag + ": nbc degrees != rank + 1");
    for (std::size_t k = 0; k <= n; ++k) {
      const Integer expected = abs(p[n - k]);
      const Integer got = k < counts.size() ? Integer(static_cast<unsigned long>(counts[k])) : Integer(0);
      t.expect(expected == got, tag + ": nbc_" + std::to_string(k));
    }
    RationalVector lambda(r);
    for (auto& l : lambda) l = rng.rational(4, 3);
    if (sum_of(lambda) == 0) lambda[0] += 1;
    for (std::size_t b : aomoto_betti(a, lambda)) t.expect(b == 0, tag + ": nonzero Betti with sum lambda != 0");
  }
  return t.result(10, "", "braid arrangement plus 10 random arrangements");
}

// ---------------------------------------------------------------------------

CheckResult oracle_normal_order(std::uint64_t seed) {
  Tally t;
  oracle::Rng rng(seed + 10);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    Word word;
    const long len = rng.integer(0, 7);
    for (long k = 0; k < len; ++k) {
      const std::size_t v = static_cast<std::size_t>(rng.integer(0, static_cast<long>(n) - 1));
      switch (rng.integer(0, 3)) {
        case 0:
          word.push_back(Generator::x(v));
          break;
        case 1:
          word.push_back(Generator::d(v));
          break;
        case 2:
          word.push_back(Generator::s());
          break;
        default:
          word.push_back(Generator::scalar_of(rng.nonzero_rational()));
      }
    }
    t.expect(normalize(n, word) == oracle::rewrite_normal(n, word), "word " + std::to_string(i));
  }
  return t.result(11, "", "random words, n <= 3");
}

CheckResult oracle_product(std::uint64_t seed) {
  Tally t;
  oracle::Rng rng(seed + 11);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
    Polynomial a = rng.polynomial(n, 4, 3);
    Polynomial b = rng.polynomial(n, 4, 3);
    t.expect(a * b == oracle::naive_product(a, b), "product " + std::to_string(i));
    if (!a.is_zero()) {
      auto q = divides_exact(a, a * b);
      t.expect(q && *q == b, "exact division " + std::to_string(i));
    }
  }
  return t.result(12, "", "products and exact division");
}

CheckResult oracle_flats(std::uint64_t seed) {
  Tally t;
  oracle::Rng rng(seed + 12);
  for (int i = 0; i < 12; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 4));
    const std::size_t r = static_cast<std::size_t>(rng.integer(2, 9));
    Arrangement a = rng.arrangement(n, r, 3);
    const std::string tag = "arrangement " + std::to_string(i);
    t.expect(enumerate_flats(a) == oracle::subset_flats(a), tag + ": flats");
    t.expect(char_poly(a) == oracle::whitney_char_poly(a), tag + ": characteristic polynomial");
    for (const DenseEdge& e : dense_edges(a)) {
      t.expect(closure(a, e.flat.support) == e.flat, tag + ": dense edge not closed");
    }
  }
  return t.result(13, "", "flats, Whitney expansion, closedness");
}

CheckResult oracle_aomoto(std::uint64_t seed) {
  Tally t;
  oracle::Rng rng(seed + 13);
  for (int i = 0; i < 10; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 3));
    const std::size_t r = static_cast<std::size_t>(rng.integer(static_cast<long>(n), 6));
    Arrangement a = rng.arrangement(n, r, 2);
    RationalVector lambda(r);
    for (auto& l : lambda) l = rng.rational(4, 3);
    const std::string tag = "arrangement " + std::to_string(i);
    AomotoComplex c = aomoto_complex(a, lambda);
    for (std::size_t k = 0; k + 1 < c.matrices.size(); ++k) {
      t.expect((c.matrices[k + 1] * c.matrices[k]).is_zero(), tag + ": omega ^ omega != 0");
    }
    long alt_betti = 0;
    long alt_nbc = 0;
    const auto counts = c.basis.counts();
    for (std::size_t k = 0; k < counts.size(); ++k) {
      const long sign = k % 2 == 0 ? 1 : -1;
      alt_betti += sign * static_cast<long>(c.betti[k]);
      alt_nbc += sign * static_cast<long>(counts[k]);
    }
    t.expect(alt_betti == alt_nbc, tag + ": Euler characteristic");
    t.expect(aomoto_betti(a, lambda, rng.permutation(r)) == c.betti, tag + ": order dependence");
  }
  return t.result(14, "", "d^2 = 0, Euler characteristic, order independence");
}

CheckResult oracle_pipeline_invariance(std::uint64_t seed) {
  Tally t;
  oracle::Rng rng(seed + 14);
  for (int i = 0; i < 8; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 3));
    const std::size_t r = static_cast<std::size_t>(rng.integer(static_cast<long>(n) + 1, 6));
    Arrangement a = rng.arrangement(n, r, 2, 3);
    AnalysisReport base = analyze(a);
    auto perm = rng.permutation(r);
    std::vector<RationalVector> forms;
    std::vector<unsigned> mults;
    for (std::size_t j : perm) {
      RationalVector v = a.forms()[j];
      const Rational scale = rng.nonzero_rational(3, 3);
      for (auto& c : v) c *= scale;
      forms.push_back(std::move(v));
      mults.push_back(a.mults()[j]);
    }
    AnalysisReport moved = analyze(Arrangement(n, forms, mults));
    const std::string tag = "arrangement " + std::to_string(i);
    t.expect(base.indecomposable == moved.indecomposable, tag + ": indecomposability");
    t.expect(base.condition.pass == moved.condition.pass, tag + ": condition (R)");
    t.expect(base.theorem_applies == moved.theorem_applies, tag + ": verdict");
    t.expect(base.condition.edges.size() == moved.condition.edges.size(), tag + ": dense edge count");
  }
  return t.result(15, "", "permuted and rescaled forms");
}

}  // namespace

bool homotopy_identity_holds(const Polynomial& f, const DifferentialForm& omega) {
  auto deg = is_homogeneous(f);
  if (f.is_zero() || !deg || deg->value() == 0) throw PreconditionError("needs f homogeneous of positive degree");
  const unsigned d = deg->value();
  const DifferentialForm df = DifferentialForm::exact(f);
  DifferentialForm lhs = euler_contraction(wedge(df, omega), d);
  if (omega.degree() > 0) lhs += wedge(df, euler_contraction(omega, d));
  return lhs == omega.scaled(f);
}

const std::vector<NamedCheck>& acceptance_criteria() {
  static const std::vector<NamedCheck> checks = {
      {1, "Euler relation of x1x2x3 + x1^2x4 + x2^2x4", criterion_worked_example},
      {2, "Euler relations of the k-family, k = 1..4", criterion_family},
      {3, "anti-normal formula equals commutator rewriting", criterion_antinormal},
      {4, "ideal membership and sigma agree with anti-normal inspection", criterion_ideal},
      {5, "s f^s = -(n/d) f^s + (1/d) sum d_i(x_i f^s)", criterion_euler_identity},
      {6, "Bernstein-Sato pair checks and perturbations", criterion_bs_pairs},
      {7, "Koszul homotopy and base form identities", criterion_homotopy},
      {8, "root criterion pipeline on xy(x+y) and xyz(x+y+z)", criterion_pipeline},
      {9, "matroid connectivity equals bipartition brute force", criterion_matroid},
      {10, "lattice invariants, nbc counts and Aomoto vanishing", criterion_lattice},
  };
  return checks;
}

const std::vector<NamedCheck>& oracle_checks() {
  static const std::vector<NamedCheck> checks = {
      {11, "normal ordering equals word rewriting", oracle_normal_order},
      {12, "polynomial product and exact division", oracle_product},
      {13, "flats and characteristic polynomial by subsets", oracle_flats},
      {14, "Aomoto complex consistency", oracle_aomoto},
      {15, "analysis invariant under permutation and scaling", oracle_pipeline_invariance},
  };
  return checks;
}

CheckResult run_check(const NamedCheck& check, std::uint64_t seed) {
  CheckResult r;
  try {
    r = check.run(seed);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.id = check.id;
  r.name = check.name;
  return r;
}

}  // namespace bsroots
