// Copyright 2026 The Tabloid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Acceptance suite: one line per criterion, exact comparisons throughout.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "tabloid/combinatorics.hpp"
#include "tabloid/coopgame.hpp"
#include "tabloid/linalg.hpp"
#include "tabloid/specht.hpp"
#include "tabloid/voting.hpp"

using namespace tabloid;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Fails the outcome with a message; returns the condition.
bool expect(Outcome& o, bool condition, const std::string& what) {
  if (!condition && o.pass) {
    o.pass = false;
    o.detail = what;
  }
  return condition;
}

constexpr std::uint64_t kSeed = 20260101;

ModuleVector candidate_vector(std::vector<Rational> v) {
  const int n = static_cast<int>(v.size());
  return ModuleVector(Composition::candidates(n), std::move(v));
}

ModuleVector basis_vector(const Composition& shape, std::uint64_t r) {
  return ModuleVector(shape, std::vector<std::pair<std::uint64_t, Rational>>{{r, 1}});
}

Game to_game(int n, const oracle::GameValues& v) { return Game(n, std::vector<Rational>(v.begin() + 1, v.end())); }

SolutionCoefficients random_coefficients(int n, std::mt19937_64& rng) {
  auto c = SolutionCoefficients::zero(n);
  for (auto& x : c.c0) x = oracle::random_rational(rng);
  for (auto& x : c.c1) x = oracle::random_rational(rng);
  return c;
}

const std::vector<std::vector<Rational>> kGoldenP{{1, 1, 0, 0, 1, 0}, {1, 1, 1, 0, 0, 0}, {0, 0, 1, 1, 0, 1},
                                                   {1, 0, 1, 1, 0, 0}, {0, 0, 0, 1, 1, 1}, {0, 1, 0, 0, 1, 1}};
const std::vector<std::vector<Rational>> kGoldenK{{3, 2, 2, 1, 1, 0}, {2, 3, 1, 0, 2, 1}, {2, 1, 3, 2, 0, 1},
                                                   {1, 0, 2, 3, 1, 2}, {1, 2, 0, 1, 3, 2}, {0, 1, 1, 2, 2, 3}};

Outcome golden_pairs() {
  Outcome o;
  const auto p = pairs_operator(3).matrix();
  expect(o, p == RationalMatrix::from_rows(kGoldenP), "materialized pairs map differs from the golden matrix");
  return o;
}

Outcome golden_kemeny() {
  Outcome o;
  const auto k = kemeny_operator(3).matrix();
  const auto p = RationalMatrix::from_rows(kGoldenP);
  expect(o, k == RationalMatrix::from_rows(kGoldenK), "materialized Kemeny operator differs from the golden matrix");
  expect(o, k == p.transpose() * p, "Kemeny operator differs from P^t P");
  return o;
}

Outcome positional_example() {
  Outcome o;
  const ModuleVector f(Composition::full_ranking(3), std::vector<Rational>{3, 2, 4, 2, 0, 3});
  for (const Rational s : {Rational(0), Rational(1, 2), Rational(1)}) {
    const auto got = positional_map(candidate_vector({1, s, 0}), f).to_dense();
    expect(o, got == std::vector<Rational>{5 + 4 * s, 6 + 6 * s, 3 + 4 * s}, "tally differs at s = " + to_string(s));
  }
  return o;
}

Outcome kemeny_tie() {
  Outcome o;
  // ABC = rank 0, CAB = rank 4, BCA = rank 3.
  const ModuleVector f(Composition::full_ranking(3), std::vector<Rational>{2, 0, 0, 1, 2, 0});
  expect(o, kemeny_apply(f).winners == std::vector<std::uint64_t>{0, 4}, "winner set is not {ABC, CAB}");
  return o;
}

Outcome spectral_identities() {
  Outcome o;
  for (int n = 3; n <= 5; ++n) {
    const auto shape = Composition::full_ranking(n);
    const auto c = kemeny_constants(n);
    const Rational nf(factorial(n));
    const Rational pairs(big_binomial(n, 2));
    expect(o, c.kappa0 == nf / 2 * pairs && c.kappa1 == Rational(factorial(n + 1)) / 6 && c.kappa2 == nf / 6 &&
                  c.beta0 == Rational(n - 1) * nf / 2 * pairs && c.beta1 == Rational(n) * Rational(factorial(n + 1)) / 12,
           "constants differ from the closed forms at n = " + std::to_string(n));
    const auto t = kemeny_eigenprojections(n);
    const auto borda = WeightingVector::borda(n).as_vector();
    const auto p = oracle::pairs_matrix(n);
    const auto k_oracle = oracle::multiply(oracle::transpose(p), p);
    for (std::uint64_t r = 0; r < shape.tabloid_count(); ++r) {
      const auto e = basis_vector(shape, r);
      const auto t0 = t[0].apply(e), t1 = t[1].apply(e), t2 = t[2].apply(e);
      const auto k = kemeny_map(e);
      const auto bb = positional_adjoint(borda, positional_map(borda, e));
      std::vector<Rational> column;
      for (const auto& row : k_oracle) column.push_back(row[r]);
      expect(o, k.to_dense() == column, "Kemeny image differs from brute force");
      expect(o, k == c.kappa0 * t0 + c.kappa1 * t1 + c.kappa2 * t2, "K != sum kappa_i T_i at n = " + std::to_string(n));
      expect(o, bb == c.beta0 * t0 + c.beta1 * t1, "Tb* Tb != beta0 T0 + beta1 T1 at n = " + std::to_string(n));
      // Eigenvector checks that do not follow from how T1 and T2 are built.
      expect(o, kemeny_map(t0) == c.kappa0 * t0, "T0 image is not a kappa0 eigenvector");
      expect(o, kemeny_map(t1) == c.kappa1 * t1, "T1 image is not a kappa1 eigenvector");
      expect(o, kemeny_map(t2) == c.kappa2 * t2, "T2 image is not a kappa2 eigenvector");
      expect(o, positional_map(borda, t2).is_zero(), "Borda does not annihilate W2");
    }
  }
  return o;
}

Outcome projection_algebra() {
  Outcome o;
  for (int n = 3; n <= 4; ++n) {
    std::vector<RationalMatrix> m;
    for (const auto& t : kemeny_eigenprojections(n)) m.push_back(t.matrix());
    const std::vector<std::size_t> ranks{1, static_cast<std::size_t>(n - 1),
                                         static_cast<std::size_t>((n - 1) * (n - 2) / 2)};
    for (std::size_t i = 0; i < 3; ++i) {
      const auto tag = "T" + std::to_string(i) + " at n = " + std::to_string(n);
      expect(o, m[i] * m[i] == m[i], tag + " is not idempotent");
      expect(o, m[i].transpose() == m[i], tag + " is not self-adjoint");
      expect(o, rank(m[i]) == ranks[i], tag + " has rank " + std::to_string(rank(m[i])));
      for (std::size_t j = 0; j < 3; ++j) {
        if (i != j) expect(o, (m[i] * m[j] == RationalMatrix(m[i].rows(), m[i].cols())), tag + " does not annihilate");
      }
    }
  }
  return o;
}

Outcome profile_constructor() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 7);
  int trials = 0;
  for (int n = 3; n <= 4; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<ModuleVector> weights;
      while (true) {
        weights.clear();
        for (int i = 0; i < 2; ++i) {
          std::vector<Rational> w;
          for (int j = 0; j < n; ++j) w.push_back(oracle::random_rational(rng, 9, 3));
          weights.push_back(hat(candidate_vector(w)));
        }
        if (rank(RationalMatrix::from_rows({weights[0].to_dense(), weights[1].to_dense()})) == 2) break;
      }
      std::vector<ModuleVector> targets;
      for (int i = 0; i < 2; ++i) {
        std::vector<Rational> r;
        for (int j = 0; j < n; ++j) r.push_back(oracle::random_rational(rng));
        targets.push_back(hat(candidate_vector(r)));
      }
      const auto built = construct_profile(weights, targets);
      for (int i = 0; i < 2; ++i) {
        expect(o, positional_map(weights[i], built.solution) == targets[i],
               "tally " + std::to_string(i) + " missed its target at n = " + std::to_string(n));
      }
      ++trials;
    }
  }
  if (o.pass) o.detail = std::to_string(trials) + " trials";
  return o;
}

std::vector<ModuleVector> effective(const ModuleVector& w) { return effective_space(positional_operator(w)); }

Outcome effective_spaces() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 8);
  for (int n = 3; n <= 4; ++n) {
    const auto plurality = hat(WeightingVector::plurality(n).as_vector());
    const auto borda = hat(WeightingVector::borda(n).as_vector());
    const auto ep = effective(plurality), eb = effective(borda);
    expect(o, ep.size() == static_cast<std::size_t>(n - 1) && eb.size() == static_cast<std::size_t>(n - 1),
           "unexpected effective-space dimension");
    expect(o, subspaces_intersect_trivially(ep, eb), "plurality and Borda effective spaces meet at n = " +
                                                         std::to_string(n));
    std::vector<Rational> random_w;
    for (int j = 0; j < n; ++j) random_w.push_back(oracle::random_rational(rng));
    for (const auto& w : {WeightingVector::borda(n).as_vector(), WeightingVector::plurality(n).as_vector(),
                          candidate_vector(random_w)}) {
      const auto shifted = Rational(3) * w + ModuleVector::constant(w.shape(), 5);
      expect(o, subspaces_equal(effective(w), effective(shifted)), "E(T_w) != E(T_3w+5) at n = " + std::to_string(n));
    }
  }
  return o;
}

Outcome borda_kemeny_separation() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 9);
  // Counts per ranking drawn uniformly from 0..9.
  std::uniform_int_distribution<int> count(0, 9);
  int violations = 0, reversals = 0, profiles = 0;
  std::string example;
  for (const auto& [n, trials] : std::vector<std::pair<int, int>>{{3, 1000}, {4, 200}}) {
    const auto shape = Composition::full_ranking(n);
    const auto borda = WeightingVector::borda(n).as_vector();
    for (int trial = 0; trial < trials; ++trial) {
      std::vector<Rational> counts;
      for (std::uint64_t r = 0; r < shape.tabloid_count(); ++r) counts.emplace_back(count(rng));
      const ModuleVector f(shape, counts);
      const auto b = positional_map(borda, f).to_dense();
      bool violated = false;
      for (auto winner : kemeny_apply(f).winners) {
        const auto word = unrank(shape, winner).reading_word();
        const auto& top = b[static_cast<std::size_t>(word.front() - 1)];
        const auto& bottom = b[static_cast<std::size_t>(word.back() - 1)];
        if (top > bottom) continue;
        violated = true;
        if (top < bottom) ++reversals;
        if (example.empty()) {
          std::ostringstream s;
          s << "n=" << n << " profile (";
          for (std::size_t i = 0; i < counts.size(); ++i) s << (i ? "," : "") << to_string(counts[i]);
          s << ") Kemeny winner " << unrank(shape, winner).to_string() << " Borda top=" << to_string(top)
            << " bottom=" << to_string(bottom);
          example = s.str();
        }
      }
      violations += violated;
      ++profiles;
    }
  }
  std::ostringstream s;
  s << profiles << " profiles, " << violations << " without strict separation (" << reversals << " reversals)";
  if (!example.empty()) s << "; first: " << example;
  o.pass = violations == 0;
  o.detail = s.str();
  return o;
}

Outcome shapley_equivalence() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 10);
  for (int n = 2; n <= 6; ++n) {
    const auto c = shapley_coefficients(n);
    for (int trial = 0; trial < 100; ++trial) {
      const auto v = oracle::random_game(n, rng);
      expect(o, solution_apply(c, to_game(n, v)).to_dense() == oracle::shapley_by_orders(n, v),
             "mismatch with the permutation average at n = " + std::to_string(n));
    }
  }
  Game glove(3);
  glove.set(0b011, 1);
  glove.set(0b101, 1);
  glove.set(0b111, 1);
  expect(o, solution_apply(shapley_coefficients(3), glove).to_dense() ==
                std::vector<Rational>{Rational(2, 3), Rational(1, 6), Rational(1, 6)},
         "glove game payoffs differ from (2/3, 1/6, 1/6)");
  return o;
}

Outcome marginal_calculus() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 11);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      MarginalWeights m;
      for (int k = 0; k < n; ++k) m.m.push_back(oracle::random_rational(rng));
      const auto v = to_game(n, oracle::random_game(n, rng));
      expect(o, marginal_apply(m, v) == solution_apply(marginal_to_coefficients(m), v),
             "marginal value differs from its coefficients at n = " + std::to_string(n));
    }
  }
  return o;
}

Outcome efficiency_criterion() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 12);
  int efficient = 0, total = 0;
  for (int n = 2; n <= 5; ++n) {
    std::vector<Game> basis;
    const Game probe(n);
    for (Coalition t = 1; t <= probe.grand_coalition(); ++t) basis.push_back(Game::indicator(n, t));
    for (int trial = 0; trial < 30; ++trial) {
      auto c = random_coefficients(n, rng);
      if (trial % 3 != 2) {
        std::fill(c.c0.begin(), c.c0.end(), Rational(0));
        c.c0.back() = 1;
        // Every third of these is perturbed in one c0 entry.
        if (trial % 3 == 1) c.c0[rng() % c.c0.size()] += 1;
      }
      const bool criterion = efficiency_check(c);
      expect(o, criterion == is_efficient_on(c, basis), "criterion and semantic test disagree at n = " +
                                                             std::to_string(n));
      efficient += criterion;
      ++total;
    }
  }
  if (o.pass) o.detail = std::to_string(efficient) + "/" + std::to_string(total) + " efficient";
  return o;
}

Outcome duality() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 13);
  for (int n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto v = to_game(n, oracle::random_game(n, rng));
      expect(o, dual_game(dual_game(v)) == v, "duality is not an involution at n = " + std::to_string(n));
    }
  }
  for (int n = 2; n <= 5; ++n) {
    expect(o, self_dual_check(shapley_coefficients(n)), "Shapley is not self-dual at n = " + std::to_string(n));
  }
  return o;
}

Outcome common_kernel() {
  Outcome o;
  std::mt19937_64 rng(kSeed + 14);
  for (int n = 3; n <= 5; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const auto v = to_game(n, oracle::random_game(n, rng));
      std::vector<ModuleVector> kernel;
      for (const auto& level : decompose_game(v)) kernel.push_back(level.kernel);
      const auto residual = Game::from_levels(n, kernel);
      expect(o, solution_apply(random_coefficients(n, rng), residual).is_zero(),
             "residual not annihilated at n = " + std::to_string(n));
    }
  }
  return o;
}

Outcome dimensions() {
  Outcome o;
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      std::uint64_t total = 0;
      for (int j = 0; j <= k; ++j) total += two_row_dim(n, j);
      expect(o, total == binomial(n, k), "sum of two-row dimensions != C(n,k)");
    }
  }
  for (int n = 1; n <= 16; ++n) {
    std::uint64_t levels = 0;
    for (int k = 1; k <= n; ++k) levels += Composition::subsets(n, k).tabloid_count();
    expect(o, Game(n).dimension() == (std::uint64_t{1} << n) - 1 && levels == Game(n).dimension(),
           "game space dimension != 2^n - 1 at n = " + std::to_string(n));
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0: no runtime bound
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden pairs matrix, n = 3", 1.0, golden_pairs},
      {2, "golden Kemeny matrix, n = 3, equals P^t P", 1.0, golden_kemeny},
      {3, "positional example w = (1, s, 0)", 1.0, positional_example},
      {4, "Kemeny tie {ABC, CAB}", 1.0, kemeny_tie},
      {5, "spectral identities, n = 3, 4, 5", 60.0, spectral_identities},
      {6, "projection algebra and ranks, n = 3, 4", 10.0, projection_algebra},
      {7, "profile constructor, 20 seeded trials per n = 3, 4", 0, profile_constructor},
      {8, "effective spaces: plurality vs Borda, w vs 3w + 5", 0, effective_spaces},
      {9, "Borda separates Kemeny top from bottom", 60.0, borda_kemeny_separation},
      {10, "Shapley coefficients equal the permutation average", 0, shapley_equivalence},
      {11, "marginal values equal their recovered coefficients", 0, marginal_calculus},
      {12, "efficiency criterion equals the semantic test", 0, efficiency_criterion},
      {13, "duality involution and Shapley self-duality", 0, duality},
      {14, "common kernel annihilated by every concept", 0, common_kernel},
      {15, "dimension bookkeeping", 0, dimensions},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds >= c.budget_seconds && outcome.pass) {
      outcome = {false, "runtime " + std::to_string(seconds) + " s over budget"};
    }
    failures += !outcome.pass;
    std::printf("[%s] criterion %2d: %s (%.3f s%s)%s%s\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name, seconds,
                c.budget_seconds > 0 ? (", budget " + std::to_string(static_cast<int>(c.budget_seconds)) + " s").c_str()
                                     : "",
                outcome.detail.empty() ? "" : ": ", outcome.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
