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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "tabloid/coopgame.hpp"
#include "tabloid/errors.hpp"
#include "tabloid/linalg.hpp"

using namespace tabloid;

namespace {

Game to_game(int n, const oracle::GameValues& v) {
  return Game(n, std::vector<Rational>(v.begin() + 1, v.end()));
}

oracle::GameValues random_values(int n, std::mt19937_64& rng) { return oracle::random_game(n, rng); }

Game glove() {
  Game v(3);
  v.set(0b011, 1);
  v.set(0b101, 1);
  v.set(0b111, 1);
  return v;
}

Game three_singletons() {
  Game v(3);
  v.set(0b001, 1);
  v.set(0b010, 3);
  v.set(0b100, 5);
  return v;
}

SolutionCoefficients random_coefficients(int n, std::mt19937_64& rng) {
  auto c = SolutionCoefficients::zero(n);
  for (auto& x : c.c0) x = oracle::random_rational(rng);
  for (auto& x : c.c1) x = oracle::random_rational(rng);
  return c;
}

std::vector<Rational> values_of(const Payoff& p) { return p.to_dense(); }

}  // namespace

TEST_CASE("coalitions and levels") {
  CHECK(coalition_tabloid(4, 0b0101).to_string() == "1,3|2,4");
  CHECK(tabloid_coalition(coalition_tabloid(5, 0b10110)) == 0b10110);
  CHECK(coalition_tabloid(3, 0b111).shape().parts() == std::vector<int>{3});
  std::mt19937_64 rng(2);
  const auto v = to_game(4, random_values(4, rng));
  std::vector<ModuleVector> levels;
  for (int k = 1; k <= 4; ++k) levels.push_back(v.level_vector(k));
  CHECK(Game::from_levels(4, levels) == v);
  CHECK(Game(16).dimension() == 65535);
  CHECK_THROWS_AS(Game(17), CapacityError);
  CHECK_THROWS_AS(v.value(16), DomainError);
  CHECK(v.value(0) == 0);
}

TEST_CASE("level averages and the level operators") {
  const auto v = three_singletons();
  CHECK(level_average(v, 1) == 3);
  CHECK(level_average(v, 3) == 0);
  CHECK(values_of(t0k_apply(v, 1)) == std::vector<Rational>{3, 3, 3});
  CHECK(values_of(t1k_apply(v, 1)) == std::vector<Rational>{-2, 0, 2});
  CHECK_THROWS_AS(t1k_apply(v, 3), DomainError);
  CHECK_THROWS_AS(level_average(v, 0), DomainError);
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 6; ++n) {
    const auto g = to_game(n, random_values(n, rng));
    CHECK(values_of(t0k_apply(g, n)) == std::vector<Rational>(n, g.grand_value() / n));
    for (int k = 1; k < n; ++k) CHECK(t1k_apply(g, k).sum() == 0);
  }
}

TEST_CASE("Shapley value equals the classic formulas") {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto values = random_values(n, rng);
      const auto phi = values_of(solution_apply(shapley_coefficients(n), to_game(n, values)));
      CHECK(phi == oracle::shapley_by_orders(n, values));
      CHECK(phi == oracle::shapley_by_formula(n, values));
    }
  }
  CHECK(values_of(solution_apply(shapley_coefficients(3), glove())) ==
        std::vector<Rational>{Rational(2, 3), Rational(1, 6), Rational(1, 6)});
  const Game two(2, {1, 3, 6});
  CHECK(values_of(solution_apply(shapley_coefficients(2), two)) == std::vector<Rational>{2, 4});
  CHECK(values_of(marginal_apply(shapley_marginal_weights(2), two)) == std::vector<Rational>{2, 4});
  const auto c = shapley_coefficients(3);
  CHECK(c.c0 == std::vector<Rational>{0, 0, 1});
  CHECK(c.c1 == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK_THROWS_AS(shapley_coefficients(1), DomainError);
}

TEST_CASE("additive games pay each player their own value") {
  const std::vector<Rational> a{Rational(1, 2), -3, 7, 2};
  Game v(4);
  for (Coalition s = 1; s <= v.grand_coalition(); ++s) {
    Rational total = 0;
    for (int i = 0; i < 4; ++i)
      if (s & (1U << i)) total += a[static_cast<std::size_t>(i)];
    v.set(s, total);
  }
  CHECK(values_of(solution_apply(shapley_coefficients(4), v)) == a);
  CHECK(dual_game(v) == v);
}

TEST_CASE("marginal values and their coefficients") {
  std::mt19937_64 rng(23);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      MarginalWeights m;
      for (int k = 0; k < n; ++k) m.m.push_back(oracle::random_rational(rng));
      const auto values = random_values(n, rng);
      const auto direct = values_of(marginal_apply(m, to_game(n, values)));
      CHECK(direct == oracle::marginal_value(n, m.m, values));
      CHECK(values_of(solution_apply(marginal_to_coefficients(m), to_game(n, values))) == direct);
      const auto fit = fit_marginal(marginal_to_coefficients(m));
      CHECK(fit.exact);
      CHECK(fit.weights.m == m.m);
    }
  }
  const auto shapley = marginal_to_coefficients(MarginalWeights{{Rational(1, 3), Rational(1, 6), Rational(1, 3)}});
  CHECK(shapley.c0 == std::vector<Rational>{0, 0, 1});
  CHECK(shapley.c1 == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  const auto first = marginal_to_coefficients(MarginalWeights{{1, 0, 0}});
  CHECK(first.c0 == std::vector<Rational>{1, 0, 0});
  CHECK(first.c1 == std::vector<Rational>{1, 0});
  CHECK(shapley_marginal_weights(3).m == std::vector<Rational>{Rational(1, 3), Rational(1, 6), Rational(1, 3)});
  // m = (0, ..., 0, 1) pays v(N) - v(N - i).
  const auto v = three_singletons();
  CHECK(values_of(marginal_apply(MarginalWeights{{0, 0, 1}}, v)) == std::vector<Rational>{0, 0, 0});
  const auto fit = fit_marginal(SolutionCoefficients::make(3, {0, 0, 0}, {1, 0}));
  CHECK_FALSE(fit.exact);
}

TEST_CASE("efficiency: coefficient criterion matches the semantic test") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 5; ++n) {
    std::vector<Game> basis;
    const Game probe(n);
    for (Coalition t = 1; t <= probe.grand_coalition(); ++t) basis.push_back(Game::indicator(n, t));
    for (int trial = 0; trial < 10; ++trial) {
      auto c = random_coefficients(n, rng);
      if (trial % 2 == 0) {
        std::fill(c.c0.begin(), c.c0.end(), Rational(0));
        c.c0.back() = 1;
      }
      CHECK(efficiency_check(c) == is_efficient_on(c, basis));
      CHECK(efficiency_check(c) == (trial % 2 == 0));
    }
    CHECK_FALSE(efficiency_check(SolutionCoefficients::zero(n)));
  }
  auto c = SolutionCoefficients::zero(3);
  c.c0[0] = 1;
  CHECK_FALSE(efficiency_check(c));
  CHECK_FALSE(is_efficient_on(c, {three_singletons()}));
}

TEST_CASE("duality") {
  const Game two(2, {1, 3, 6});
  CHECK(dual_game(two) == Game(2, {3, 5, 6}));
  std::mt19937_64 rng(6);
  for (int n = 1; n <= 6; ++n) {
    const auto v = to_game(n, random_values(n, rng));
    CHECK(dual_game(dual_game(v)) == v);
    CHECK(dual_game(v).grand_value() == v.grand_value());
  }
  for (int n = 2; n <= 5; ++n) CHECK(self_dual_check(shapley_coefficients(n)));
  CHECK_FALSE(self_dual_check(MarginalWeights{{1, 0, 0}}));
  CHECK(self_dual_check(SolutionCoefficients::zero(4)));
}

TEST_CASE("a marginal value is self-dual exactly when m_k = m_(n+1-k)") {
  std::mt19937_64 rng(41);
  for (int n = 2; n <= 6; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      MarginalWeights m;
      for (int k = 0; k < n; ++k) m.m.push_back(oracle::random_rational(rng, 3, 2));
      if (trial % 2 == 0) {
        for (int k = 1; k <= n; ++k) m.m[static_cast<std::size_t>(n - k)] = m.m[static_cast<std::size_t>(k - 1)];
      }
      bool palindrome = true;
      for (int k = 1; k <= n; ++k) palindrome = palindrome && m[k] == m[n + 1 - k];
      CHECK(self_dual_check(m) == palindrome);
    }
  }
}

TEST_CASE("solution concepts commute with relabeling players") {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    for (int trial = 0; trial < 5; ++trial) {
      const auto v = to_game(n, random_values(n, rng));
      const auto c = random_coefficients(n, rng);
      const auto& s = perms[rng() % perms.size()];
      CHECK(solution_apply(c, act_game(s, v)) == act_vector(s, solution_apply(c, v)));
      MarginalWeights m;
      for (int k = 0; k < n; ++k) m.m.push_back(oracle::random_rational(rng));
      CHECK(marginal_apply(m, act_game(s, v)) == act_vector(s, marginal_apply(m, v)));
      CHECK(dual_game(act_game(s, v)) == act_game(s, dual_game(v)));
    }
  }
}

TEST_CASE("level decomposition") {
  std::mt19937_64 rng(19);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto v = to_game(n, random_values(n, rng));
      const auto levels = decompose_game(v);
      CHECK(reassemble(n, levels) == v);
      for (const auto& l : levels) {
        CHECK(inner_product(l.u0, l.u1) == 0);
        CHECK(inner_product(l.u0, l.kernel) == 0);
        CHECK(inner_product(l.u1, l.kernel) == 0);
      }
      // The kernel is invisible to every coefficient vector.
      std::vector<ModuleVector> kernel_levels, u1_levels;
      for (const auto& l : levels) {
        kernel_levels.push_back(l.kernel);
        u1_levels.push_back(l.u1);
      }
      const auto kernel = Game::from_levels(n, kernel_levels);
      CHECK(solution_apply(random_coefficients(n, rng), kernel).is_zero());
      // Projecting a projection changes nothing.
      const auto again = decompose_game(Game::from_levels(n, u1_levels));
      for (std::size_t k = 0; k < levels.size(); ++k) CHECK(again[k].u1 == levels[k].u1);
    }
  }
  // Symmetric game: only the constant parts survive.
  Game sym(4);
  for (Coalition s = 1; s <= sym.grand_coalition(); ++s) sym.set(s, Rational(std::popcount(s) * std::popcount(s)));
  for (const auto& l : decompose_game(sym)) {
    CHECK(l.u1.is_zero());
    CHECK(l.kernel.is_zero());
  }
}

TEST_CASE("level dimensions at n = 4, k = 2") {
  // Decompose every indicator of level 2 and read off the ranks of the three
  // projections: 6 = 1 + 3 + 2.
  const int n = 4, k = 2;
  std::vector<std::vector<Rational>> u0, u1, kernel;
  const Game probe(n);
  for (Coalition s = 1; s <= probe.grand_coalition(); ++s) {
    if (std::popcount(s) != k) continue;
    const auto l = decompose_game(Game::indicator(n, s))[k - 1];
    u0.push_back(l.u0.to_dense());
    u1.push_back(l.u1.to_dense());
    kernel.push_back(l.kernel.to_dense());
  }
  CHECK(rank(RationalMatrix::from_rows(u0)) == 1);
  CHECK(rank(RationalMatrix::from_rows(u1)) == 3);
  CHECK(rank(RationalMatrix::from_rows(kernel)) == 2);
  CHECK(level_schur_constant(4, 2) == Rational(1, 2));
}

TEST_CASE("Schur constants match the closed form") {
  // gamma^-2 C(n,k) k(n-k) / (n(n-1))
  for (int n = 2; n <= 10; ++n) {
    for (int k = 1; k < n; ++k) {
      const oracle::Q gamma = oracle::factorial(n - 2) / (oracle::factorial(k - 1) * oracle::factorial(n - k - 1));
      const oracle::Q binom = oracle::factorial(n) / (oracle::factorial(k) * oracle::factorial(n - k));
      const oracle::Q expected = binom * k * (n - k) / (gamma * gamma * n * (n - 1));
      CHECK(level_schur_constant(n, k) == expected);
    }
  }
}
