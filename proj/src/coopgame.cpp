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


#include "tabloid/coopgame.hpp"

#include <bit>
#include <string>

#include "tabloid/combinatorics.hpp"
#include "tabloid/errors.hpp"
#include "tabloid/linalg.hpp"

namespace tabloid {

namespace {

Composition level_shape(int n, int k) { return Composition::subsets(n, k); }

void check_level(const Game& v, int k, int top) {
  if (k < 1 || k > top) {
    throw DomainError("level " + std::to_string(k) + " out of range 1.." + std::to_string(top) + " for n = " +
                      std::to_string(v.n()));
  }
}

Payoff zero_payoff(int n) { return ModuleVector(Composition::candidates(n)); }

void require_payoff(const Payoff& g, int n) {
  if (g.shape() != Composition::candidates(n)) {
    throw ShapeError("payoff vector on " + g.shape().to_string() + " for a game of " + std::to_string(n) + " players");
  }
}

}  // namespace

Tabloid coalition_tabloid(int n, Coalition s) {
  const int k = std::popcount(s);
  if (k == 0 || (s >> n) != 0) throw DomainError("coalition " + std::to_string(s) + " is not a nonempty subset");
  std::vector<int> row_of(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) row_of[static_cast<std::size_t>(i)] = (s >> i) & 1U ? 0 : 1;
  return Tabloid(level_shape(n, k), std::move(row_of));
}

Coalition tabloid_coalition(const Tabloid& x) {
  Coalition s = 0;
  for (int i = 1; i <= x.n(); ++i) {
    if (x.row_of(i) == 0) s |= Coalition{1} << (i - 1);
  }
  return s;
}

// --- games -------------------------------------------------------------------

Game::Game(int n) : n_(n) {
  if (n < 1) throw DomainError("a game needs at least one player");
  if (n > kMaxPlayers) {
    throw CapacityError("games are stored for at most " + std::to_string(kMaxPlayers) + " players, got " +
                        std::to_string(n));
  }
  values_.assign(static_cast<std::size_t>(grand_coalition()), Rational(0));
}

Game::Game(int n, std::vector<Rational> values) : Game(n) {
  if (values.size() != values_.size()) {
    throw ShapeError("a game of " + std::to_string(n) + " players has " + std::to_string(values_.size()) +
                     " coalition values, got " + std::to_string(values.size()));
  }
  values_ = std::move(values);
}

Game Game::from_levels(int n, const std::vector<ModuleVector>& levels) {
  Game v(n);
  if (levels.size() != static_cast<std::size_t>(n)) {
    throw ShapeError("expected " + std::to_string(n) + " levels, got " + std::to_string(levels.size()));
  }
  for (int k = 1; k <= n; ++k) {
    const auto& level = levels[static_cast<std::size_t>(k - 1)];
    if (level.shape() != level_shape(n, k)) {
      throw ShapeError("level " + std::to_string(k) + " should live on " + level_shape(n, k).to_string() +
                       ", got " + level.shape().to_string());
    }
    for_each_term(level, [&](std::uint64_t, const Tabloid& x, const Rational& value) {
      v.set(tabloid_coalition(x), value);
    });
  }
  return v;
}

Game Game::unanimity(int n, Coalition t) {
  Game v(n);
  v.check(t);
  for (Coalition s = 1; s <= v.grand_coalition(); ++s) {
    if ((s & t) == t) v.values_[s - 1] = 1;
  }
  return v;
}

Game Game::indicator(int n, Coalition t) {
  Game v(n);
  v.set(t, 1);
  return v;
}

void Game::check(Coalition s) const {
  if (s == 0 || s > grand_coalition()) {
    throw DomainError("coalition mask " + std::to_string(s) + " out of range 1.." + std::to_string(grand_coalition()));
  }
}

Rational Game::value(Coalition s) const {
  if (s == 0) return 0;
  check(s);
  return values_[s - 1];
}

void Game::set(Coalition s, Rational value) {
  check(s);
  values_[s - 1] = std::move(value);
}

ModuleVector Game::level_vector(int k) const {
  check_level(*this, k, n_);
  const auto shape = level_shape(n_, k);
  ModuleVectorBuilder out(shape);
  for_each_tabloid(shape, [&](std::uint64_t r, const Tabloid& x) { out[r] = values_[tabloid_coalition(x) - 1]; });
  return std::move(out).build();
}

Game operator+(const Game& a, const Game& b) {
  if (a.n() != b.n()) throw ShapeError("adding games with different player counts");
  Game out = a;
  for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] += b.values_[i];
  return out;
}

Game operator-(const Game& a, const Game& b) { return a + Rational(-1) * b; }

Game operator*(const Rational& c, const Game& v) {
  Game out = v;
  for (auto& x : out.values_) x *= c;
  return out;
}

Game act_game(const Permutation& sigma, const Game& v) {
  if (sigma.size() != v.n()) throw ShapeError("permutation size differs from the player count");
  Game out(v.n());
  for (Coalition s = 1; s <= v.grand_coalition(); ++s) {
    Coalition image = 0;
    for (int i = 1; i <= v.n(); ++i) {
      if ((s >> (i - 1)) & 1U) image |= Coalition{1} << (sigma(i) - 1);
    }
    out.set(image, v.value(s));
  }
  return out;
}

// --- coefficients ------------------------------------------------------------

SolutionCoefficients SolutionCoefficients::make(int n, std::vector<Rational> c0, std::vector<Rational> c1) {
  if (n < 1) throw DomainError("coefficients need n >= 1");
  if (c0.size() != static_cast<std::size_t>(n) || c1.size() != static_cast<std::size_t>(n - 1)) {
    throw ShapeError("coefficients for n = " + std::to_string(n) + " need " + std::to_string(n) + " c0 and " +
                     std::to_string(n - 1) + " c1 values, got " + std::to_string(c0.size()) + " and " +
                     std::to_string(c1.size()));
  }
  return {std::move(c0), std::move(c1)};
}

SolutionCoefficients SolutionCoefficients::zero(int n) {
  return make(n, std::vector<Rational>(static_cast<std::size_t>(n)),
              std::vector<Rational>(static_cast<std::size_t>(n > 0 ? n - 1 : 0)));
}

Rational MarginalWeights::operator[](int k) const {
  if (k == n() + 1) return 0;
  if (k < 1 || k > n()) throw DomainError("marginal weight index out of range");
  return m[static_cast<std::size_t>(k - 1)];
}

// --- level operators ---------------------------------------------------------

Rational level_average(const Game& v, int k) {
  check_level(v, k, v.n());
  Rational total = 0;
  for (Coalition s = 1; s <= v.grand_coalition(); ++s) {
    if (std::popcount(s) == k) total += v.value(s);
  }
  return total / Rational(big_binomial(v.n(), k));
}

Rational level_gamma(int n, int k) { return Rational(big_binomial(n - 2, k - 1)); }

Payoff t0k_apply(const Game& v, int k) {
  return ModuleVector::constant(Composition::candidates(v.n()), level_average(v, k) / k);
}

Payoff t1k_apply(const Game& v, int k) {
  check_level(v, k, v.n() - 1);
  const int n = v.n();
  const Rational mean = level_average(v, k);
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (Coalition s = 1; s <= v.grand_coalition(); ++s) {
    if (std::popcount(s) != k) continue;
    const Rational deviation = v.value(s) - mean;
    if (sgn(deviation) == 0) continue;
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1U) out[static_cast<std::size_t>(i)] += deviation;
    }
  }
  const Rational gamma = level_gamma(n, k);
  for (auto& x : out) x /= gamma;
  Payoff result(Composition::candidates(n), std::move(out));
  if (sgn(result.sum()) != 0) throw Error("internal error: T1 image does not sum to zero");
  return result;
}

ModuleVector t1k_adjoint(const Payoff& g, int k) {
  const int n = g.n();
  require_payoff(g, n);
  if (k < 1 || k > n - 1) throw DomainError("T1 adjoint level out of range");
  const auto gv = g.to_dense();
  const Rational offset = Rational(k) / n * g.sum();
  const Rational gamma = level_gamma(n, k);
  const auto shape = level_shape(n, k);
  ModuleVectorBuilder out(shape);
  for_each_tabloid(shape, [&](std::uint64_t r, const Tabloid& x) {
    Rational s = -offset;
    for (int i = 1; i <= n; ++i) {
      if (x.row_of(i) == 0) s += gv[static_cast<std::size_t>(i - 1)];
    }
    out[r] = s / gamma;
  });
  return std::move(out).build();
}

Payoff solution_apply(const SolutionCoefficients& c, const Game& v) {
  const int n = v.n();
  if (c.c0.size() != static_cast<std::size_t>(n) || c.c1.size() != static_cast<std::size_t>(n - 1)) {
    throw ShapeError("coefficients for n = " + std::to_string(c.n()) + " applied to a game of " +
                     std::to_string(n) + " players");
  }
  Payoff out = zero_payoff(n);
  for (int k = 1; k <= n; ++k) {
    const auto& a = c.c0[static_cast<std::size_t>(k - 1)];
    if (sgn(a) != 0) out = out + a * t0k_apply(v, k);
  }
  for (int k = 1; k <= n - 1; ++k) {
    const auto& b = c.c1[static_cast<std::size_t>(k - 1)];
    if (sgn(b) != 0) out = out + b * t1k_apply(v, k);
  }
  return out;
}

SolutionCoefficients shapley_coefficients(int n) {
  if (n < 2) throw DomainError("Shapley coefficients need n >= 2");
  auto c = SolutionCoefficients::zero(n);
  c.c0.back() = 1;
  for (auto& x : c.c1) x = Rational(1) / (n - 1);
  return c;
}

MarginalWeights shapley_marginal_weights(int n) {
  if (n < 1) throw DomainError("marginal weights need n >= 1");
  MarginalWeights m;
  const Rational nf(factorial(n));
  for (int k = 1; k <= n; ++k) m.m.emplace_back(Rational(factorial(k - 1) * factorial(n - k)) / nf);
  return m;
}

bool efficiency_check(const SolutionCoefficients& c) {
  if (c.c0.empty()) return false;
  for (std::size_t k = 0; k + 1 < c.c0.size(); ++k) {
    if (sgn(c.c0[k]) != 0) return false;
  }
  return c.c0.back() == 1;
}

bool is_efficient_on(const SolutionCoefficients& c, const std::vector<Game>& games) {
  for (const auto& v : games) {
    if (solution_apply(c, v).sum() != v.grand_value()) return false;
  }
  return true;
}

Payoff marginal_apply(const MarginalWeights& m, const Game& v) {
  const int n = v.n();
  if (m.n() != n) throw ShapeError("marginal weights for n = " + std::to_string(m.n()) + " on a game of " + std::to_string(n));
  std::vector<Rational> out(static_cast<std::size_t>(n));
  for (Coalition s = 1; s <= v.grand_coalition(); ++s) {
    const auto& weight = m.m[static_cast<std::size_t>(std::popcount(s) - 1)];
    if (sgn(weight) == 0) continue;
    for (int i = 0; i < n; ++i) {
      const Coalition bit = Coalition{1} << i;
      if (s & bit) out[static_cast<std::size_t>(i)] += weight * (v.value(s) - v.value(s & ~bit));
    }
  }
  return Payoff(Composition::candidates(n), std::move(out));
}

SolutionCoefficients marginal_to_coefficients(const MarginalWeights& m) {
  const int n = m.n();
  auto c = SolutionCoefficients::zero(n);
  for (int k = 1; k <= n; ++k) {
    c.c0[static_cast<std::size_t>(k - 1)] =
        Rational(k) * (m[k] * Rational(big_binomial(n - 1, k - 1)) - m[k + 1] * Rational(big_binomial(n - 1, k)));
  }
  for (int k = 1; k <= n - 1; ++k) c.c1[static_cast<std::size_t>(k - 1)] = level_gamma(n, k) * (m[k] + m[k + 1]);
  return c;
}

MarginalFit fit_marginal(const SolutionCoefficients& c) {
  const int n = c.n();
  if (n < 1) throw DomainError("empty coefficient vector");
  // Column j is the coefficient vector of the marginal value with m = e_j.
  const auto rows = static_cast<std::size_t>(2 * n - 1);
  RationalMatrix a(rows, static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    MarginalWeights e{std::vector<Rational>(static_cast<std::size_t>(n))};
    e.m[static_cast<std::size_t>(j)] = 1;
    const auto col = marginal_to_coefficients(e);
    for (int r = 0; r < n; ++r) a(static_cast<std::size_t>(r), static_cast<std::size_t>(j)) = col.c0[static_cast<std::size_t>(r)];
    for (int r = 0; r + 1 < n; ++r) {
      a(static_cast<std::size_t>(n + r), static_cast<std::size_t>(j)) = col.c1[static_cast<std::size_t>(r)];
    }
  }
  std::vector<Rational> target(c.c0);
  target.insert(target.end(), c.c1.begin(), c.c1.end());

  const auto at = a.transpose();
  const auto normal = at * a;
  std::vector<Rational> rhs(static_cast<std::size_t>(n));
  for (std::size_t j = 0; j < rhs.size(); ++j) {
    for (std::size_t r = 0; r < rows; ++r) rhs[j] += at(j, r) * target[r];
  }
  auto solution = solve(normal, rhs);
  if (!solution) throw Error("internal error: normal equations inconsistent");
  MarginalFit fit{MarginalWeights{std::move(solution->particular)}, false};
  const auto back = marginal_to_coefficients(fit.weights);
  fit.exact = back.c0 == c.c0 && back.c1 == c.c1;
  return fit;
}

Game dual_game(const Game& v) {
  Game out(v.n());
  const auto grand = v.grand_coalition();
  const auto total = v.grand_value();
  for (Coalition s = 1; s <= grand; ++s) out.set(s, total - v.value(grand & ~s));
  return out;
}

bool self_dual_check(const SolutionConcept& phi, int n) {
  const Game probe(n);
  for (Coalition t = 1; t <= probe.grand_coalition(); ++t) {
    const auto u = Game::unanimity(n, t);
    if (!(phi(dual_game(u)) == phi(u))) return false;
  }
  return true;
}

bool self_dual_check(const SolutionCoefficients& c) {
  return self_dual_check([&](const Game& v) { return solution_apply(c, v); }, c.n());
}

bool self_dual_check(const MarginalWeights& m) {
  return self_dual_check([&](const Game& v) { return marginal_apply(m, v); }, m.n());
}

// --- level decomposition -----------------------------------------------------

Rational level_schur_constant(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) throw DomainError("Schur constant needs 1 <= k <= n - 1");
  // Entry (i, S) of T1^k is ([i in S] - k/n) / gamma(k).
  const Rational gamma = level_gamma(n, k);
  const Rational share = Rational(k) / n;
  Rational frobenius = 0;
  for_each_tabloid(level_shape(n, k), [&](std::uint64_t, const Tabloid& x) {
    for (int i = 1; i <= n; ++i) {
      const Rational entry = ((x.row_of(i) == 0 ? Rational(1) : Rational(0)) - share) / gamma;
      frobenius += entry * entry;
    }
  });
  return frobenius / (n - 1);
}

std::vector<LevelDecomposition> decompose_game(const Game& v) {
  const int n = v.n();
  std::vector<LevelDecomposition> out;
  for (int k = 1; k <= n; ++k) {
    const auto shape = level_shape(n, k);
    auto u0 = ModuleVector::constant(shape, level_average(v, k));
    auto u1 = k < n ? t1k_adjoint(t1k_apply(v, k), k) / level_schur_constant(n, k) : ModuleVector(shape);
    auto kernel = v.level_vector(k) - u0 - u1;
    LevelDecomposition level{k, std::move(u0), std::move(u1), std::move(kernel)};
    out.push_back(std::move(level));
  }
  return out;
}

Game reassemble(int n, const std::vector<LevelDecomposition>& levels) {
  std::vector<ModuleVector> parts;
  for (const auto& level : levels) parts.push_back(level.u0 + level.u1 + level.kernel);
  return Game::from_levels(n, parts);
}

}  // namespace tabloid
