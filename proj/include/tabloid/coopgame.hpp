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


// Transferable-utility cooperative games and linear symmetric solution
// concepts.
//
// A coalition S is a bitmask with bit i-1 set when player i belongs to S.
// The size-k level of a game is the vector on X^(k,n-k) whose tabloid
// {S}|{N-S} carries v(S); for k = n the shape is (n).

#ifndef TABLOID_COOPGAME_HPP
#define TABLOID_COOPGAME_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "tabloid/module_vector.hpp"
#include "tabloid/permutation.hpp"

namespace tabloid {

using Coalition = std::uint32_t;

inline constexpr int kMaxPlayers = 16;

// The tabloid {S}|{N-S} in X^(|S|, n-|S|) and back.
Tabloid coalition_tabloid(int n, Coalition s);
Coalition tabloid_coalition(const Tabloid& x);

class Game {
 public:
  // The zero game. Throws DomainError for n < 1, CapacityError for n > 16.
  explicit Game(int n);
  // values[s - 1] = v(s) for s = 1 .. 2^n - 1.
  Game(int n, std::vector<Rational> values);
  // levels[k - 1] on X^(k, n-k) for k = 1..n.
  static Game from_levels(int n, const std::vector<ModuleVector>& levels);
  // u_T(S) = 1 when T is contained in S; T nonempty.
  static Game unanimity(int n, Coalition t);
  // 1 on the single coalition t.
  static Game indicator(int n, Coalition t);

  int n() const { return n_; }
  Coalition grand_coalition() const { return static_cast<Coalition>((std::uint64_t{1} << n_) - 1); }
  std::uint64_t dimension() const { return grand_coalition(); }

  // v(s); v(empty) = 0.
  Rational value(Coalition s) const;
  void set(Coalition s, Rational value);
  Rational grand_value() const { return values_.back(); }
  const std::vector<Rational>& values() const { return values_; }

  ModuleVector level_vector(int k) const;

  friend Game operator+(const Game& a, const Game& b);
  friend Game operator-(const Game& a, const Game& b);
  friend Game operator*(const Rational& c, const Game& v);
  friend bool operator==(const Game& a, const Game& b) = default;

 private:
  void check(Coalition s) const;

  int n_;
  std::vector<Rational> values_;
};

// (sigma . v)(sigma S) = v(S).
Game act_game(const Permutation& sigma, const Game& v);

// Payoff vectors live on (1, n-1): entry i - 1 belongs to player i.
using Payoff = ModuleVector;

struct SolutionCoefficients {
  std::vector<Rational> c0;  // c0^1 .. c0^n
  std::vector<Rational> c1;  // c1^1 .. c1^(n-1)

  // Throws ShapeError unless the lengths are n and n - 1.
  static SolutionCoefficients make(int n, std::vector<Rational> c0, std::vector<Rational> c1);
  static SolutionCoefficients zero(int n);
  int n() const { return static_cast<int>(c0.size()); }
};

struct MarginalWeights {
  std::vector<Rational> m;  // m_1 .. m_n

  int n() const { return static_cast<int>(m.size()); }
  // m_k with m_(n+1) = 0.
  Rational operator[](int k) const;
};

// Mean of v over the C(n, k) coalitions of size k; 1 <= k <= n.
Rational level_average(const Game& v, int k);
// gamma(k) = C(n-2, k-1).
Rational level_gamma(int n, int k);

// Every player gets A(v, k) / k.
Payoff t0k_apply(const Game& v, int k);
// gamma(k)^-1 sum over |S| = k, S containing i, of v(S) - A(v, k);
// requires 1 <= k <= n - 1.
Payoff t1k_apply(const Game& v, int k);
// The adjoint of T1^k as a map from payoffs to the size-k level.
ModuleVector t1k_adjoint(const Payoff& g, int k);

Payoff solution_apply(const SolutionCoefficients& c, const Game& v);

SolutionCoefficients shapley_coefficients(int n);
// m_k = (k-1)!(n-k)!/n!.
MarginalWeights shapley_marginal_weights(int n);

// c0^1 = ... = c0^(n-1) = 0 and c0^n = 1.
bool efficiency_check(const SolutionCoefficients& c);
// Sum of payoffs equals v(N) on every supplied game.
bool is_efficient_on(const SolutionCoefficients& c, const std::vector<Game>& games);

// phi(v)_i = sum over S containing i of m_|S| (v(S) - v(S - i)).
Payoff marginal_apply(const MarginalWeights& m, const Game& v);
SolutionCoefficients marginal_to_coefficients(const MarginalWeights& m);

struct MarginalFit {
  MarginalWeights weights;
  bool exact = false;
};
// Least-squares marginal weights for the given coefficients, solved
// exactly through the normal equations in coefficient space.
MarginalFit fit_marginal(const SolutionCoefficients& c);

// (*v)(S) = v(N) - v(N - S).
Game dual_game(const Game& v);

using SolutionConcept = std::function<Payoff(const Game&)>;
// phi(*v) = phi(v) on all unanimity games of n players.
bool self_dual_check(const SolutionConcept& phi, int n);
bool self_dual_check(const SolutionCoefficients& c);
bool self_dual_check(const MarginalWeights& m);

// alpha_k with T1^k (T1^k)* = alpha_k on U1, from the explicit entries of
// T1^k; requires 1 <= k <= n - 1.
Rational level_schur_constant(int n, int k);

struct LevelDecomposition {
  int k = 0;
  ModuleVector u0;      // constant A(v, k)
  ModuleVector u1;      // projection onto U1^k; zero when k = n
  ModuleVector kernel;  // the rest
};

std::vector<LevelDecomposition> decompose_game(const Game& v);
Game reassemble(int n, const std::vector<LevelDecomposition>& levels);

}  // namespace tabloid

#endif  // TABLOID_COOPGAME_HPP
