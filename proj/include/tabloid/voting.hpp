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

// Voting procedures as module homomorphisms on M^(1,...,1).
//
// Candidates are the labels 1..n. A candidate i is identified with the
// tabloid of shape (1, n-1) whose top row is {i}, which has rank i - 1, so
// a vector on (1, n-1) lists one value per candidate in label order. The
// ordered pair (i, j) is the tabloid {i}|{j}|rest of shape (1, 1, n-2).

#ifndef TABLOID_VOTING_HPP
#define TABLOID_VOTING_HPP

#include <array>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tabloid/linear_map.hpp"
#include "tabloid/module_vector.hpp"

namespace tabloid {

// Ballot counts (or any rational function) on full or partial rankings.
struct Profile {
  ModuleVector counts;
  Rational voter_total;
  // False when some value is negative or non-integral: the vector is then
  // a function on rankings rather than ballot data.
  bool is_ballot_data = true;

  static Profile from_counts(ModuleVector counts);
};

// Points awarded by rank position: entry j (1-based) goes to the candidate
// in row j of a ballot.
class WeightingVector {
 public:
  // Throws DomainError if the weights increase somewhere and
  // allow_unsorted is false.
  static WeightingVector from_weights(std::vector<Rational> weights, bool allow_unsorted = false);
  static WeightingVector borda(int n);
  static WeightingVector plurality(int n);
  static WeightingVector antiplurality(int n);
  // "borda" | "plurality" | "antiplurality"
  static WeightingVector preset(std::string_view name, int n);

  int n() const { return weights_.n(); }
  // w_position for position in 1..n.
  Rational operator[](int position) const { return weights_.at(static_cast<std::uint64_t>(position - 1)); }
  std::vector<Rational> weights() const { return weights_.to_dense(); }
  const ModuleVector& as_vector() const { return weights_; }
  bool is_nonincreasing() const;

 private:
  explicit WeightingVector(ModuleVector weights) : weights_(std::move(weights)) {}
  ModuleVector weights_;
};

// Scores over some index set together with the argmax set and the
// ordinal ranking as tiers of equal score, best first.
struct RankingScores {
  ModuleVector scores;
  std::vector<std::uint64_t> winners;
  std::vector<std::vector<std::uint64_t>> tiers;

  static RankingScores from_scores(ModuleVector scores);
};

// True when both score vectors induce the same tiers.
bool same_ordinal_ranking(const RankingScores& a, const RankingScores& b);

// --- positional procedures -------------------------------------------------

// T_w(f): candidate i collects f(x) * w_j for every ranking x placing i in
// row j. `weights` lives on (1, n-1) and need not be sorted; f lives on
// (1,...,1).
ModuleVector positional_map(const ModuleVector& weights, const ModuleVector& f);
// Same tally for partial rankings: one weight per row of f's shape.
ModuleVector positional_map_rows(std::span<const Rational> row_weights, const ModuleVector& f);
// T_w^*(g)(x) = sum_i g(i) w_{row of i in x}.
ModuleVector positional_adjoint(const ModuleVector& weights, const ModuleVector& g);
LinearMap positional_operator(const ModuleVector& weights);

RankingScores positional_tally(const WeightingVector& w, const ModuleVector& f);

// w^(i): the function x -> w_{row of i in x} on full rankings.
ModuleVector candidate_weight_function(const ModuleVector& weights, int candidate);

// w ~ w': the U1 parts are positive multiples of each other (two vanishing
// U1 parts count as equivalent).
bool weighting_equivalent(const ModuleVector& w, const ModuleVector& w2);
bool weighting_equivalent(const WeightingVector& w, const WeightingVector& w2);

// --- group algebra tallies and simple ranking scoring functions -----------

// f~ . v = sum_x f(x) (sigma_x . v) for f on full rankings, v on any shape
// with the same n.
ModuleVector group_algebra_tally(const ModuleVector& f, const ModuleVector& v);

// T_z(f) = f~ . z, with winners the argmax rankings.
RankingScores srsf_apply(const ModuleVector& z, const ModuleVector& f);

// Number of pairs ranked in opposite orders. Throws ShapeError unless both
// are full rankings of the same n.
int kendall_tau(const Tabloid& x, const Tabloid& y);

// z(x) = C(n,2) - d(x, x0).
ModuleVector kendall_z(int n);

// --- pairs map and Kemeny ---------------------------------------------------

// a_ij: 1 on rankings with i above j.
ModuleVector pair_indicator(int n, int i, int j);
// Rank of the tabloid {i}|{j}|rest in X^(1,1,n-2) (X^(1,1) when n == 2).
std::uint64_t pair_rank(int n, int i, int j);

ModuleVector pairs_map(const ModuleVector& f);
ModuleVector pairs_map_adjoint(const ModuleVector& g);
LinearMap pairs_operator(int n);

// K = P* o P.
ModuleVector kemeny_map(const ModuleVector& f);
LinearMap kemeny_operator(int n);
RankingScores kemeny_apply(const ModuleVector& f);

// gamma0 T0 + gamma1 T1 + gamma2 T2; requires n >= 3.
ModuleVector family_map(const std::array<Rational, 3>& gamma, const ModuleVector& f);
RankingScores family_apply(const std::array<Rational, 3>& gamma, const ModuleVector& f);

// T_b* o T_w as a ranking scoring function.
ModuleVector borda_srsf_map(const ModuleVector& weights, const ModuleVector& f);
RankingScores borda_srsf_apply(const WeightingVector& w, const ModuleVector& f);

// --- profile construction ---------------------------------------------------

struct ConstructedProfile {
  ModuleVector solution;
  std::uint64_t solution_space_dimension = 0;
};

// One exact f with T_{w_i}(f) = r_i for all i. Every w_i and r_i must lie
// in U1 and the w_i must be linearly independent (DomainError otherwise).
ConstructedProfile construct_profile(const std::vector<ModuleVector>& weights,
                                     const std::vector<ModuleVector>& targets);

struct IntegerProfile {
  ModuleVector profile;
  Integer scale;  // profile = scale * f + shift * 1
  Integer shift;
};

// Scales f by the lcm of its denominators and shifts by the all-ones
// function until every count is a nonnegative integer; nullopt when the
// needed shift exceeds shift_bound. Tallies by weighting vectors in U1
// are multiplied by `scale` and otherwise unchanged.
std::optional<IntegerProfile> to_integer_profile(const ModuleVector& f, const Integer& shift_bound);

// A nonnegative integer profile on which w and w2 produce different
// ordinal rankings; nullopt when w ~ w2.
std::optional<ModuleVector> distinguishing_profile(const ModuleVector& w, const ModuleVector& w2);

}  // namespace tabloid

#endif  // TABLOID_VOTING_HPP
