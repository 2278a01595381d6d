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

#include "tabloid/voting.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tabloid/combinatorics.hpp"
#include "tabloid/errors.hpp"
#include "tabloid/group_algebra.hpp"
#include "tabloid/linalg.hpp"
#include "tabloid/specht.hpp"

namespace tabloid {

namespace {

void require_full_ranking(const ModuleVector& f, const char* what) {
  if (!f.shape().is_full_ranking()) {
    throw ShapeError(std::string(what) + " expects a vector on full rankings, got M^" + f.shape().to_string());
  }
}

void require_candidate_vector(const ModuleVector& w, int n, const char* what) {
  if (w.shape() != Composition::candidates(n)) {
    throw ShapeError(std::string(what) + " expects a vector on " + Composition::candidates(n).to_string() +
                     ", got " + w.shape().to_string());
  }
}

// table[(i-1)*n + (j-1)] = pair_rank(n, i, j)
std::vector<std::uint64_t> pair_rank_table(int n) {
  std::vector<std::uint64_t> table(static_cast<std::size_t>(n * n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) table[static_cast<std::size_t>((i - 1) * n + (j - 1))] = pair_rank(n, i, j);
    }
  }
  return table;
}

}  // namespace

Profile Profile::from_counts(ModuleVector counts) {
  Profile p{std::move(counts), 0, true};
  p.counts.for_each_nonzero([&](std::uint64_t, const Rational& v) {
    p.voter_total += v;
    if (sgn(v) < 0 || !is_integer(v)) p.is_ballot_data = false;
  });
  return p;
}

// --- weighting vectors -------------------------------------------------------

WeightingVector WeightingVector::from_weights(std::vector<Rational> weights, bool allow_unsorted) {
  const int n = static_cast<int>(weights.size());
  if (n < 1) throw DomainError("a weighting vector needs at least one weight");
  WeightingVector w(ModuleVector(Composition::candidates(n), std::move(weights)));
  if (!allow_unsorted && !w.is_nonincreasing()) {
    throw DomainError("weights must be non-increasing (w1 >= w2 >= ... >= wn)");
  }
  return w;
}

WeightingVector WeightingVector::borda(int n) {
  std::vector<Rational> w;
  for (int j = 1; j <= n; ++j) w.emplace_back(n - j);
  return from_weights(std::move(w));
}

WeightingVector WeightingVector::plurality(int n) {
  std::vector<Rational> w(static_cast<std::size_t>(n), Rational(0));
  w.front() = 1;
  return from_weights(std::move(w));
}

WeightingVector WeightingVector::antiplurality(int n) {
  std::vector<Rational> w(static_cast<std::size_t>(n), Rational(1));
  w.back() = 0;
  return from_weights(std::move(w));
}

WeightingVector WeightingVector::preset(std::string_view name, int n) {
  if (name == "borda") return borda(n);
  if (name == "plurality") return plurality(n);
  if (name == "antiplurality") return antiplurality(n);
  throw DomainError("unknown weighting preset \"" + std::string(name) + "\"");
}

bool WeightingVector::is_nonincreasing() const {
  const auto w = weights();
  return std::is_sorted(w.begin(), w.end(), [](const Rational& a, const Rational& b) { return a > b; });
}

RankingScores RankingScores::from_scores(ModuleVector scores) {
  RankingScores out{std::move(scores), {}, {}};
  const auto values = out.scores.to_dense();
  std::vector<std::uint64_t> order(values.size());
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] > values[b]; });
  for (auto r : order) {
    if (out.tiers.empty() || values[out.tiers.back().front()] != values[r]) out.tiers.emplace_back();
    out.tiers.back().push_back(r);
  }
  if (!out.tiers.empty()) out.winners = out.tiers.front();
  return out;
}

bool same_ordinal_ranking(const RankingScores& a, const RankingScores& b) { return a.tiers == b.tiers; }

// --- positional procedures ---------------------------------------------------

ModuleVector positional_map_rows(std::span<const Rational> row_weights, const ModuleVector& f) {
  if (row_weights.size() != f.shape().rows()) {
    throw ShapeError("expected " + std::to_string(f.shape().rows()) + " row weights for shape " +
                     f.shape().to_string() + ", got " + std::to_string(row_weights.size()));
  }
  const int n = f.n();
  ModuleVectorBuilder scores(Composition::candidates(n));
  for_each_term(f, [&](std::uint64_t, const Tabloid& x, const Rational& v) {
    for (int i = 1; i <= n; ++i) {
      const auto& w = row_weights[static_cast<std::size_t>(x.row_of(i))];
      if (sgn(w) != 0) scores.add(static_cast<std::uint64_t>(i - 1), v * w);
    }
  });
  return std::move(scores).build();
}

ModuleVector positional_map(const ModuleVector& weights, const ModuleVector& f) {
  require_full_ranking(f, "positional tally");
  require_candidate_vector(weights, f.n(), "positional tally");
  const auto w = weights.to_dense();
  return positional_map_rows(w, f);
}

ModuleVector positional_adjoint(const ModuleVector& weights, const ModuleVector& g) {
  const int n = g.n();
  require_candidate_vector(g, n, "positional adjoint");
  require_candidate_vector(weights, n, "positional adjoint");
  const auto w = weights.to_dense();
  const auto gv = g.to_dense();
  const auto shape = Composition::full_ranking(n);
  ModuleVectorBuilder out(shape);
  for_each_tabloid(shape, [&](std::uint64_t r, const Tabloid& x) {
    Rational s = 0;
    for (int i = 1; i <= n; ++i) s += gv[static_cast<std::size_t>(i - 1)] * w[static_cast<std::size_t>(x.row_of(i))];
    out[r] = s;
  });
  return std::move(out).build();
}

LinearMap positional_operator(const ModuleVector& weights) {
  const int n = weights.n();
  return LinearMap(
      Composition::full_ranking(n), Composition::candidates(n),
      [weights](const ModuleVector& f) { return positional_map(weights, f); },
      [weights](const ModuleVector& g) { return positional_adjoint(weights, g); });
}

RankingScores positional_tally(const WeightingVector& w, const ModuleVector& f) {
  return RankingScores::from_scores(positional_map(w.as_vector(), f));
}

ModuleVector candidate_weight_function(const ModuleVector& weights, int candidate) {
  const int n = weights.n();
  require_candidate_vector(weights, n, "candidate weight function");
  if (candidate < 1 || candidate > n) throw DomainError("candidate label out of range");
  std::vector<Rational> basis(static_cast<std::size_t>(n), Rational(0));
  basis[static_cast<std::size_t>(candidate - 1)] = 1;
  return positional_adjoint(weights, ModuleVector(Composition::candidates(n), std::move(basis)));
}

bool weighting_equivalent(const ModuleVector& w, const ModuleVector& w2) {
  require_same_shape(w, w2, "weighting equivalence");
  const auto a = hat(w);
  const auto b = hat(w2);
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  Rational ratio = 0;
  a.for_each_nonzero([&](std::uint64_t r, const Rational& v) {
    if (sgn(ratio) == 0) ratio = b.at(r) / v;
  });
  return sgn(ratio) > 0 && b == ratio * a;
}

bool weighting_equivalent(const WeightingVector& w, const WeightingVector& w2) {
  return weighting_equivalent(w.as_vector(), w2.as_vector());
}

// --- group algebra tallies ---------------------------------------------------

ModuleVector group_algebra_tally(const ModuleVector& f, const ModuleVector& v) {
  require_full_ranking(f, "group algebra tally");
  if (f.n() != v.n()) throw ShapeError("group algebra tally: profile and target act on different n");
  std::vector<std::pair<Tabloid, Rational>> support;
  for_each_term(v, [&](std::uint64_t, const Tabloid& y, const Rational& value) { support.emplace_back(y, value); });
  ModuleVectorBuilder out(v.shape());
  for_each_term(f, [&](std::uint64_t, const Tabloid& x, const Rational& weight) {
    const auto sigma = ranking_permutation(x);
    for (const auto& [y, value] : support) out.add(lex_rank(act_tabloid(sigma, y)), weight * value);
  });
  return std::move(out).build();
}

RankingScores srsf_apply(const ModuleVector& z, const ModuleVector& f) {
  require_full_ranking(z, "ranking scoring function");
  return RankingScores::from_scores(group_algebra_tally(f, z));
}

int kendall_tau(const Tabloid& x, const Tabloid& y) {
  if (!x.shape().is_full_ranking() || !y.shape().is_full_ranking() || x.n() != y.n()) {
    throw ShapeError("Kendall tau needs two full rankings of the same size");
  }
  int d = 0;
  for (int i = 1; i <= x.n(); ++i) {
    for (int j = i + 1; j <= x.n(); ++j) {
      d += (x.row_of(i) < x.row_of(j)) != (y.row_of(i) < y.row_of(j));
    }
  }
  return d;
}

ModuleVector kendall_z(int n) {
  const auto shape = Composition::full_ranking(n);
  const auto x0 = initial_tabloid(shape);
  const auto max_distance = static_cast<long>(binomial(n, 2));
  ModuleVectorBuilder z(shape);
  for_each_tabloid(shape, [&](std::uint64_t r, const Tabloid& x) { z[r] = max_distance - kendall_tau(x, x0); });
  return std::move(z).build();
}

// --- pairs map and Kemeny ----------------------------------------------------

ModuleVector pair_indicator(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n || i == j) throw DomainError("pair indicator needs distinct labels in 1..n");
  const auto shape = Composition::full_ranking(n);
  ModuleVectorBuilder a(shape);
  for_each_tabloid(shape, [&](std::uint64_t r, const Tabloid& x) {
    if (x.row_of(i) < x.row_of(j)) a[r] = 1;
  });
  return std::move(a).build();
}

std::uint64_t pair_rank(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n || i == j) throw DomainError("pair rank needs distinct labels in 1..n");
  std::vector<int> row_of(static_cast<std::size_t>(n), 2);
  row_of[static_cast<std::size_t>(i - 1)] = 0;
  row_of[static_cast<std::size_t>(j - 1)] = 1;
  return lex_rank(Tabloid(Composition::ordered_pairs(n), std::move(row_of)));
}

ModuleVector pairs_map(const ModuleVector& f) {
  require_full_ranking(f, "pairs map");
  const int n = f.n();
  if (n < 2) throw DomainError("the pairs map needs n >= 2");
  const auto table = pair_rank_table(n);
  ModuleVectorBuilder out(Composition::ordered_pairs(n));
  for_each_term(f, [&](std::uint64_t, const Tabloid& x, const Rational& v) {
    const auto word = x.reading_word();
    for (std::size_t a = 0; a < word.size(); ++a) {
      for (std::size_t b = a + 1; b < word.size(); ++b) {
        out.add(table[static_cast<std::size_t>((word[a] - 1) * n + (word[b] - 1))], v);
      }
    }
  });
  return std::move(out).build();
}

ModuleVector pairs_map_adjoint(const ModuleVector& g) {
  const int n = g.n();
  if (n < 2 || g.shape() != Composition::ordered_pairs(n)) {
    throw ShapeError("pairs adjoint expects a vector on ordered pairs, got M^" + g.shape().to_string());
  }
  const auto table = pair_rank_table(n);
  const auto gv = g.to_dense();
  const auto shape = Composition::full_ranking(n);
  ModuleVectorBuilder out(shape);
  for_each_tabloid(shape, [&](std::uint64_t r, const Tabloid& x) {
    const auto word = x.reading_word();
    Rational s = 0;
    for (std::size_t a = 0; a < word.size(); ++a) {
      for (std::size_t b = a + 1; b < word.size(); ++b) {
        s += gv[table[static_cast<std::size_t>((word[a] - 1) * n + (word[b] - 1))]];
      }
    }
    out[r] = s;
  });
  return std::move(out).build();
}

LinearMap pairs_operator(int n) {
  return LinearMap(Composition::full_ranking(n), Composition::ordered_pairs(n), pairs_map, pairs_map_adjoint);
}

ModuleVector kemeny_map(const ModuleVector& f) { return pairs_map_adjoint(pairs_map(f)); }

LinearMap kemeny_operator(int n) {
  const auto shape = Composition::full_ranking(n);
  return LinearMap(shape, shape, kemeny_map, kemeny_map);
}

RankingScores kemeny_apply(const ModuleVector& f) { return RankingScores::from_scores(kemeny_map(f)); }

ModuleVector family_map(const std::array<Rational, 3>& gamma, const ModuleVector& f) {
  require_full_ranking(f, "Kemeny family");
  if (f.n() < 3) throw DomainError("the Borda-Kemeny family needs n >= 3");
  const auto projections = kemeny_eigenprojections(f.n());
  ModuleVector out(f.shape());
  for (std::size_t i = 0; i < 3; ++i) {
    if (sgn(gamma[i]) != 0) out = out + gamma[i] * projections[i].apply(f);
  }
  return out;
}

RankingScores family_apply(const std::array<Rational, 3>& gamma, const ModuleVector& f) {
  return RankingScores::from_scores(family_map(gamma, f));
}

ModuleVector borda_srsf_map(const ModuleVector& weights, const ModuleVector& f) {
  const auto b = WeightingVector::borda(f.n());
  return positional_adjoint(b.as_vector(), positional_map(weights, f));
}

RankingScores borda_srsf_apply(const WeightingVector& w, const ModuleVector& f) {
  return RankingScores::from_scores(borda_srsf_map(w.as_vector(), f));
}

// --- profile construction ----------------------------------------------------

ConstructedProfile construct_profile(const std::vector<ModuleVector>& weights,
                                     const std::vector<ModuleVector>& targets) {
  if (weights.empty()) throw DomainError("need at least one weighting vector");
  if (weights.size() != targets.size()) {
    throw ShapeError("got " + std::to_string(weights.size()) + " weighting vectors but " +
                     std::to_string(targets.size()) + " targets");
  }
  const int n = weights.front().n();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    require_candidate_vector(weights[i], n, "profile construction");
    require_candidate_vector(targets[i], n, "profile construction");
    if (sgn(weights[i].sum()) != 0) {
      throw DomainError("weighting vector " + std::to_string(i + 1) + " is not in U1 (entries must sum to 0)");
    }
    if (sgn(targets[i].sum()) != 0) {
      throw DomainError("target " + std::to_string(i + 1) + " is not in U1 (entries must sum to 0)");
    }
  }
  std::vector<std::vector<Rational>> hat_rows;
  for (const auto& w : weights) hat_rows.push_back(w.to_dense());
  if (rank(RationalMatrix::from_rows(hat_rows)) != weights.size()) {
    throw DomainError("weighting vectors are linearly dependent");
  }

  const auto shape = Composition::full_ranking(n);
  const auto columns = shape.tabloid_count();
  if (columns > kMaterializationLimit) {
    throw CapacityError("profile construction materializes " + std::to_string(columns) +
                        " unknowns, above the limit " + std::to_string(kMaterializationLimit));
  }
  const auto k = weights.size();
  const auto nn = static_cast<std::size_t>(n);
  RationalMatrix system(k * nn, static_cast<std::size_t>(columns));
  std::vector<Rational> rhs(k * nn);
  for_each_tabloid(shape, [&](std::uint64_t c, const Tabloid& x) {
    for (std::size_t i = 0; i < k; ++i) {
      for (int cand = 1; cand <= n; ++cand) {
        system(i * nn + static_cast<std::size_t>(cand - 1), c) = hat_rows[i][static_cast<std::size_t>(x.row_of(cand))];
      }
    }
  });
  for (std::size_t i = 0; i < k; ++i) {
    const auto t = targets[i].to_dense();
    for (std::size_t c = 0; c < nn; ++c) rhs[i * nn + c] = t[c];
  }
  auto solution = solve(system, rhs);
  if (!solution) throw Error("internal error: tally system inconsistent despite valid preconditions");
  return {ModuleVector(shape, std::move(solution->particular)), solution->nullity};
}

std::optional<IntegerProfile> to_integer_profile(const ModuleVector& f, const Integer& shift_bound) {
  const auto values = f.to_dense();
  const Integer scale = common_denominator(values);
  Integer lowest = 0;
  std::vector<Rational> scaled;
  scaled.reserve(values.size());
  for (const auto& v : values) {
    scaled.emplace_back(v * scale);
    if (scaled.back().get_num() < lowest) lowest = scaled.back().get_num();
  }
  const Integer shift = -lowest;
  if (shift > shift_bound) return std::nullopt;
  for (auto& v : scaled) v += shift;
  return IntegerProfile{ModuleVector(f.shape(), std::move(scaled)), scale, shift};
}

std::optional<ModuleVector> distinguishing_profile(const ModuleVector& w, const ModuleVector& w2) {
  if (weighting_equivalent(w, w2)) return std::nullopt;
  const int n = w.n();
  const auto a = hat(w);
  const auto b = hat(w2);
  // Target: candidates strictly ordered 1 > 2 > ... > n.
  const auto order = hat(WeightingVector::borda(n).as_vector());

  ConstructedProfile built{ModuleVector(Composition::full_ranking(n)), 0};
  if (a.is_zero()) {
    built = construct_profile({b}, {order});
  } else if (b.is_zero()) {
    built = construct_profile({a}, {order});
  } else if (rank(RationalMatrix::from_rows({a.to_dense(), b.to_dense()})) == 1) {
    // Negative multiples: w2 reverses whatever w produces.
    built = construct_profile({a}, {order});
  } else {
    built = construct_profile({a, b}, {order, -order});
  }
  Integer bound = 0;
  built.solution.for_each_nonzero([&](std::uint64_t, const Rational& v) {
    Integer mag = abs(v.get_num()) * common_denominator(built.solution.to_dense());
    if (mag > bound) bound = mag;
  });
  auto profile = to_integer_profile(built.solution, bound);
  if (!profile) throw Error("internal error: integer profile shift exceeded its own bound");
  const auto ta = RankingScores::from_scores(positional_map(w, profile->profile));
  const auto tb = RankingScores::from_scores(positional_map(w2, profile->profile));
  if (same_ordinal_ranking(ta, tb)) throw Error("internal error: constructed profile does not separate the procedures");
  return profile->profile;
}

}  // namespace tabloid
