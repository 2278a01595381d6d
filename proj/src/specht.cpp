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


#include "tabloid/specht.hpp"

#include <sstream>

#include "tabloid/combinatorics.hpp"
#include "tabloid/errors.hpp"
#include "tabloid/voting.hpp"

namespace tabloid {

IsotypicLabel IsotypicLabel::two_row(int n, int j, int level) {
  if (n < 1 || j < 0 || 2 * j > n) throw DomainError("two-row label needs 0 <= j <= n/2");
  IsotypicLabel label{{n - j}, level};
  if (j > 0) label.partition.push_back(j);
  return label;
}

IsotypicLabel IsotypicLabel::hook(int n) {
  if (n < 3) throw DomainError("the hook (n-2,1,1) needs n >= 3");
  return IsotypicLabel{{n - 2, 1, 1}, 0};
}

int IsotypicLabel::n() const {
  int total = 0;
  for (int p : partition) total += p;
  return total;
}

std::uint64_t IsotypicLabel::dimension() const {
  const int size = n();
  if (partition.size() <= 2) return two_row_dim(size, partition.size() == 2 ? partition[1] : 0);
  if (partition.size() == 3 && partition[1] == 1 && partition[2] == 1) return binomial(size - 1, 2);
  throw DomainError("dimension only tracked for two-row and (n-2,1,1) partitions");
}

std::string IsotypicLabel::to_string() const {
  std::ostringstream out;
  out << "S^(";
  for (std::size_t i = 0; i < partition.size(); ++i) out << (i ? "," : "") << partition[i];
  out << ")";
  if (level > 0) out << "@k=" << level;
  return out.str();
}

std::uint64_t two_row_dim(int n, int j) {
  if (n < 0 || j < 0 || 2 * j > n) throw DomainError("two_row_dim needs 0 <= j <= n/2");
  return binomial(n, j) - (j == 0 ? 0 : binomial(n, j - 1));
}

MeanSplit project_mean(const ModuleVector& f) {
  const int n = f.n();
  if (n < 2 || f.shape() != Composition::candidates(n)) {
    throw ShapeError("mean split expects a vector on (1,n-1) with n >= 2, got " + f.shape().to_string());
  }
  auto mean = ModuleVector::constant(f.shape(), f.sum() / n);
  auto rest = f - mean;
  return {std::move(mean), std::move(rest)};
}

ModuleVector hat(const ModuleVector& f) { return project_mean(f).hat_part; }

KemenyConstants kemeny_constants(int n) {
  if (n < 2) throw DomainError("Kemeny constants need n >= 2");
  const Rational nf(factorial(n));
  const Rational pairs(big_binomial(n, 2));
  KemenyConstants c;
  c.kappa0 = nf / 2 * pairs;
  c.kappa1 = Rational(factorial(n + 1)) / 6;
  c.kappa2 = nf / 6;
  c.beta0 = Rational(n - 1) * nf / 2 * pairs;
  c.beta1 = Rational(n) * Rational(factorial(n + 1)) / 12;
  return c;
}

std::vector<LinearMap> kemeny_eigenprojections(int n) {
  if (n < 2) throw DomainError("Kemeny eigenprojections need n >= 2");
  const auto shape = Composition::full_ranking(n);
  const auto c = kemeny_constants(n);
  const Rational nf(factorial(n));
  const auto borda = WeightingVector::borda(n).as_vector();

  auto t0 = [shape, nf](const ModuleVector& f) { return ModuleVector::constant(shape, f.sum() / nf); };
  auto t1 = [t0, borda, c](const ModuleVector& f) {
    auto bb = positional_adjoint(borda, positional_map(borda, f));
    return (bb - c.beta0 * t0(f)) / c.beta1;
  };
  std::vector<LinearMap> out;
  out.emplace_back(shape, shape, t0, t0);
  out.emplace_back(shape, shape, t1, t1);
  if (n == 2) return out;
  auto t2 = [t0, t1, c](const ModuleVector& f) {
    return (kemeny_map(f) - c.kappa0 * t0(f) - c.kappa1 * t1(f)) / c.kappa2;
  };
  out.emplace_back(shape, shape, t2, t2);
  return out;
}

std::vector<ModuleVector> effective_space(const LinearMap& map, std::uint64_t limit) {
  std::vector<ModuleVector> basis;
  for (auto& row : row_space_basis(map.matrix(limit))) basis.emplace_back(map.domain(), std::move(row));
  return basis;
}

namespace {

RationalMatrix stack(const std::vector<ModuleVector>& a, const std::vector<ModuleVector>& b = {}) {
  std::vector<std::vector<Rational>> rows;
  const Composition* shape = nullptr;
  for (const auto* group : {&a, &b}) {
    for (const auto& v : *group) {
      if (shape && v.shape() != *shape) throw ShapeError("subspace vectors live on different shapes");
      shape = &v.shape();
      rows.push_back(v.to_dense());
    }
  }
  return RationalMatrix::from_rows(rows);
}

}  // namespace

std::size_t span_dimension(const std::vector<ModuleVector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(stack(vectors));
}

bool subspaces_equal(const std::vector<ModuleVector>& a, const std::vector<ModuleVector>& b) {
  const auto da = span_dimension(a);
  const auto db = span_dimension(b);
  if (da != db) return false;
  if (a.empty() || b.empty()) return da == 0 && db == 0;
  return rank(stack(a, b)) == da;
}

bool subspaces_intersect_trivially(const std::vector<ModuleVector>& a, const std::vector<ModuleVector>& b) {
  if (a.empty() || b.empty()) return true;
  return rank(stack(a, b)) == span_dimension(a) + span_dimension(b);
}

}  // namespace tabloid
