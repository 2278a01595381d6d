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

// Isotypic bookkeeping for the permutation modules used by the voting and
// game modules: two-row Specht dimensions, the U0/U1 split of M^(1,n-1),
// the Kemeny eigenprojections on M^(1,...,1) and effective spaces.

#ifndef TABLOID_SPECHT_HPP
#define TABLOID_SPECHT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tabloid/linear_map.hpp"

namespace tabloid {

// Labels an irreducible constituent S^partition sitting inside some
// ambient module; `level` is the coalition size k for U_j^k and 0 when
// the ambient module is not a game level.
struct IsotypicLabel {
  std::vector<int> partition;
  int level = 0;

  // S^(n-j, j); requires 0 <= j <= n/2.
  static IsotypicLabel two_row(int n, int j, int level = 0);
  // S^(n-2, 1, 1); requires n >= 3.
  static IsotypicLabel hook(int n);

  int n() const;
  std::uint64_t dimension() const;
  std::string to_string() const;
};

// dim S^(n-j, j) = C(n, j) - C(n, j-1). Throws DomainError unless
// 0 <= j <= n/2.
std::uint64_t two_row_dim(int n, int j);

struct MeanSplit {
  ModuleVector mean_part;  // in U0: the constant function with the same sum
  ModuleVector hat_part;   // in U1: sums to zero
};

// f = mean_part + hat_part for f on (1, n-1), n >= 2.
MeanSplit project_mean(const ModuleVector& f);
ModuleVector hat(const ModuleVector& f);

// Eigenvalues of the Kemeny operator K = P* P on W0, W1, W2 and of the
// Borda product T_b* T_b on W0, W1.
struct KemenyConstants {
  Rational kappa0, kappa1, kappa2;
  Rational beta0, beta1;
};
KemenyConstants kemeny_constants(int n);

// Orthogonal projections T0, T1, T2 onto W0, W1, W2 in M^(1,...,1),
// built matrix-free from the Borda and Kemeny operators. Returns only
// T0, T1 when n == 2; throws DomainError for n < 2.
std::vector<LinearMap> kemeny_eigenprojections(int n);

// Basis of (ker T)^perp, i.e. the row space of the explicit matrix, as
// vectors on the domain. Throws CapacityError when the map is too large to
// materialize.
std::vector<ModuleVector> effective_space(const LinearMap& map,
                                          std::uint64_t limit = kMaterializationLimit);

// Dimension of the span of the given vectors (all on one shape).
std::size_t span_dimension(const std::vector<ModuleVector>& vectors);
bool subspaces_equal(const std::vector<ModuleVector>& a, const std::vector<ModuleVector>& b);
bool subspaces_intersect_trivially(const std::vector<ModuleVector>& a, const std::vector<ModuleVector>& b);

}  // namespace tabloid

#endif  // TABLOID_SPECHT_HPP
