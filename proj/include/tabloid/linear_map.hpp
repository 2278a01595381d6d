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

#ifndef TABLOID_LINEAR_MAP_HPP
#define TABLOID_LINEAR_MAP_HPP

#include <functional>
#include <memory>
#include <optional>

#include "tabloid/linalg.hpp"
#include "tabloid/module_vector.hpp"

namespace tabloid {

// Largest domain (or codomain) dimension that may be turned into an
// explicit matrix: 7! full rankings.
inline constexpr std::uint64_t kMaterializationLimit = 5040;

// A linear map M^domain -> M^codomain given either by an explicit matrix
// (columns indexed by domain rank) or by a matrix-free applier together
// with its adjoint.
class LinearMap {
 public:
  using Applier = std::function<ModuleVector(const ModuleVector&)>;

  LinearMap(Composition domain, Composition codomain, Applier apply, Applier adjoint);
  static LinearMap from_matrix(Composition domain, Composition codomain, RationalMatrix matrix);
  static LinearMap zero(Composition domain, Composition codomain);

  const Composition& domain() const { return domain_; }
  const Composition& codomain() const { return codomain_; }

  ModuleVector apply(const ModuleVector& f) const;
  ModuleVector apply_adjoint(const ModuleVector& g) const;
  ModuleVector operator()(const ModuleVector& f) const { return apply(f); }

  bool has_matrix() const { return matrix_ != nullptr; }
  // The explicit matrix if one was supplied, otherwise the images of the
  // indicator basis. Throws CapacityError above `limit`.
  RationalMatrix matrix(std::uint64_t limit = kMaterializationLimit) const;

  LinearMap adjoint() const;

  // outer o inner
  friend LinearMap compose(const LinearMap& outer, const LinearMap& inner);
  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator*(const Rational& c, const LinearMap& m);

 private:
  Composition domain_;
  Composition codomain_;
  Applier apply_;
  Applier adjoint_;
  std::shared_ptr<const RationalMatrix> matrix_;
};

}  // namespace tabloid

#endif  // TABLOID_LINEAR_MAP_HPP
