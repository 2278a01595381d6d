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

#ifndef TABLOID_GROUP_ALGEBRA_HPP
#define TABLOID_GROUP_ALGEBRA_HPP

#include <map>

#include "tabloid/module_vector.hpp"

namespace tabloid {

// A finitely supported rational function on S_n.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n) : n_(n) {}

  int n() const { return n_; }
  Rational operator()(const Permutation& sigma) const;
  void add(const Permutation& sigma, const Rational& value);
  const std::map<Permutation, Rational>& terms() const { return terms_; }

  friend bool operator==(const GroupAlgebraElement&, const GroupAlgebraElement&) = default;

 private:
  int n_;
  std::map<Permutation, Rational> terms_;
};

// The permutation sigma with sigma . x0 = x, for a full ranking x.
Permutation ranking_permutation(const Tabloid& x);

// f~(sigma) = f(sigma . x0) for f on full rankings. Throws ShapeError for
// any other shape.
GroupAlgebraElement to_group_algebra(const ModuleVector& f);
ModuleVector from_group_algebra(const GroupAlgebraElement& a);

// a . v = sum_sigma a(sigma) (sigma . v).
ModuleVector act_group_algebra(const GroupAlgebraElement& a, const ModuleVector& v);

}  // namespace tabloid

#endif  // TABLOID_GROUP_ALGEBRA_HPP
