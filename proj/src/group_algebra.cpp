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

#include "tabloid/group_algebra.hpp"

#include "tabloid/errors.hpp"

namespace tabloid {

Rational GroupAlgebraElement::operator()(const Permutation& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add(const Permutation& sigma, const Rational& value) {
  if (sigma.size() != n_) throw ShapeError("permutation size does not match the group algebra");
  auto& slot = terms_[sigma];
  slot += value;
  if (sgn(slot) == 0) terms_.erase(sigma);
}

Permutation ranking_permutation(const Tabloid& x) {
  if (!x.shape().is_full_ranking()) {
    throw ShapeError("expected a full ranking, got shape " + x.shape().to_string());
  }
  // x0 has label i in row i, so sigma(i) is the label in row i of x.
  return Permutation::from_one_line(x.reading_word());
}

GroupAlgebraElement to_group_algebra(const ModuleVector& f) {
  if (!f.shape().is_full_ranking()) {
    throw ShapeError("group algebra re-indexing needs a full-ranking vector, got " + f.shape().to_string());
  }
  GroupAlgebraElement a(f.n());
  f.for_each_nonzero(
      [&](std::uint64_t r, const Rational& v) { a.add(ranking_permutation(unrank(f.shape(), r)), v); });
  return a;
}

ModuleVector from_group_algebra(const GroupAlgebraElement& a) {
  const auto shape = Composition::full_ranking(a.n());
  const auto x0 = initial_tabloid(shape);
  std::vector<std::pair<std::uint64_t, Rational>> entries;
  for (const auto& [sigma, value] : a.terms()) {
    entries.emplace_back(lex_rank(act_tabloid(sigma, x0)), value);
  }
  return ModuleVector(shape, std::move(entries));
}

ModuleVector act_group_algebra(const GroupAlgebraElement& a, const ModuleVector& v) {
  if (a.n() != v.n()) throw ShapeError("group algebra element and vector act on different n");
  ModuleVector out(v.shape());
  for (const auto& [sigma, coeff] : a.terms()) out = out + coeff * act_vector(sigma, v);
  return out;
}

}  // namespace tabloid
