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

#ifndef TABLOID_MODULE_VECTOR_HPP
#define TABLOID_MODULE_VECTOR_HPP

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "tabloid/composition.hpp"
#include "tabloid/permutation.hpp"
#include "tabloid/rational.hpp"
#include "tabloid/tabloid.hpp"

namespace tabloid {

// An exact rational-valued function on X^shape, addressed by lexicographic
// rank. Storage is dense or sparse depending on how many values are
// nonzero; the choice is not observable through the interface.
class ModuleVector {
 public:
  // The zero function.
  explicit ModuleVector(Composition shape);
  // values[r] is the value on the tabloid of rank r.
  ModuleVector(Composition shape, std::vector<Rational> values);
  // (rank, value) pairs; repeated ranks accumulate.
  ModuleVector(Composition shape, std::vector<std::pair<std::uint64_t, Rational>> entries);

  static ModuleVector indicator(const Tabloid& x);
  static ModuleVector constant(const Composition& shape, const Rational& value);

  const Composition& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  std::uint64_t dimension() const { return dimension_; }

  // Throws DomainError for rank >= dimension().
  Rational at(std::uint64_t rank) const;
  // Throws ShapeError if x has a different shape.
  Rational operator()(const Tabloid& x) const;

  std::size_t population() const;
  bool is_sparse() const { return sparse_; }
  bool is_zero() const { return population() == 0; }
  Rational sum() const;
  std::vector<Rational> to_dense() const;

  // Calls visit(rank, value) for every nonzero value in increasing rank.
  template <typename Visitor>
  void for_each_nonzero(Visitor&& visit) const {
    if (sparse_) {
      for (const auto& [rank, value] : entries_) visit(rank, value);
    } else {
      for (std::size_t r = 0; r < values_.size(); ++r) {
        if (sgn(values_[r]) != 0) visit(static_cast<std::uint64_t>(r), values_[r]);
      }
    }
  }

  ModuleVector operator-() const;
  friend ModuleVector operator+(const ModuleVector& a, const ModuleVector& b);
  friend ModuleVector operator-(const ModuleVector& a, const ModuleVector& b);
  friend ModuleVector operator*(const Rational& c, const ModuleVector& v);
  friend ModuleVector operator*(const ModuleVector& v, const Rational& c) { return c * v; }
  friend ModuleVector operator/(const ModuleVector& v, const Rational& c);
  friend bool operator==(const ModuleVector& a, const ModuleVector& b);

 private:
  void adopt(std::vector<Rational> values);

  Composition shape_;
  std::uint64_t dimension_ = 0;
  bool sparse_ = true;
  std::vector<Rational> values_;
  std::vector<std::pair<std::uint64_t, Rational>> entries_;
};

// Dense scratch buffer for assembling a ModuleVector one entry at a time.
class ModuleVectorBuilder {
 public:
  explicit ModuleVectorBuilder(Composition shape);
  void add(std::uint64_t rank, const Rational& value) { values_[rank] += value; }
  Rational& operator[](std::uint64_t rank) { return values_[rank]; }
  ModuleVector build() &&;

 private:
  Composition shape_;
  std::vector<Rational> values_;
};

// <f, g> = sum_x f(x) g(x). Throws ShapeError on mismatched shapes.
Rational inner_product(const ModuleVector& f, const ModuleVector& g);

// (sigma . f)(x) = f(sigma^-1 . x).
ModuleVector act_vector(const Permutation& sigma, const ModuleVector& f);

// Orthogonal projection onto the line through `direction` (nonzero).
ModuleVector project_onto(const ModuleVector& f, const ModuleVector& direction);

void require_same_shape(const ModuleVector& a, const ModuleVector& b, const char* what);

// Calls visit(rank, tabloid, value) for every nonzero value of f in
// increasing rank, walking the enumeration when f is dense and unranking
// individual entries when it is sparse.
void for_each_term(const ModuleVector& f,
                   const std::function<void(std::uint64_t, const Tabloid&, const Rational&)>& visit);

}  // namespace tabloid

#endif  // TABLOID_MODULE_VECTOR_HPP
