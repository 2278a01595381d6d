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

#ifndef TABLOID_TABLOID_HPP
#define TABLOID_TABLOID_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tabloid/composition.hpp"
#include "tabloid/permutation.hpp"

namespace tabloid {

inline constexpr std::uint64_t kDefaultEnumerationLimit = 10'000'000;

// An ordered set partition of {1, ..., n} whose row sizes follow a
// composition. Stored as the row index of every label, which makes the
// canonical form (ascending rows) implicit.
class Tabloid {
 public:
  // rows[r] lists the labels in row r; the shape is read off the row sizes.
  static Tabloid from_rows(const std::vector<std::vector<int>>& rows);

  // row_assignment[label - 1] = row index of that label (0-based).
  Tabloid(Composition shape, std::vector<int> row_assignment);

  const Composition& shape() const { return shape_; }
  int n() const { return shape_.n(); }
  int row_of(int label) const { return row_of_[static_cast<std::size_t>(label - 1)]; }
  const std::vector<int>& row_assignment() const { return row_of_; }

  // Rows with labels in ascending order.
  std::vector<std::vector<int>> rows() const;
  // Rows read top to bottom; a permutation of 1..n.
  std::vector<int> reading_word() const;

  // "1,2|3|4": rows separated by '|', labels by ','.
  std::string to_string() const;

  friend bool operator==(const Tabloid&, const Tabloid&) = default;
  // Lexicographic order of reading words (same shape only).
  friend std::strong_ordering operator<=>(const Tabloid& a, const Tabloid& b);

 private:
  Composition shape_;
  std::vector<int> row_of_;
};

// x0: labels 1..n filled into the rows in order.
Tabloid initial_tabloid(const Composition& shape);

// All tabloids of the shape in lexicographic order. Throws CapacityError
// when the count exceeds `limit`.
std::vector<Tabloid> enumerate_tabloids(const Composition& shape,
                                        std::uint64_t limit = kDefaultEnumerationLimit);

// Visits every tabloid in lexicographic order together with its rank.
void for_each_tabloid(const Composition& shape,
                      const std::function<void(std::uint64_t, const Tabloid&)>& visit,
                      std::uint64_t limit = kDefaultEnumerationLimit);

std::uint64_t lex_rank(const Tabloid& x);
// Throws DomainError when rank >= |X^shape|.
Tabloid unrank(const Composition& shape, std::uint64_t rank);

// sigma . x: apply sigma to every entry. Throws ShapeError on size mismatch.
Tabloid act_tabloid(const Permutation& sigma, const Tabloid& x);

// Moves row row_order[r] of x to position r.
Tabloid reorder_rows(const Tabloid& x, std::span<const int> row_order);

// Stable ordering of row indices by non-increasing row size; reorder_rows
// with it maps X^shape onto X^sorted(shape).
std::vector<int> sorting_row_order(const Composition& shape);

// rank in X^shape -> rank in X^sorted(shape) under reorder_rows.
std::vector<std::uint64_t> sorted_shape_bijection(const Composition& shape);

}  // namespace tabloid

#endif  // TABLOID_TABLOID_HPP
