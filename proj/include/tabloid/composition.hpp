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

#ifndef TABLOID_COMPOSITION_HPP
#define TABLOID_COMPOSITION_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tabloid {

// An ordered list of positive row sizes. Row order is significant:
// (2,3,1,3) and (3,3,2,1) are different shapes whose modules are
// isomorphic through a row reordering.
class Composition {
 public:
  explicit Composition(std::vector<int> parts);

  // (1,...,1): full rankings of n candidates.
  static Composition full_ranking(int n);
  // (1, n-1): one candidate singled out. Collapses to (1) when n == 1.
  static Composition candidates(int n);
  // (k, n-k): k-element subsets. Collapses to (n) when k == n.
  static Composition subsets(int n, int k);
  // (1, 1, n-2): ordered pairs. Collapses to (1, 1) when n == 2.
  static Composition ordered_pairs(int n);

  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t row) const { return parts_[row]; }
  std::size_t rows() const { return parts_.size(); }
  int n() const { return n_; }

  // The non-increasing reordering of the parts.
  Composition sorted() const;
  bool is_partition() const;
  bool is_full_ranking() const;

  // |X^shape| = n! / prod(parts!).
  std::uint64_t tabloid_count() const;

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

}  // namespace tabloid

#endif  // TABLOID_COMPOSITION_HPP
