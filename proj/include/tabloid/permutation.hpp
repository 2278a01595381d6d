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

#ifndef TABLOID_PERMUTATION_HPP
#define TABLOID_PERMUTATION_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace tabloid {

// A bijection on the labels {1, ..., n}, stored in one-line notation.
class Permutation {
 public:
  static Permutation identity(int n);
  // images[i - 1] is the image of label i. Throws DomainError unless the
  // list is a bijection on 1..n.
  static Permutation from_one_line(std::vector<int> images);
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int label) const { return images_[static_cast<std::size_t>(label - 1)]; }
  const std::vector<int>& one_line() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  // Composition as functions: (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}
  std::vector<int> images_;
};

// All n! permutations in lexicographic order of their one-line notation.
std::vector<Permutation> all_permutations(int n);

}  // namespace tabloid

#endif  // TABLOID_PERMUTATION_HPP
