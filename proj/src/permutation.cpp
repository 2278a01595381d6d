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

#include "tabloid/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "tabloid/errors.hpp"

namespace tabloid {

Permutation Permutation::identity(int n) {
  if (n < 1) throw DomainError("permutation size must be positive");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_line(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  if (n < 1) throw DomainError("permutation size must be positive");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw DomainError("one-line notation is not a bijection on 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n) throw DomainError("transposition label out of range");
  auto p = identity(n);
  std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ShapeError("composing permutations of different sizes");
  std::vector<int> images(b.images_.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = a(b.images_[i]);
  return Permutation(std::move(images));
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  auto images = Permutation::identity(n).one_line();
  do {
    out.push_back(Permutation::from_one_line(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace tabloid
