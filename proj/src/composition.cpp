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

#include "tabloid/composition.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "tabloid/combinatorics.hpp"
#include "tabloid/errors.hpp"

namespace tabloid {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("a composition needs at least one part");
  for (int p : parts_) {
    if (p < 1) throw DomainError("composition parts must be positive, got " + std::to_string(p));
    n_ += p;
  }
}

Composition Composition::full_ranking(int n) {
  if (n < 1) throw DomainError("full ranking shape needs n >= 1");
  return Composition(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Composition Composition::candidates(int n) {
  if (n < 1) throw DomainError("candidate shape needs n >= 1");
  if (n == 1) return Composition({1});
  return Composition({1, n - 1});
}

Composition Composition::subsets(int n, int k) {
  if (k < 1 || k > n) {
    throw DomainError("subset size " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  if (k == n) return Composition({n});
  return Composition({k, n - k});
}

Composition Composition::ordered_pairs(int n) {
  if (n < 2) throw DomainError("ordered pairs need n >= 2");
  if (n == 2) return Composition({1, 1});
  return Composition({1, 1, n - 2});
}

Composition Composition::sorted() const {
  auto parts = parts_;
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Composition(std::move(parts));
}

bool Composition::is_partition() const {
  return std::is_sorted(parts_.begin(), parts_.end(), std::greater<>());
}

bool Composition::is_full_ranking() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p == 1; });
}

std::uint64_t Composition::tabloid_count() const { return multinomial(parts_); }

std::string Composition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

}  // namespace tabloid
