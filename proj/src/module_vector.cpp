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

#include "tabloid/module_vector.hpp"

#include <algorithm>
#include <string>

#include "tabloid/errors.hpp"

namespace tabloid {

namespace {

// Dense storage once at least a quarter of the values are nonzero.
bool prefers_dense(std::size_t population, std::uint64_t dimension) {
  return population * 4 >= dimension;
}

std::vector<Rational> zero_buffer(const Composition& shape) {
  const auto dim = shape.tabloid_count();
  if (dim > kDefaultEnumerationLimit) {
    throw CapacityError("dense vector on X^" + shape.to_string() + " would hold " + std::to_string(dim) +
                        " values, above the limit " + std::to_string(kDefaultEnumerationLimit));
  }
  return std::vector<Rational>(static_cast<std::size_t>(dim));
}

}  // namespace

ModuleVector::ModuleVector(Composition shape)
    : shape_(std::move(shape)), dimension_(shape_.tabloid_count()) {}

ModuleVector::ModuleVector(Composition shape, std::vector<Rational> values)
    : shape_(std::move(shape)), dimension_(shape_.tabloid_count()) {
  if (values.size() != dimension_) {
    throw ShapeError("expected " + std::to_string(dimension_) + " values on X^" + shape_.to_string() +
                     ", got " + std::to_string(values.size()));
  }
  adopt(std::move(values));
}

ModuleVector::ModuleVector(Composition shape, std::vector<std::pair<std::uint64_t, Rational>> entries)
    : shape_(std::move(shape)), dimension_(shape_.tabloid_count()) {
  for (const auto& [rank, value] : entries) {
    if (rank >= dimension_) {
      throw DomainError("rank " + std::to_string(rank) + " out of range for X^" + shape_.to_string());
    }
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [rank, value] : entries) {
    if (!entries_.empty() && entries_.back().first == rank) {
      entries_.back().second += value;
    } else {
      entries_.emplace_back(rank, std::move(value));
    }
  }
  std::erase_if(entries_, [](const auto& e) { return sgn(e.second) == 0; });
  if (prefers_dense(entries_.size(), dimension_)) {
    auto values = zero_buffer(shape_);
    for (auto& [rank, value] : entries_) values[rank] = std::move(value);
    entries_.clear();
    adopt(std::move(values));
  }
}

void ModuleVector::adopt(std::vector<Rational> values) {
  std::size_t population = 0;
  for (const auto& v : values) population += sgn(v) != 0;
  if (prefers_dense(population, dimension_)) {
    sparse_ = false;
    values_ = std::move(values);
    return;
  }
  sparse_ = true;
  entries_.reserve(population);
  for (std::size_t r = 0; r < values.size(); ++r) {
    if (sgn(values[r]) != 0) entries_.emplace_back(static_cast<std::uint64_t>(r), std::move(values[r]));
  }
}

ModuleVector ModuleVector::indicator(const Tabloid& x) {
  return ModuleVector(x.shape(), std::vector<std::pair<std::uint64_t, Rational>>{{lex_rank(x), Rational(1)}});
}

ModuleVector ModuleVector::constant(const Composition& shape, const Rational& value) {
  auto values = zero_buffer(shape);
  std::fill(values.begin(), values.end(), value);
  return ModuleVector(shape, std::move(values));
}

Rational ModuleVector::at(std::uint64_t rank) const {
  if (rank >= dimension_) {
    throw DomainError("rank " + std::to_string(rank) + " out of range for X^" + shape_.to_string());
  }
  if (!sparse_) return values_[rank];
  auto it = std::lower_bound(entries_.begin(), entries_.end(), rank,
                             [](const auto& e, std::uint64_t r) { return e.first < r; });
  if (it != entries_.end() && it->first == rank) return it->second;
  return 0;
}

Rational ModuleVector::operator()(const Tabloid& x) const {
  if (x.shape() != shape_) {
    throw ShapeError("tabloid of shape " + x.shape().to_string() + " indexing a vector on " + shape_.to_string());
  }
  return at(lex_rank(x));
}

std::size_t ModuleVector::population() const {
  if (sparse_) return entries_.size();
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [](const Rational& v) { return sgn(v) != 0; }));
}

Rational ModuleVector::sum() const {
  Rational s = 0;
  for_each_nonzero([&](std::uint64_t, const Rational& v) { s += v; });
  return s;
}

std::vector<Rational> ModuleVector::to_dense() const {
  if (!sparse_) return values_;
  auto values = zero_buffer(shape_);
  for (const auto& [rank, value] : entries_) values[rank] = value;
  return values;
}

ModuleVector ModuleVector::operator-() const { return Rational(-1) * *this; }

ModuleVector operator+(const ModuleVector& a, const ModuleVector& b) {
  require_same_shape(a, b, "addition");
  std::vector<std::pair<std::uint64_t, Rational>> entries;
  entries.reserve(a.population() + b.population());
  a.for_each_nonzero([&](std::uint64_t r, const Rational& v) { entries.emplace_back(r, v); });
  b.for_each_nonzero([&](std::uint64_t r, const Rational& v) { entries.emplace_back(r, v); });
  return ModuleVector(a.shape(), std::move(entries));
}

ModuleVector operator-(const ModuleVector& a, const ModuleVector& b) { return a + (-b); }

ModuleVector operator*(const Rational& c, const ModuleVector& v) {
  std::vector<std::pair<std::uint64_t, Rational>> entries;
  if (sgn(c) != 0) {
    entries.reserve(v.population());
    v.for_each_nonzero([&](std::uint64_t r, const Rational& x) { entries.emplace_back(r, c * x); });
  }
  return ModuleVector(v.shape(), std::move(entries));
}

ModuleVector operator/(const ModuleVector& v, const Rational& c) {
  if (sgn(c) == 0) throw DomainError("division of a module vector by zero");
  return Rational(1 / c) * v;
}

bool operator==(const ModuleVector& a, const ModuleVector& b) {
  if (a.shape() != b.shape()) return false;
  std::vector<std::pair<std::uint64_t, Rational>> ea, eb;
  a.for_each_nonzero([&](std::uint64_t r, const Rational& v) { ea.emplace_back(r, v); });
  b.for_each_nonzero([&](std::uint64_t r, const Rational& v) { eb.emplace_back(r, v); });
  return ea == eb;
}

ModuleVectorBuilder::ModuleVectorBuilder(Composition shape)
    : shape_(std::move(shape)), values_(zero_buffer(shape_)) {}

ModuleVector ModuleVectorBuilder::build() && { return ModuleVector(std::move(shape_), std::move(values_)); }

void require_same_shape(const ModuleVector& a, const ModuleVector& b, const char* what) {
  if (a.shape() != b.shape()) {
    throw ShapeError(std::string(what) + ": shapes " + a.shape().to_string() + " and " + b.shape().to_string() +
                     " differ");
  }
}

Rational inner_product(const ModuleVector& f, const ModuleVector& g) {
  require_same_shape(f, g, "inner product");
  Rational s = 0;
  if (f.population() <= g.population()) {
    f.for_each_nonzero([&](std::uint64_t r, const Rational& v) { s += v * g.at(r); });
  } else {
    g.for_each_nonzero([&](std::uint64_t r, const Rational& v) { s += v * f.at(r); });
  }
  return s;
}

ModuleVector act_vector(const Permutation& sigma, const ModuleVector& f) {
  if (sigma.size() != f.n()) {
    throw ShapeError("permutation on " + std::to_string(sigma.size()) + " symbols acting on M^" +
                     f.shape().to_string());
  }
  // (sigma . f)(sigma . x) = f(x)
  std::vector<std::pair<std::uint64_t, Rational>> entries;
  entries.reserve(f.population());
  f.for_each_nonzero([&](std::uint64_t r, const Rational& v) {
    entries.emplace_back(lex_rank(act_tabloid(sigma, unrank(f.shape(), r))), v);
  });
  return ModuleVector(f.shape(), std::move(entries));
}

void for_each_term(const ModuleVector& f,
                   const std::function<void(std::uint64_t, const Tabloid&, const Rational&)>& visit) {
  if (f.is_sparse()) {
    f.for_each_nonzero([&](std::uint64_t r, const Rational& v) { visit(r, unrank(f.shape(), r), v); });
    return;
  }
  for_each_tabloid(f.shape(), [&](std::uint64_t r, const Tabloid& x) {
    const Rational v = f.at(r);
    if (sgn(v) != 0) visit(r, x, v);
  });
}

ModuleVector project_onto(const ModuleVector& f, const ModuleVector& direction) {
  const auto norm2 = inner_product(direction, direction);
  if (sgn(norm2) == 0) throw DomainError("projection onto the zero vector");
  return (inner_product(f, direction) / norm2) * direction;
}

}  // namespace tabloid
