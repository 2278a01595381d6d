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

#include "tabloid/linear_map.hpp"

#include <string>

#include "tabloid/errors.hpp"

namespace tabloid {

namespace {

void check_materializable(const Composition& shape, std::uint64_t limit) {
  const auto dim = shape.tabloid_count();
  if (dim > limit) {
    throw CapacityError("cannot materialize a matrix over M^" + shape.to_string() + " (dimension " +
                        std::to_string(dim) + ", limit " + std::to_string(limit) + ")");
  }
}

ModuleVector multiply(const RationalMatrix& m, const Composition& codomain, const ModuleVector& f) {
  ModuleVectorBuilder out(codomain);
  f.for_each_nonzero([&](std::uint64_t c, const Rational& v) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (sgn(m(r, c)) != 0) out.add(r, m(r, c) * v);
    }
  });
  return std::move(out).build();
}

}  // namespace

LinearMap::LinearMap(Composition domain, Composition codomain, Applier apply, Applier adjoint)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      apply_(std::move(apply)),
      adjoint_(std::move(adjoint)) {}

LinearMap LinearMap::from_matrix(Composition domain, Composition codomain, RationalMatrix matrix) {
  if (matrix.cols() != domain.tabloid_count() || matrix.rows() != codomain.tabloid_count()) {
    throw ShapeError("matrix is " + std::to_string(matrix.rows()) + "x" + std::to_string(matrix.cols()) +
                     ", expected dim M^" + codomain.to_string() + " x dim M^" + domain.to_string());
  }
  auto m = std::make_shared<const RationalMatrix>(std::move(matrix));
  auto t = std::make_shared<const RationalMatrix>(m->transpose());
  LinearMap map(
      domain, codomain, [m, codomain](const ModuleVector& f) { return multiply(*m, codomain, f); },
      [t, domain](const ModuleVector& g) { return multiply(*t, domain, g); });
  map.matrix_ = std::move(m);
  return map;
}

LinearMap LinearMap::zero(Composition domain, Composition codomain) {
  return LinearMap(
      domain, codomain, [codomain](const ModuleVector&) { return ModuleVector(codomain); },
      [domain](const ModuleVector&) { return ModuleVector(domain); });
}

ModuleVector LinearMap::apply(const ModuleVector& f) const {
  if (f.shape() != domain_) {
    throw ShapeError("map on M^" + domain_.to_string() + " applied to a vector on " + f.shape().to_string());
  }
  return apply_(f);
}

ModuleVector LinearMap::apply_adjoint(const ModuleVector& g) const {
  if (g.shape() != codomain_) {
    throw ShapeError("adjoint of a map into M^" + codomain_.to_string() + " applied to a vector on " +
                     g.shape().to_string());
  }
  return adjoint_(g);
}

RationalMatrix LinearMap::matrix(std::uint64_t limit) const {
  if (matrix_) return *matrix_;
  check_materializable(domain_, limit);
  check_materializable(codomain_, limit);
  const auto cols = domain_.tabloid_count();
  RationalMatrix m(codomain_.tabloid_count(), cols);
  for (std::uint64_t c = 0; c < cols; ++c) {
    const auto image = apply_(ModuleVector(domain_, std::vector<std::pair<std::uint64_t, Rational>>{{c, 1}}));
    image.for_each_nonzero([&](std::uint64_t r, const Rational& v) { m(r, c) = v; });
  }
  return m;
}

LinearMap LinearMap::adjoint() const {
  LinearMap map(codomain_, domain_, adjoint_, apply_);
  if (matrix_) map.matrix_ = std::make_shared<const RationalMatrix>(matrix_->transpose());
  return map;
}

LinearMap compose(const LinearMap& outer, const LinearMap& inner) {
  if (outer.domain_ != inner.codomain_) {
    throw ShapeError("cannot compose: inner codomain " + inner.codomain_.to_string() + " vs outer domain " +
                     outer.domain_.to_string());
  }
  return LinearMap(
      inner.domain_, outer.codomain_, [outer, inner](const ModuleVector& f) { return outer.apply(inner.apply(f)); },
      [outer, inner](const ModuleVector& g) { return inner.apply_adjoint(outer.apply_adjoint(g)); });
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  if (a.domain_ != b.domain_ || a.codomain_ != b.codomain_) throw ShapeError("cannot add maps between different modules");
  return LinearMap(
      a.domain_, a.codomain_, [a, b](const ModuleVector& f) { return a.apply(f) + b.apply(f); },
      [a, b](const ModuleVector& g) { return a.apply_adjoint(g) + b.apply_adjoint(g); });
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) { return a + Rational(-1) * b; }

LinearMap operator*(const Rational& c, const LinearMap& m) {
  return LinearMap(
      m.domain_, m.codomain_, [c, m](const ModuleVector& f) { return c * m.apply(f); },
      [c, m](const ModuleVector& g) { return c * m.apply_adjoint(g); });
}

}  // namespace tabloid
