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

#ifndef TABLOID_LINALG_HPP
#define TABLOID_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "tabloid/rational.hpp"

namespace tabloid {

// Row-major exact matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::vector<Rational> row(std::size_t r) const;
  std::vector<Rational> column(std::size_t c) const;

  RationalMatrix transpose() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& c, const RationalMatrix& m);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Integer row echelon form from Bareiss elimination. Each input row is
// first scaled by the lcm of its denominators; pivots are taken left to
// right, first nonzero row at or below the current one.
struct EchelonForm {
  std::vector<std::vector<Integer>> rows;  // the rank-many nonzero rows
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

EchelonForm fraction_free_echelon(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

// A basis of the row space, each vector scaled to primitive integers.
std::vector<std::vector<Rational>> row_space_basis(const RationalMatrix& m);

struct LinearSolution {
  std::vector<Rational> particular;  // free variables set to zero
  std::size_t nullity = 0;           // dimension of the solution space
};

// Solves A x = b exactly; nullopt when the system is inconsistent.
std::optional<LinearSolution> solve(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace tabloid

#endif  // TABLOID_LINALG_HPP
