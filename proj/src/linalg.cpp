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

#include "tabloid/linalg.hpp"

#include <utility>

#include "tabloid/errors.hpp"

namespace tabloid {

namespace {

using IntegerRows = std::vector<std::vector<Integer>>;

IntegerRows scaled_integer_rows(const RationalMatrix& m) {
  IntegerRows rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    const Integer scale = common_denominator(row);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer num = row[c].get_num() * scale;
      mpz_divexact(rows[r][c].get_mpz_t(), num.get_mpz_t(), row[c].get_den_mpz_t());
    }
  }
  return rows;
}

// In-place Bareiss elimination; returns pivot columns. Every updated entry
// is a minor of the input, so the division by the previous pivot is exact.
std::vector<std::size_t> bareiss(IntegerRows& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Integer& pivot = a[r][c];
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      const bool lead_zero = sgn(a[i][c]) == 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        tmp = pivot * a[i][j];
        if (!lead_zero) tmp -= a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = pivot;
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

void make_primitive(std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& v : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
  return std::vector<Rational>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                               data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<Rational> RationalMatrix::column(std::size_t c) const {
  std::vector<Rational> col(rows_);
  for (std::size_t r = 0; r < rows_; ++r) col[r] = (*this)(r, c);
  return col;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("matrix sum dimension mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RationalMatrix operator*(const Rational& c, const RationalMatrix& m) {
  RationalMatrix out = m;
  for (auto& v : out.data_) v *= c;
  return out;
}

EchelonForm fraction_free_echelon(const RationalMatrix& m) {
  EchelonForm form;
  form.rows = scaled_integer_rows(m);
  form.pivot_columns = bareiss(form.rows, m.cols());
  return form;
}

std::size_t rank(const RationalMatrix& m) { return fraction_free_echelon(m).rank(); }

std::vector<std::vector<Rational>> row_space_basis(const RationalMatrix& m) {
  auto form = fraction_free_echelon(m);
  std::vector<std::vector<Rational>> basis;
  basis.reserve(form.rank());
  for (auto& row : form.rows) {
    make_primitive(row);
    basis.emplace_back(row.begin(), row.end());
  }
  return basis;
}

std::optional<LinearSolution> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw ShapeError("right-hand side length does not match the matrix");
  RationalMatrix augmented(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) augmented(r, c) = a(r, c);
    augmented(r, a.cols()) = b[r];
  }
  const auto form = fraction_free_echelon(augmented);
  if (!form.pivot_columns.empty() && form.pivot_columns.back() == a.cols()) return std::nullopt;

  LinearSolution solution;
  solution.particular.assign(a.cols(), Rational(0));
  solution.nullity = a.cols() - form.rank();
  for (std::size_t i = form.rank(); i-- > 0;) {
    const auto& row = form.rows[i];
    const std::size_t p = form.pivot_columns[i];
    Rational rhs(row[a.cols()]);
    for (std::size_t j = p + 1; j < a.cols(); ++j) {
      if (sgn(row[j]) != 0 && sgn(solution.particular[j]) != 0) rhs -= Rational(row[j]) * solution.particular[j];
    }
    solution.particular[p] = rhs / Rational(row[p]);
  }
  return solution;
}

}  // namespace tabloid
