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

#include "tabloid/tabloid.hpp"

#include <algorithm>
#include <numeric>

#include "tabloid/combinatorics.hpp"
#include "tabloid/errors.hpp"

namespace tabloid {

namespace {

// Number of tabloids on the rows [first, end) of the shape.
std::uint64_t tail_count(const Composition& shape, std::size_t first) {
  std::vector<int> rest(shape.parts().begin() + static_cast<std::ptrdiff_t>(first),
                        shape.parts().end());
  return multinomial(rest);
}

void check_limit(const Composition& shape, std::uint64_t limit) {
  const auto count = shape.tabloid_count();
  if (count > limit) {
    throw CapacityError("|X^" + shape.to_string() + "| = " + std::to_string(count) +
                        " exceeds the enumeration limit " + std::to_string(limit));
  }
}

// Lexicographic rank of the k-subset of {0, ..., m-1} given by ascending
// positions.
std::uint64_t combination_rank(const std::vector<int>& positions, int m) {
  const int k = static_cast<int>(positions.size());
  std::uint64_t rank = 0;
  int prev = -1;
  for (int t = 0; t < k; ++t) {
    for (int q = prev + 1; q < positions[static_cast<std::size_t>(t)]; ++q) {
      rank += binomial(m - 1 - q, k - 1 - t);
    }
    prev = positions[static_cast<std::size_t>(t)];
  }
  return rank;
}

std::vector<int> combination_unrank(std::uint64_t rank, int m, int k) {
  std::vector<int> positions;
  positions.reserve(static_cast<std::size_t>(k));
  int q = 0;
  for (int t = 0; t < k; ++t) {
    for (;; ++q) {
      const auto block = binomial(m - 1 - q, k - 1 - t);
      if (rank < block) break;
      rank -= block;
    }
    positions.push_back(q++);
  }
  return positions;
}

}  // namespace

Tabloid Tabloid::from_rows(const std::vector<std::vector<int>>& rows) {
  std::vector<int> parts;
  int n = 0;
  for (const auto& row : rows) {
    parts.push_back(static_cast<int>(row.size()));
    n += static_cast<int>(row.size());
  }
  Composition shape(std::move(parts));
  std::vector<int> row_of(static_cast<std::size_t>(n), -1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (int label : rows[r]) {
      if (label < 1 || label > n) {
        throw DomainError("tabloid entry " + std::to_string(label) + " outside 1.." + std::to_string(n));
      }
      if (row_of[static_cast<std::size_t>(label - 1)] != -1) {
        throw DomainError("tabloid entry " + std::to_string(label) + " repeated");
      }
      row_of[static_cast<std::size_t>(label - 1)] = static_cast<int>(r);
    }
  }
  return Tabloid(std::move(shape), std::move(row_of));
}

Tabloid::Tabloid(Composition shape, std::vector<int> row_assignment)
    : shape_(std::move(shape)), row_of_(std::move(row_assignment)) {
  if (static_cast<int>(row_of_.size()) != shape_.n()) {
    throw ShapeError("row assignment length does not match shape " + shape_.to_string());
  }
  std::vector<int> filled(shape_.rows(), 0);
  for (int r : row_of_) {
    if (r < 0 || static_cast<std::size_t>(r) >= shape_.rows()) {
      throw DomainError("row index out of range for shape " + shape_.to_string());
    }
    ++filled[static_cast<std::size_t>(r)];
  }
  for (std::size_t r = 0; r < shape_.rows(); ++r) {
    if (filled[r] != shape_[r]) {
      throw ShapeError("row sizes do not match shape " + shape_.to_string());
    }
  }
}

std::vector<std::vector<int>> Tabloid::rows() const {
  std::vector<std::vector<int>> rows(shape_.rows());
  for (std::size_t i = 0; i < row_of_.size(); ++i) {
    rows[static_cast<std::size_t>(row_of_[i])].push_back(static_cast<int>(i) + 1);
  }
  return rows;
}

std::vector<int> Tabloid::reading_word() const {
  std::vector<int> word;
  word.reserve(row_of_.size());
  for (const auto& row : rows()) word.insert(word.end(), row.begin(), row.end());
  return word;
}

std::string Tabloid::to_string() const {
  std::string s;
  const auto rs = rows();
  for (std::size_t r = 0; r < rs.size(); ++r) {
    if (r) s += "|";
    for (std::size_t i = 0; i < rs[r].size(); ++i) {
      if (i) s += ",";
      s += std::to_string(rs[r][i]);
    }
  }
  return s;
}

std::strong_ordering operator<=>(const Tabloid& a, const Tabloid& b) {
  if (auto c = a.shape_ <=> b.shape_; c != 0) return c;
  const auto wa = a.reading_word();
  const auto wb = b.reading_word();
  return std::lexicographical_compare_three_way(wa.begin(), wa.end(), wb.begin(), wb.end());
}

Tabloid initial_tabloid(const Composition& shape) {
  std::vector<int> row_of;
  row_of.reserve(static_cast<std::size_t>(shape.n()));
  for (std::size_t r = 0; r < shape.rows(); ++r) {
    row_of.insert(row_of.end(), static_cast<std::size_t>(shape[r]), static_cast<int>(r));
  }
  return Tabloid(shape, std::move(row_of));
}

void for_each_tabloid(const Composition& shape,
                      const std::function<void(std::uint64_t, const Tabloid&)>& visit,
                      std::uint64_t limit) {
  check_limit(shape, limit);
  const std::size_t m = shape.rows();
  std::vector<int> row_of(static_cast<std::size_t>(shape.n()), -1);
  std::uint64_t rank = 0;

  // Rows are filled top to bottom; each row takes the lexicographically
  // next subset of the labels still unassigned.
  std::function<void(std::size_t, const std::vector<int>&)> fill =
      [&](std::size_t row, const std::vector<int>& remaining) {
        if (row + 1 == m) {
          for (int label : remaining) row_of[static_cast<std::size_t>(label - 1)] = static_cast<int>(row);
          visit(rank++, Tabloid(shape, row_of));
          return;
        }
        const int k = shape[row];
        const int size = static_cast<int>(remaining.size());
        std::vector<int> pick(static_cast<std::size_t>(k));
        std::iota(pick.begin(), pick.end(), 0);
        std::vector<int> rest;
        for (;;) {
          rest.clear();
          std::size_t p = 0;
          for (int i = 0; i < size; ++i) {
            if (p < pick.size() && pick[p] == i) {
              row_of[static_cast<std::size_t>(remaining[static_cast<std::size_t>(i)] - 1)] = static_cast<int>(row);
              ++p;
            } else {
              rest.push_back(remaining[static_cast<std::size_t>(i)]);
            }
          }
          fill(row + 1, rest);
          int t = k - 1;
          while (t >= 0 && pick[static_cast<std::size_t>(t)] == size - k + t) --t;
          if (t < 0) break;
          ++pick[static_cast<std::size_t>(t)];
          for (int u = t + 1; u < k; ++u) pick[static_cast<std::size_t>(u)] = pick[static_cast<std::size_t>(u - 1)] + 1;
        }
      };

  std::vector<int> all(static_cast<std::size_t>(shape.n()));
  std::iota(all.begin(), all.end(), 1);
  fill(0, all);
}

std::vector<Tabloid> enumerate_tabloids(const Composition& shape, std::uint64_t limit) {
  std::vector<Tabloid> out;
  check_limit(shape, limit);
  out.reserve(static_cast<std::size_t>(shape.tabloid_count()));
  for_each_tabloid(shape, [&](std::uint64_t, const Tabloid& x) { out.push_back(x); }, limit);
  return out;
}

std::uint64_t lex_rank(const Tabloid& x) {
  const auto& shape = x.shape();
  std::vector<int> remaining(static_cast<std::size_t>(x.n()));
  std::iota(remaining.begin(), remaining.end(), 1);
  std::uint64_t rank = 0;
  for (std::size_t row = 0; row + 1 < shape.rows(); ++row) {
    std::vector<int> positions;
    std::vector<int> rest;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (x.row_of(remaining[i]) == static_cast<int>(row)) {
        positions.push_back(static_cast<int>(i));
      } else {
        rest.push_back(remaining[i]);
      }
    }
    rank += combination_rank(positions, static_cast<int>(remaining.size())) * tail_count(shape, row + 1);
    remaining = std::move(rest);
  }
  return rank;
}

Tabloid unrank(const Composition& shape, std::uint64_t rank) {
  const auto count = shape.tabloid_count();
  if (rank >= count) {
    throw DomainError("rank " + std::to_string(rank) + " out of range for X^" + shape.to_string() +
                      " (size " + std::to_string(count) + ")");
  }
  std::vector<int> remaining(static_cast<std::size_t>(shape.n()));
  std::iota(remaining.begin(), remaining.end(), 1);
  std::vector<int> row_of(remaining.size(), -1);
  for (std::size_t row = 0; row < shape.rows(); ++row) {
    if (row + 1 == shape.rows()) {
      for (int label : remaining) row_of[static_cast<std::size_t>(label - 1)] = static_cast<int>(row);
      break;
    }
    const auto block = tail_count(shape, row + 1);
    const auto positions =
        combination_unrank(rank / block, static_cast<int>(remaining.size()), shape[row]);
    rank %= block;
    std::vector<int> rest;
    std::size_t p = 0;
    for (std::size_t i = 0; i < remaining.size(); ++i) {
      if (p < positions.size() && positions[p] == static_cast<int>(i)) {
        row_of[static_cast<std::size_t>(remaining[i] - 1)] = static_cast<int>(row);
        ++p;
      } else {
        rest.push_back(remaining[i]);
      }
    }
    remaining = std::move(rest);
  }
  return Tabloid(shape, std::move(row_of));
}

Tabloid act_tabloid(const Permutation& sigma, const Tabloid& x) {
  if (sigma.size() != x.n()) {
    throw ShapeError("permutation on " + std::to_string(sigma.size()) + " symbols acting on a tabloid of size " +
                     std::to_string(x.n()));
  }
  std::vector<int> row_of(x.row_assignment().size());
  for (int label = 1; label <= x.n(); ++label) {
    row_of[static_cast<std::size_t>(sigma(label) - 1)] = x.row_of(label);
  }
  return Tabloid(x.shape(), std::move(row_of));
}

Tabloid reorder_rows(const Tabloid& x, std::span<const int> row_order) {
  const auto& shape = x.shape();
  if (row_order.size() != shape.rows()) throw ShapeError("row order length does not match shape");
  std::vector<int> new_index(shape.rows(), -1);
  std::vector<int> parts(shape.rows());
  for (std::size_t r = 0; r < row_order.size(); ++r) {
    const int src = row_order[r];
    if (src < 0 || static_cast<std::size_t>(src) >= shape.rows() || new_index[static_cast<std::size_t>(src)] != -1) {
      throw DomainError("row order is not a permutation of the rows");
    }
    new_index[static_cast<std::size_t>(src)] = static_cast<int>(r);
    parts[r] = shape[static_cast<std::size_t>(src)];
  }
  std::vector<int> row_of(x.row_assignment().size());
  for (std::size_t i = 0; i < row_of.size(); ++i) {
    row_of[i] = new_index[static_cast<std::size_t>(x.row_assignment()[i])];
  }
  return Tabloid(Composition(std::move(parts)), std::move(row_of));
}

std::vector<int> sorting_row_order(const Composition& shape) {
  std::vector<int> order(shape.rows());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return shape[static_cast<std::size_t>(a)] > shape[static_cast<std::size_t>(b)];
  });
  return order;
}

std::vector<std::uint64_t> sorted_shape_bijection(const Composition& shape) {
  const auto order = sorting_row_order(shape);
  std::vector<std::uint64_t> map;
  map.reserve(static_cast<std::size_t>(shape.tabloid_count()));
  for_each_tabloid(shape, [&](std::uint64_t, const Tabloid& x) { map.push_back(lex_rank(reorder_rows(x, order))); });
  return map;
}

}  // namespace tabloid
