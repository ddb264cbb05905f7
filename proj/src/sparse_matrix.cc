// Copyright 2026 The Spirit Search Authors
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

#include "spirit/sparse_matrix.h"

#include <algorithm>
#include <string>

#include "spirit/error.h"

namespace spirit {
namespace {

template <typename T>
std::vector<T> apply(const SparseBinaryMatrix& m, std::span<const T> x) {
  if (x.size() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix has " + std::to_string(m.cols()) +
                    " columns, vector has " + std::to_string(x.size()));
  }
  std::vector<T> y(m.rows(), T{0});
  for (std::size_t r = 0; r < m.rows(); ++r) {
    T acc{0};
    for (const auto& e : m.row(r)) {
      if (e.sign > 0) {
        acc += x[e.col];
      } else {
        acc -= x[e.col];
      }
    }
    y[r] = acc;
  }
  return y;
}

}  // namespace

SparseBinaryMatrix::SparseBinaryMatrix(
    std::size_t rows, std::size_t cols,
    const std::vector<std::vector<Entry>>& row_entries)
    : rows_(rows), cols_(cols) {
  if (row_entries.size() != rows) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected " + std::to_string(rows) + " rows, got " +
                    std::to_string(row_entries.size()));
  }
  offsets_.reserve(rows + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = row_entries[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Entry& e = row[i];
      if (e.col >= cols || (e.sign != 1 && e.sign != -1) ||
          (i > 0 && row[i - 1].col >= e.col)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "bad entry in row " + std::to_string(r));
      }
      entries_.push_back(e);
    }
    offsets_.push_back(entries_.size());
  }
}

int SparseBinaryMatrix::at(std::size_t r, std::size_t c) const {
  auto entries = row(r);
  auto it = std::lower_bound(
      entries.begin(), entries.end(), c,
      [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it == entries.end() || it->col != c) return 0;
  return it->sign;
}

SparseBinaryMatrix SparseBinaryMatrix::with_flipped_bit(std::size_t r,
                                                        std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw Error(ErrorCode::kInvalidArgument, "flip position out of range");
  }
  std::vector<std::vector<Entry>> rows(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    auto entries = row(i);
    rows[i].assign(entries.begin(), entries.end());
  }
  auto& target = rows[r];
  auto it = std::find_if(target.begin(), target.end(),
                         [c](const Entry& e) { return e.col == c; });
  if (it != target.end()) {
    target.erase(it);
  } else {
    target.push_back({static_cast<std::uint32_t>(c), 1});
    std::sort(target.begin(), target.end(),
              [](const Entry& a, const Entry& b) { return a.col < b.col; });
  }
  return SparseBinaryMatrix(rows_, cols_, rows);
}

std::vector<double> SparseBinaryMatrix::multiply(
    std::span<const double> x) const {
  return apply<double>(*this, x);
}

std::vector<std::int64_t> SparseBinaryMatrix::multiply(
    std::span<const std::int64_t> x) const {
  return apply<std::int64_t>(*this, x);
}

}  // namespace spirit
