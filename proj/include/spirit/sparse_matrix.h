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

#ifndef SPIRIT_SPARSE_MATRIX_H_
#define SPIRIT_SPARSE_MATRIX_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace spirit {

// Row-compressed matrix with entries in {-1, 0, +1}. Column indices are
// strictly ascending within each row. Rows and columns are 0-based here;
// the tree constructions in sketch.h document their 1-based node numbering.
class SparseBinaryMatrix {
 public:
  struct Entry {
    std::uint32_t col;
    std::int8_t sign;  // -1 or +1

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseBinaryMatrix() = default;

  // Each inner vector lists one row's nonzeros. Validates ranges, signs and
  // ordering; throws kInvalidArgument on violation.
  SparseBinaryMatrix(std::size_t rows, std::size_t cols,
                     const std::vector<std::vector<Entry>>& row_entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return entries_.size(); }

  std::span<const Entry> row(std::size_t r) const {
    return {entries_.data() + offsets_[r], offsets_[r + 1] - offsets_[r]};
  }

  // -1, 0 or +1.
  int at(std::size_t r, std::size_t c) const;

  // Copy with the (r, c) entry toggled between 0 and +1 (a -1 becomes 0).
  // Used to inject faults when exercising verification harnesses.
  SparseBinaryMatrix with_flipped_bit(std::size_t r, std::size_t c) const;

  // Exact products over the reals and the integers (no modular reduction).
  std::vector<double> multiply(std::span<const double> x) const;
  std::vector<std::int64_t> multiply(std::span<const std::int64_t> x) const;

  friend bool operator==(const SparseBinaryMatrix&,
                         const SparseBinaryMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Entry> entries_;
};

}  // namespace spirit

#endif  // SPIRIT_SPARSE_MATRIX_H_
