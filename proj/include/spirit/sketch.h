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

#ifndef SPIRIT_SKETCH_H_
#define SPIRIT_SKETCH_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "spirit/circuit.h"
#include "spirit/sparse_matrix.h"

// First-positive-index sketch: b = S * P * i(R * i(T * x)).
//
// Tree nodes use the 1-based array numbering of a heap: the root is node 1,
// the children of node j are 2j and 2j+1, and leaf j (1-based) is node
// m - 1 + j. Matrix row r corresponds to node r + 1.

namespace spirit {

bool is_power_of_two(std::size_t m);
std::size_t next_power_of_two(std::size_t m);

// (2m-1) x m. Row of node j has a 1 in column i iff node j lies above leaf i
// (or is it). T * x is the array representation of the sum tree over x.
SparseBinaryMatrix tree_matrix(std::size_t m);

// Nodes on the path from leaf j up to the root, leaf first.
std::vector<std::size_t> parents(std::size_t m, std::size_t j);

// Left siblings of the right-child nodes on the root path of leaf j, root
// excluded; summing tree labels over lop(j + 1) gives the prefix sum
// x(1) + ... + x(j). j = m + 1 is a virtual leaf past the end whose set is
// the root alone, so the last prefix sum is the total.
std::vector<std::size_t> lop(std::size_t m, std::size_t j);

// m x (2m-1). Row j (1-based) is the indicator of lop(j + 1).
SparseBinaryMatrix roots_matrix(std::size_t m);

// m x m first differences: t(1) = u(1), t(k) = u(k) - u(k-1).
SparseBinaryMatrix pairwise_matrix(std::size_t m);

// log2(m) x m. Column k (1-based) is the binary representation of k - 1,
// most significant bit in row 1.
SparseBinaryMatrix sketch_matrix(std::size_t m);

// Array representation of the sum tree over x.
struct TreeRep {
  std::size_t m = 0;
  std::vector<double> w;  // w[j - 1] is the label of node j

  // Every internal label equals the sum of its children, and the last m
  // labels reproduce the leaves.
  bool consistent(std::span<const double> leaves) const;
};

TreeRep tree_representation(std::span<const double> x);

// The four sketch matrices for one (power-of-two) length. They depend only
// on m, so they are built once and shared.
struct SpiritMatrices {
  std::size_t m = 0;
  SparseBinaryMatrix tree;
  SparseBinaryMatrix roots;
  SparseBinaryMatrix pairwise;
  SparseBinaryMatrix sketch;

  static SpiritMatrices build(std::size_t m);
};

// Process-wide cache keyed by m. Thread-safe.
std::shared_ptr<const SpiritMatrices> spirit_matrices(std::size_t m);

// Over the reals (exact zero test). x must be non-negative and have
// power-of-two length. Returns log2(m) bits of i* - 1; all zeros both for
// i* = 1 and for x = 0, which the caller tells apart by checking x(1).
std::vector<std::uint8_t> first_positive_real(std::span<const double> x);
std::vector<std::uint8_t> first_positive_real(std::span<const double> x,
                                              const SpiritMatrices& mats);

struct SpiritOutput {
  MeteredVector onehot;  // P * u, one-hot at i* when the run is correct
  MeteredVector bits;    // S * P * u
  std::uint64_t linear_stage_muls = 0;  // multiplications metered in T, R, P, S
};

// The same composition evaluated in the backend's ring. Correct whenever
// the modulus divides none of the nonzero tree sums on the root path of i*.
SpiritOutput first_positive_mod(Backend& be, const SpiritMatrices& mats,
                                const MeteredVector& x);
SpiritOutput first_positive_mod(Backend& be, const MeteredVector& x);

}  // namespace spirit

#endif  // SPIRIT_SKETCH_H_
