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

#include "spirit/sketch.h"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <string>

#include "spirit/error.h"

namespace spirit {
namespace {

void require_power_of_two(std::size_t m) {
  if (!is_power_of_two(m)) {
    throw Error(ErrorCode::kInvalidArgument,
                "length must be a power of two, got " + std::to_string(m) +
                    " (pad first)");
  }
}

std::size_t log2_exact(std::size_t m) { return std::bit_width(m) - 1; }

using Entry = SparseBinaryMatrix::Entry;

Entry plus(std::size_t col) { return {static_cast<std::uint32_t>(col), 1}; }

}  // namespace

bool is_power_of_two(std::size_t m) { return std::has_single_bit(m); }

std::size_t next_power_of_two(std::size_t m) {
  return m <= 1 ? 1 : std::bit_ceil(m);
}

SparseBinaryMatrix tree_matrix(std::size_t m) {
  require_power_of_two(m);
  std::vector<std::vector<Entry>> rows(2 * m - 1);
  for (std::size_t node = 1; node <= 2 * m - 1; ++node) {
    const std::size_t level = std::bit_width(node) - 1;
    const std::size_t span = m >> level;
    const std::size_t first = (node - (std::size_t{1} << level)) * span;
    auto& row = rows[node - 1];
    row.reserve(span);
    for (std::size_t c = first; c < first + span; ++c) row.push_back(plus(c));
  }
  return SparseBinaryMatrix(2 * m - 1, m, rows);
}

std::vector<std::size_t> parents(std::size_t m, std::size_t j) {
  require_power_of_two(m);
  if (j < 1 || j > m) {
    throw Error(ErrorCode::kInvalidArgument,
                "leaf " + std::to_string(j) + " outside [1, " +
                    std::to_string(m) + "]");
  }
  std::vector<std::size_t> path;
  for (std::size_t node = m - 1 + j; node >= 1; node /= 2) path.push_back(node);
  return path;
}

std::vector<std::size_t> lop(std::size_t m, std::size_t j) {
  require_power_of_two(m);
  if (j < 1 || j > m + 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "lop index " + std::to_string(j) + " outside [1, " +
                    std::to_string(m + 1) + "]");
  }
  if (j == m + 1) return {1};
  std::vector<std::size_t> out;
  for (std::size_t node : parents(m, j)) {
    if (node > 1 && node % 2 == 1) out.push_back(node - 1);
  }
  return out;
}

SparseBinaryMatrix roots_matrix(std::size_t m) {
  require_power_of_two(m);
  std::vector<std::vector<Entry>> rows(m);
  for (std::size_t j = 1; j <= m; ++j) {
    auto nodes = lop(m, j + 1);
    std::sort(nodes.begin(), nodes.end());
    for (std::size_t node : nodes) rows[j - 1].push_back(plus(node - 1));
  }
  return SparseBinaryMatrix(m, 2 * m - 1, rows);
}

SparseBinaryMatrix pairwise_matrix(std::size_t m) {
  require_power_of_two(m);
  std::vector<std::vector<Entry>> rows(m);
  rows[0].push_back(plus(0));
  for (std::size_t k = 1; k < m; ++k) {
    rows[k].push_back({static_cast<std::uint32_t>(k - 1), -1});
    rows[k].push_back(plus(k));
  }
  return SparseBinaryMatrix(m, m, rows);
}

SparseBinaryMatrix sketch_matrix(std::size_t m) {
  require_power_of_two(m);
  const std::size_t bits = log2_exact(m);
  std::vector<std::vector<Entry>> rows(bits);
  for (std::size_t r = 0; r < bits; ++r) {
    const std::size_t shift = bits - 1 - r;
    for (std::size_t k = 0; k < m; ++k) {
      if ((k >> shift) & 1) rows[r].push_back(plus(k));
    }
  }
  return SparseBinaryMatrix(bits, m, rows);
}

bool TreeRep::consistent(std::span<const double> leaves) const {
  if (leaves.size() != m || w.size() != 2 * m - 1) return false;
  for (std::size_t j = 1; j < m; ++j) {
    if (w[j - 1] != w[2 * j - 1] + w[2 * j]) return false;
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (w[m - 1 + i] != leaves[i]) return false;
  }
  return true;
}

TreeRep tree_representation(std::span<const double> x) {
  TreeRep rep;
  rep.m = x.size();
  rep.w = spirit_matrices(x.size())->tree.multiply(x);
  return rep;
}

SpiritMatrices SpiritMatrices::build(std::size_t m) {
  require_power_of_two(m);
  return SpiritMatrices{m, tree_matrix(m), roots_matrix(m), pairwise_matrix(m),
                        sketch_matrix(m)};
}

std::shared_ptr<const SpiritMatrices> spirit_matrices(std::size_t m) {
  static std::mutex mu;
  static std::map<std::size_t, std::shared_ptr<const SpiritMatrices>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) {
    slot = std::make_shared<const SpiritMatrices>(SpiritMatrices::build(m));
  }
  return slot;
}

std::vector<std::uint8_t> first_positive_real(std::span<const double> x,
                                              const SpiritMatrices& mats) {
  if (x.size() != mats.m) {
    throw Error(ErrorCode::kDimensionMismatch,
                "input length " + std::to_string(x.size()) +
                    " does not match sketch length " + std::to_string(mats.m));
  }
  for (double v : x) {
    if (!(v >= 0.0)) {
      throw Error(ErrorCode::kNegativeInput,
                  "entries must be non-negative, got " + std::to_string(v));
    }
  }
  auto indicator = [](std::vector<double> v) {
    for (double& e : v) e = e != 0.0 ? 1.0 : 0.0;
    return v;
  };
  const auto w = indicator(mats.tree.multiply(x));
  const auto u = indicator(mats.roots.multiply(w));
  const auto b = mats.sketch.multiply(mats.pairwise.multiply(u));
  std::vector<std::uint8_t> bits(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) bits[i] = b[i] != 0.0 ? 1 : 0;
  return bits;
}

std::vector<std::uint8_t> first_positive_real(std::span<const double> x) {
  require_power_of_two(x.size());
  return first_positive_real(x, *spirit_matrices(x.size()));
}

SpiritOutput first_positive_mod(Backend& be, const SpiritMatrices& mats,
                                const MeteredVector& x) {
  if (!be.ring().prime()) {
    throw Error(ErrorCode::kNonPrimeModulus,
                "sketch needs a prime modulus, got " +
                    std::to_string(be.ring().modulus()));
  }
  SpiritOutput out;
  std::uint64_t muls = 0;
  auto linear = [&](const SparseBinaryMatrix& m, const MeteredVector& v) {
    const std::uint64_t before = be.metrics().mul_count;
    MeteredVector y = be.linear_map(m, v);
    muls += be.metrics().mul_count - before;
    return y;
  };
  const MeteredVector w = be.is_positive(linear(mats.tree, x));
  const MeteredVector u = be.is_positive(linear(mats.roots, w));
  out.onehot = linear(mats.pairwise, u);
  out.bits = linear(mats.sketch, out.onehot);
  out.linear_stage_muls = muls;
  return out;
}

SpiritOutput first_positive_mod(Backend& be, const MeteredVector& x) {
  require_power_of_two(x.size());
  return first_positive_mod(be, *spirit_matrices(x.size()), x);
}

}  // namespace spirit
