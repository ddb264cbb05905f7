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

#ifndef SPIRIT_TESTS_ORACLES_H_
#define SPIRIT_TESTS_ORACLES_H_

// Independent reference computations used by the tests. None of these call
// into the library.

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

namespace spirit_test {

inline bool prime_by_trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> primes_above(std::uint64_t b,
                                               std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = b + 1; out.size() < count; ++n) {
    if (prime_by_trial_division(n)) out.push_back(n);
  }
  return out;
}

// 1-based first index with cost(i) == lookup, 0 when absent.
inline std::uint64_t first_match(const std::vector<std::uint64_t>& cost,
                                 std::uint64_t lookup) {
  for (std::size_t i = 0; i < cost.size(); ++i) {
    if (cost[i] == lookup) return i + 1;
  }
  return 0;
}

inline std::uint64_t first_positive(const std::vector<double>& x) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0) return i + 1;
  }
  return 0;
}

// Big-endian bits of v, `width` of them.
inline std::vector<std::uint64_t> to_bits(std::uint64_t v, unsigned width) {
  std::vector<std::uint64_t> out(width);
  for (unsigned k = 0; k < width; ++k) out[k] = (v >> (width - 1 - k)) & 1;
  return out;
}

inline unsigned log2_exact(std::size_t m) {
  unsigned k = 0;
  while ((std::size_t{1} << k) < m) ++k;
  return k;
}

inline std::size_t pow2_at_least(std::size_t m) {
  std::size_t p = 1;
  while (p < m) p *= 2;
  return p;
}

// Subtree sums over the heap-numbered tree whose leaves are x (power-of-two
// length), computed by recursion rather than by a matrix.
inline std::uint64_t subtree_sum(const std::vector<std::uint64_t>& x,
                                 std::size_t node) {
  const std::size_t m = x.size();
  if (node >= m) return x[node - m];
  return subtree_sum(x, 2 * node) + subtree_sum(x, 2 * node + 1);
}

// Tree sums on the path from leaf i (1-based) to the root.
inline std::set<std::uint64_t> path_sums(const std::vector<std::uint64_t>& x,
                                         std::size_t i) {
  std::set<std::uint64_t> out;
  for (std::size_t node = x.size() - 1 + i; node >= 1; node /= 2) {
    out.insert(subtree_sum(x, node));
  }
  return out;
}

inline unsigned popcount64(std::uint64_t v) {
  unsigned c = 0;
  for (; v; v &= v - 1) ++c;
  return c;
}

}  // namespace spirit_test

#endif  // SPIRIT_TESTS_ORACLES_H_
