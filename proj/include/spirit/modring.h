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

#ifndef SPIRIT_MODRING_H_
#define SPIRIT_MODRING_H_

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

namespace spirit {

// ceil(log2(x)) for x >= 1; 0 for x == 1.
std::uint64_t ceil_log2(std::uint64_t x);

bool is_prime(std::uint64_t n);

// The `count` smallest primes strictly greater than `b`, ascending.
std::vector<std::uint64_t> gen_primes_gt(std::uint64_t b, std::size_t count);

// Smallest prime strictly greater than `b`.
std::uint64_t next_prime_above(std::uint64_t b);

// The ordered prime family used to build a search coreset.
//
// For an array bound m and sparsity s the family is the first
// 1 + ceil(s * log_b(m)) primes above b = max(2, ceil(log2 m)). Any set of
// at most s non-negative integers bounded by m is "correctly" represented
// modulo at least one member (see is_a_correct), since each such integer has
// at most log_b(m) prime divisors larger than b.
struct PrimeSet {
  std::uint64_t m = 0;
  std::uint64_t s = 0;
  std::uint64_t b = 0;
  std::vector<std::uint64_t> primes;

  std::size_t count() const { return primes.size(); }
  std::uint64_t largest() const { return primes.back(); }

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;
};

// b = max(2, ceil(log2 m)).
std::uint64_t prime_threshold(std::uint64_t m);

// 1 + ceil(s * ln(m) / ln(b)), computed exactly (ties where b^k == m^s are
// resolved by factorization, not floating point).
std::uint64_t prime_count(std::uint64_t m, std::uint64_t s, std::uint64_t b);

// Throws kInvalidArgument for m < 2.
PrimeSet primes_for_search(std::uint64_t m, std::uint64_t s);

// The family used by the search protocol for an array of length m:
// primes_for_search(m, ceil(log2 m)). Lengths 1 and 2 share the (2, 1)
// family because the definition needs m >= 2 and s >= 1.
PrimeSet protocol_primes(std::uint64_t m);

// The protocol family is the first `count` primes above b, so it is
// identified by (first prime above b, count) without listing it.
struct PrimeFamilyKey {
  std::uint64_t first = 0;
  std::uint64_t count = 0;

  friend auto operator<=>(const PrimeFamilyKey&, const PrimeFamilyKey&) = default;
};

PrimeFamilyKey protocol_family_key(std::uint64_t m);

// Set of tree-node sums along the root path of the first match. Only the
// distinct values matter for correctness, so a set is enough.
using CorrectnessWitnessSet = std::set<std::uint64_t>;

// True iff no nonzero element of `a` is divisible by p.
bool is_a_correct(std::uint64_t p, const CorrectnessWitnessSet& a);

// Smallest A-correct prime of `ps`. Existence is guaranteed when |a| <= ps.s
// and every element is at most ps.m; outside that regime the scan still runs
// and throws kNoCorrectPrime when every prime divides some element.
std::uint64_t find_correct_prime(const PrimeSet& ps,
                                 const CorrectnessWitnessSet& a);

}  // namespace spirit

#endif  // SPIRIT_MODRING_H_
