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

#include "spirit/modring.h"

#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <random>

#include "oracles.h"
#include "spirit/error.h"

namespace spirit {
namespace {

using boost::multiprecision::cpp_int;

// Smallest k with b^k >= m^s, i.e. ceil(s * log_b m), in exact arithmetic.
std::uint64_t exact_ceil_log_ratio(std::uint64_t m, std::uint64_t s,
                                   std::uint64_t b) {
  const cpp_int target = boost::multiprecision::pow(cpp_int(m), s);
  cpp_int acc = 1;
  std::uint64_t k = 0;
  while (acc < target) {
    acc *= b;
    ++k;
  }
  return k;
}

TEST(GenPrimesGt, SmallCases) {
  EXPECT_EQ(gen_primes_gt(3, 4), (std::vector<std::uint64_t>{5, 7, 11, 13}));
  EXPECT_EQ(gen_primes_gt(2, 1), (std::vector<std::uint64_t>{3}));
  EXPECT_EQ(gen_primes_gt(20, 5), spirit_test::primes_above(20, 5));
  EXPECT_EQ(gen_primes_gt(20, 5),
            (std::vector<std::uint64_t>{23, 29, 31, 37, 41}));
}

TEST(GenPrimesGt, MatchesTrialDivisionGrid) {
  for (std::uint64_t b = 2; b <= 1000; b += 37) {
    for (std::size_t count : {1u, 2u, 17u, 250u, 1000u}) {
      ASSERT_EQ(gen_primes_gt(b, count), spirit_test::primes_above(b, count))
          << "b=" << b << " count=" << count;
    }
  }
  EXPECT_EQ(gen_primes_gt(1000, 1000), spirit_test::primes_above(1000, 1000));
}

TEST(IsPrime, AgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    ASSERT_EQ(is_prime(n), spirit_test::prime_by_trial_division(n)) << n;
  }
}

TEST(PrimesForSearch, WorkedValues) {
  const PrimeSet a = primes_for_search(8, 3);
  EXPECT_EQ(a.b, 3u);
  EXPECT_EQ(a.count(), 7u);
  EXPECT_EQ(a.primes,
            (std::vector<std::uint64_t>{5, 7, 11, 13, 17, 19, 23}));

  const PrimeSet b = primes_for_search(2, 1);
  EXPECT_EQ(b.b, 2u);
  EXPECT_EQ(b.primes, (std::vector<std::uint64_t>{3, 5}));
}

TEST(PrimesForSearch, RejectsTinyM) {
  EXPECT_THROW(primes_for_search(1, 1), Error);
  EXPECT_THROW(primes_for_search(0, 3), Error);
}

TEST(PrimesForSearch, CountMatchesExactFormula) {
  for (std::uint64_t m = 2; m <= 5000; m += (m < 300 ? 1 : 97)) {
    for (std::uint64_t s : {1ull, 2ull, 3ull, 7ull, 13ull}) {
      const PrimeSet ps = primes_for_search(m, s);
      const std::uint64_t b =
          std::max<std::uint64_t>(2, spirit_test::log2_exact(m));
      ASSERT_EQ(ps.b, b) << m;
      ASSERT_EQ(ps.count(), 1 + exact_ceil_log_ratio(m, s, b))
          << "m=" << m << " s=" << s;
      ASSERT_EQ(ps.primes, spirit_test::primes_above(b, ps.count()));
    }
  }
}

TEST(PrimesForSearch, ExactPowersDoNotBumpTheCount) {
  // log_4 16 = 2 exactly.
  EXPECT_EQ(primes_for_search(16, 1).count(), 3u);
  EXPECT_EQ(primes_for_search(16, 4).count(), 9u);
}

TEST(PrimesForSearch, Deterministic) {
  EXPECT_EQ(primes_for_search(777, 10), primes_for_search(777, 10));
}

TEST(PrimesForSearch, MagnitudeStaysNearCountLogCount) {
  const std::uint64_t m = std::uint64_t{1} << 20;
  const PrimeSet ps = primes_for_search(m, 20);
  const double k = static_cast<double>(ps.count());
  // The k-th prime is below k (ln k + ln ln k) for k >= 6; at these sizes
  // a constant of 2 over k ln k is generous.
  for (std::uint64_t p : ps.primes) {
    EXPECT_LE(static_cast<double>(p), 2.0 * k * std::log(k)) << p;
  }
}

TEST(ProtocolPrimes, ClampsDegenerateLengths) {
  EXPECT_EQ(protocol_primes(1).primes, (std::vector<std::uint64_t>{3, 5}));
  EXPECT_EQ(protocol_primes(2).primes, (std::vector<std::uint64_t>{3, 5}));
  EXPECT_EQ(protocol_primes(8), primes_for_search(8, 3));
  EXPECT_EQ(protocol_primes(4096), primes_for_search(4096, 12));
}

TEST(ProtocolFamilyKey, IdentifiesTheSet) {
  for (std::uint64_t m = 3; m < 3000; ++m) {
    const bool same_key = protocol_family_key(m) == protocol_family_key(m - 1);
    const bool same_set = protocol_primes(m).primes == protocol_primes(m - 1).primes;
    ASSERT_EQ(same_key, same_set) << m;
  }
}

TEST(IsACorrect, Examples) {
  EXPECT_TRUE(is_a_correct(5, {0, 4, 28}));
  EXPECT_FALSE(is_a_correct(7, {0, 4, 28}));
  EXPECT_TRUE(is_a_correct(3, {0}));
  EXPECT_TRUE(is_a_correct(101, {0}));
}

TEST(FindCorrectPrime, Examples) {
  const PrimeSet ps = primes_for_search(8, 3);
  EXPECT_EQ(find_correct_prime(ps, {0, 1}), 5u);
  EXPECT_EQ(find_correct_prime(ps, {5, 7, 11, 13, 17, 19}), 23u);
  EXPECT_EQ(find_correct_prime(ps, {}), 5u);
}

TEST(FindCorrectPrime, ThrowsWhenEveryPrimeDivides) {
  const PrimeSet ps = primes_for_search(8, 3);
  try {
    find_correct_prime(ps, {5, 7, 11, 13, 17, 19, 23});
    FAIL() << "expected NoCorrectPrime";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoCorrectPrime);
  }
}

TEST(FindCorrectPrime, PigeonholeOnRandomSets) {
  std::mt19937_64 rng(20261014);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::uint64_t m = std::uniform_int_distribution<std::uint64_t>(4, 4096)(rng);
    const std::uint64_t s = ceil_log2(m);
    std::uniform_int_distribution<std::uint64_t> elem(0, m);
    CorrectnessWitnessSet a;
    const std::uint64_t size = std::uniform_int_distribution<std::uint64_t>(0, s)(rng);
    while (a.size() < size) a.insert(elem(rng));
    const PrimeSet ps = primes_for_search(m, s);
    const std::uint64_t p = find_correct_prime(ps, a);
    ASSERT_TRUE(is_a_correct(p, a));
    for (std::uint64_t q : ps.primes) {
      if (q == p) break;
      ASSERT_FALSE(is_a_correct(q, a));
    }
  }
}

}  // namespace
}  // namespace spirit
