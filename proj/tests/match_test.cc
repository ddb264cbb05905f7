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

#include "spirit/match.h"

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "spirit/error.h"

namespace spirit {
namespace {

// Evaluates `match` on every (a, b) pair of t-bit values in one slot batch.
std::vector<std::uint64_t> all_pairs(const MatchPredicate& match, unsigned t,
                                     std::uint64_t p,
                                     std::uint64_t* degree = nullptr) {
  const std::size_t n = std::size_t{1} << (2 * t);
  PlaintextBackend be(p);
  std::vector<MeteredVector> va, vb;
  for (unsigned k = 0; k < t; ++k) {
    std::vector<std::uint64_t> pa(n), pb(n);
    for (std::size_t s = 0; s < n; ++s) {
      pa[s] = ((s >> t) >> (t - 1 - k)) & 1;
      pb[s] = ((s & ((1u << t) - 1)) >> (t - 1 - k)) & 1;
    }
    va.push_back(be.encrypt(pa));
    vb.push_back(be.encrypt(pb));
  }
  const MeteredVector y = match.evaluate(be, va, vb);
  if (degree) *degree = y.max_degree();
  return be.decrypt(y);
}

TEST(ExactMatch, EqualsBitwiseEquality) {
  for (unsigned t = 1; t <= 4; ++t) {
    std::uint64_t deg = 0;
    const auto got = all_pairs(*exact_match(), t, 3, &deg);
    EXPECT_EQ(deg, exact_match()->degree(t));
    for (std::size_t s = 0; s < got.size(); ++s) {
      ASSERT_EQ(got[s], (s >> t) == (s & ((1u << t) - 1)) ? 1u : 0u);
    }
  }
  EXPECT_TRUE(exact_match()->accepts(9, 9));
  EXPECT_FALSE(exact_match()->accepts(9, 8));
}

TEST(HammingMatch, ThresholdZeroIsExact) {
  for (unsigned t = 1; t <= 4; ++t) {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
      EXPECT_EQ(all_pairs(*hamming_match(0, t), t, p),
                all_pairs(*exact_match(), t, p));
    }
  }
}

TEST(HammingMatch, FullThresholdIsConstantOne) {
  for (unsigned t = 1; t <= 4; ++t) {
    const auto got = all_pairs(*hamming_match(t, t), t, 3);
    for (std::uint64_t v : got) ASSERT_EQ(v, 1u);
  }
}

TEST(HammingMatch, ExhaustiveAgainstPopcount) {
  for (unsigned t = 1; t <= 4; ++t) {
    for (unsigned h = 0; h <= t; ++h) {
      // Includes p = 2 and 3, both at most t for the wider cases.
      for (std::uint64_t p : {2ull, 3ull, 7ull}) {
        const MatchPtr match = hamming_match(h, t);
        std::uint64_t deg = 0;
        const auto got = all_pairs(*match, t, p, &deg);
        EXPECT_EQ(deg, match->degree(t));
        for (std::size_t s = 0; s < got.size(); ++s) {
          const std::uint64_t a = s >> t, b = s & ((1u << t) - 1);
          const bool want = spirit_test::popcount64(a ^ b) <= h;
          ASSERT_EQ(got[s], want ? 1u : 0u)
              << "t=" << t << " h=" << h << " p=" << p << " a=" << a << " b=" << b;
          ASSERT_EQ(match->accepts(a, b), want);
        }
      }
    }
  }
}

TEST(HammingMatch, HandFixtures) {
  const MatchPtr h1 = hamming_match(1, 3);
  EXPECT_TRUE(h1->accepts(0b101, 0b100));
  EXPECT_FALSE(h1->accepts(0b101, 0b010));
  EXPECT_TRUE(h1->accepts(0b100, 0b101));
  EXPECT_TRUE(h1->accepts(0b111, 0b101));
  EXPECT_EQ(h1->threshold(), 1u);
  EXPECT_EQ(h1->name(), "hamming");
}

TEST(HammingMatch, RejectsThresholdAboveWidth) {
  try {
    hamming_match(4, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kThresholdOutOfRange);
  }
  PlaintextBackend be(5);
  std::vector<MeteredVector> one{be.encrypt(std::vector<std::uint64_t>{1})};
  EXPECT_THROW(hamming_match(1, 2)->evaluate(be, one, one), Error);
}

}  // namespace
}  // namespace spirit
