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

#include <bit>
#include <string>
#include <vector>

#include "spirit/error.h"

namespace spirit {
namespace {

class ExactMatch final : public MatchPredicate {
 public:
  std::string name() const override { return "exact"; }

  MeteredVector evaluate(Backend& be, std::span<const MeteredVector> values,
                         std::span<const MeteredVector> lookup) const override {
    return is_eq_slots(be, values, lookup);
  }

  bool accepts(std::uint64_t a, std::uint64_t b) const override {
    return a == b;
  }

  std::uint64_t degree(unsigned t) const override { return 2ull * t; }
  double log2_size(unsigned t) const override { return 2.0 * t; }
};

// Counts mismatching bits in unary: after processing i bits, state[k] is 1
// iff exactly k of them differ (k <= h). Every intermediate is 0/1 in any
// Z_p, so no modulus can alias a large distance onto a small one.
class HammingMatch final : public MatchPredicate {
 public:
  HammingMatch(unsigned h, unsigned t) : h_(h), t_(t) {}

  std::string name() const override { return "hamming"; }
  unsigned threshold() const override { return h_; }

  MeteredVector evaluate(Backend& be, std::span<const MeteredVector> values,
                         std::span<const MeteredVector> lookup) const override {
    if (values.size() != t_ || lookup.size() != t_) {
      throw Error(ErrorCode::kLengthMismatch,
                  "hamming predicate built for t = " + std::to_string(t_) +
                      ", got " + std::to_string(values.size()) + " planes");
    }
    const std::size_t n = values.front().size();
    const MeteredVector ones = fill_constant(be, n, 1);
    std::vector<MeteredVector> state(h_ + 1, fill_constant(be, n, 0));
    state[0] = ones;
    for (unsigned i = 0; i < t_; ++i) {
      MeteredVector diff = be.sub(values[i], lookup[i]);
      MeteredVector differ = be.mul(diff, diff);
      MeteredVector agree = be.sub(ones, differ);
      for (unsigned k = h_; k >= 1; --k) {
        state[k] = be.add(be.mul(state[k], agree), be.mul(state[k - 1], differ));
      }
      state[0] = be.mul(state[0], agree);
    }
    MeteredVector out = state[0];
    for (unsigned k = 1; k <= h_; ++k) out = be.add(out, state[k]);
    return out;
  }

  bool accepts(std::uint64_t a, std::uint64_t b) const override {
    return static_cast<unsigned>(std::popcount(a ^ b)) <= h_;
  }

  std::uint64_t degree(unsigned t) const override { return 2ull * t; }
  double log2_size(unsigned t) const override { return 2.0 * t; }

 private:
  unsigned h_;
  unsigned t_;
};

}  // namespace

MatchPtr exact_match() {
  static const MatchPtr instance = std::make_shared<ExactMatch>();
  return instance;
}

MatchPtr hamming_match(unsigned h, unsigned t) {
  if (h > t) {
    throw Error(ErrorCode::kThresholdOutOfRange,
                "threshold " + std::to_string(h) + " exceeds width " +
                    std::to_string(t));
  }
  return std::make_shared<HammingMatch>(h, t);
}

}  // namespace spirit
