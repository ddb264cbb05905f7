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

#ifndef SPIRIT_MATCH_H_
#define SPIRIT_MATCH_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>

#include "spirit/circuit.h"

namespace spirit {

// A match test realized as a circuit over bit-planes, paired with its
// plaintext meaning for the client's verification step.
class MatchPredicate {
 public:
  virtual ~MatchPredicate() = default;

  virtual std::string name() const = 0;
  virtual unsigned threshold() const { return 0; }

  // value_planes and lookup_planes each hold t planes of equal slot count
  // (plane 0 = most significant bit). Returns a 0/1 flag per slot.
  virtual MeteredVector evaluate(
      Backend& be, std::span<const MeteredVector> value_planes,
      std::span<const MeteredVector> lookup_planes) const = 0;

  // Plaintext semantics on t-bit values.
  virtual bool accepts(std::uint64_t a, std::uint64_t b) const = 0;

  // Declared degree and log-size for degree-1 bit inputs of width t.
  virtual std::uint64_t degree(unsigned t) const = 0;
  virtual double log2_size(unsigned t) const = 0;
};

using MatchPtr = std::shared_ptr<const MatchPredicate>;

// Bitwise equality via is_eq.
MatchPtr exact_match();

// 1 iff the Hamming distance between the t-bit strings is at most h.
// Throws kThresholdOutOfRange unless h <= t.
MatchPtr hamming_match(unsigned h, unsigned t);

}  // namespace spirit

#endif  // SPIRIT_MATCH_H_
