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

#ifndef SPIRIT_VERIFY_H_
#define SPIRIT_VERIFY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spirit/match.h"
#include "spirit/protocol.h"
#include "spirit/value_range.h"

namespace spirit {

// Smallest 1-based i with match.accepts(cost(i), lookup), 0 when absent.
std::uint64_t linear_scan_oracle(std::span<const std::uint64_t> cost,
                                 std::uint64_t lookup,
                                 const MatchPredicate& match);
std::uint64_t linear_scan_oracle(std::span<const std::uint64_t> cost,
                                 std::uint64_t lookup);

struct NamedInstance {
  std::string name;
  SearchInput input;
};

// Match at 1, match at m, duplicate matches, every entry matching and no
// match, over a few sizes including non-powers of two.
std::vector<NamedInstance> adversarial_suite(ValueRange r);

// Degree bookkeeping that must hold for every witness: search circuit degree
// at most 2 max(1, ceil(log2 r)) (p-1)^2, the sketch stage multiplying the
// indicator degree by exactly (p-1)^2, no multiplications inside linear maps,
// and in with_value mode a value stage of exactly one degree more than the
// sketch output.
// Returns a description of the first violation.
std::optional<std::string> check_witness_degrees(const WitnessResult& w,
                                                 ValueRange r,
                                                 std::uint64_t indicator_degree_bound);

struct VerifyConfig {
  std::uint64_t trials = 1000;
  std::uint64_t max_m = 4096;
  ValueRange range = ValueRange::from_count(2);
  std::uint64_t seed = 1;
  // Run every instance against sketch matrices with S(0, 0) flipped.
  bool inject_fault = false;
};

struct VerifyReport {
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::uint64_t witnesses_checked = 0;
  std::optional<std::string> first_counterexample;

  bool ok() const { return failures == 0; }
};

// The fixed adversarial suite, then `trials` random instances with
// m uniform in [1, max_m]; each compared to the oracle and degree-checked.
VerifyReport run_verification(const VerifyConfig& config);

// A matrix source whose sketch matrix has S(0, 0) toggled.
MatrixSource faulty_matrix_source();

}  // namespace spirit

#endif  // SPIRIT_VERIFY_H_
