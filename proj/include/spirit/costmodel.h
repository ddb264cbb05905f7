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

#ifndef SPIRIT_COSTMODEL_H_
#define SPIRIT_COSTMODEL_H_

#include <cstdint>
#include <map>
#include <vector>

#include "spirit/modring.h"
#include "spirit/value_range.h"

namespace spirit {

// Machine constants for the running-time estimate. Times in milliseconds.
struct CostParams {
  std::uint64_t cores = 64;
  std::uint64_t simd = 122;
  double add_ms = 0.123;
  double mul_ms = 62.398;
  double ispos_ms = 695.690;

  // Throws kInvalidArgument unless every field is strictly positive.
  void validate() const;
};

struct CostBreakdown {
  std::uint64_t n = 0;  // packed ciphertexts per core
  double add_term_ms = 0;
  double mul_term_ms = 0;
  double ispos_term_ms = 0;

  double total_ms() const { return add_term_ms + mul_term_ms + ispos_term_ms; }
};

// T = n (1 + ceil(log2 n)) ADD + ceil(log2 r) MUL + 2n ISPOS with
// n = ceil(m / (cores * simd)). The MUL term vanishes for r = 1.
CostBreakdown estimate_time(std::uint64_t m, ValueRange r,
                            const CostParams& params);

// Largest prime in protocol_primes(m).
std::uint64_t largest_protocol_prime(std::uint64_t m);

// The same formula with the zero-test constant tied to the ring in use:
// ispos_ms is read as measured at largest_protocol_prime(reference_m) and
// scaled by (p - 1), the zero test's degree. It agrees with estimate_time
// at reference_m and jumps wherever the protocol prime family changes.
// Largest primes are cached per family, so sweeping m is cheap.
class PrimeScaledEstimator {
 public:
  PrimeScaledEstimator(CostParams params, std::uint64_t reference_m);

  CostBreakdown operator()(std::uint64_t m, ValueRange r);

 private:
  std::uint64_t largest_prime(std::uint64_t m);

  CostParams params_;
  double reference_degree_;
  std::map<PrimeFamilyKey, std::uint64_t> largest_;
};

// All m in [m_lo, m_hi] (m_lo >= 3) whose protocol prime family differs
// from the family at m - 1.
std::vector<std::uint64_t> step_points(std::uint64_t m_lo, std::uint64_t m_hi);

}  // namespace spirit

#endif  // SPIRIT_COSTMODEL_H_
