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

#include "spirit/costmodel.h"

#include <string>

#include "spirit/error.h"

namespace spirit {

void CostParams::validate() const {
  if (cores == 0 || simd == 0 || !(add_ms > 0) || !(mul_ms > 0) ||
      !(ispos_ms > 0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "cost parameters must all be strictly positive");
  }
}

CostBreakdown estimate_time(std::uint64_t m, ValueRange r,
                            const CostParams& params) {
  params.validate();
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "m must be >= 1");
  const std::uint64_t lanes = params.cores * params.simd;
  CostBreakdown out;
  out.n = (m + lanes - 1) / lanes;
  const double n = static_cast<double>(out.n);
  out.add_term_ms =
      n * (1.0 + static_cast<double>(ceil_log2(out.n))) * params.add_ms;
  out.mul_term_ms = static_cast<double>(r.ceil_log2()) * params.mul_ms;
  out.ispos_term_ms = 2.0 * n * params.ispos_ms;
  return out;
}

std::uint64_t largest_protocol_prime(std::uint64_t m) {
  return protocol_primes(m).largest();
}

PrimeScaledEstimator::PrimeScaledEstimator(CostParams params,
                                           std::uint64_t reference_m)
    : params_(params) {
  params_.validate();
  reference_degree_ = static_cast<double>(largest_prime(reference_m) - 1);
}

std::uint64_t PrimeScaledEstimator::largest_prime(std::uint64_t m) {
  const PrimeFamilyKey key = protocol_family_key(m);
  auto it = largest_.find(key);
  if (it == largest_.end()) {
    it = largest_.emplace(key, gen_primes_gt(key.first - 1, key.count).back())
             .first;
  }
  return it->second;
}

CostBreakdown PrimeScaledEstimator::operator()(std::uint64_t m, ValueRange r) {
  CostBreakdown out = estimate_time(m, r, params_);
  const double degree = static_cast<double>(largest_prime(m) - 1);
  out.ispos_term_ms *= degree / reference_degree_;
  return out;
}

std::vector<std::uint64_t> step_points(std::uint64_t m_lo,
                                       std::uint64_t m_hi) {
  if (m_lo < 3 || m_lo >= m_hi) {
    throw Error(ErrorCode::kInvalidArgument,
                "step_points needs 3 <= m_lo < m_hi");
  }
  std::vector<std::uint64_t> out;
  PrimeFamilyKey prev = protocol_family_key(m_lo - 1);
  for (std::uint64_t m = m_lo; m <= m_hi; ++m) {
    const PrimeFamilyKey cur = protocol_family_key(m);
    if (cur != prev) out.push_back(m);
    prev = cur;
  }
  return out;
}

}  // namespace spirit
