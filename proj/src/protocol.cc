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

#include "spirit/protocol.h"

#include <algorithm>
#include <string>
#include <utility>

#include "spirit/error.h"
#include "spirit/parallel.h"

namespace spirit {
namespace {

SparseBinaryMatrix all_ones_row(std::size_t n) {
  std::vector<SparseBinaryMatrix::Entry> row;
  row.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    row.push_back({static_cast<std::uint32_t>(i), 1});
  }
  return SparseBinaryMatrix(1, n, {row});
}

std::vector<MeteredVector> encrypt_planes(
    Backend& be, const std::vector<std::vector<std::uint64_t>>& planes) {
  std::vector<MeteredVector> out;
  out.reserve(planes.size());
  for (const auto& plane : planes) out.push_back(be.encrypt(plane));
  return out;
}

// The lookup value replicated across all m slots, one plane per bit.
std::vector<MeteredVector> encrypt_lookup(Backend& be, const SearchInput& inp) {
  const unsigned t = inp.bits();
  std::vector<MeteredVector> out;
  out.reserve(t);
  for (unsigned i = 0; i < t; ++i) {
    const std::uint64_t bit = (inp.lookup >> (t - 1 - i)) & 1;
    out.push_back(be.encrypt(std::vector<std::uint64_t>(inp.m(), bit)));
  }
  return out;
}

std::uint64_t bits_to_integer(std::span<const std::uint64_t> bits) {
  std::uint64_t v = 0;
  for (std::uint64_t b : bits) v = (v << 1) | b;
  return v;
}

}  // namespace

void SearchInput::validate() const {
  if (cost.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "search column is empty");
  }
  for (std::size_t i = 0; i < cost.size(); ++i) {
    if (!range.contains(cost[i])) {
      throw Error(ErrorCode::kValueOutOfRange,
                  "cost(" + std::to_string(i + 1) + ") = " +
                      std::to_string(cost[i]) + " is not below r = " +
                      range.to_string());
    }
  }
  if (!range.contains(lookup)) {
    throw Error(ErrorCode::kLookupOutOfRange,
                "lookup " + std::to_string(lookup) + " is not below r = " +
                    range.to_string());
  }
}

std::vector<std::vector<std::uint64_t>> bit_planes(
    std::span<const std::uint64_t> values, unsigned t) {
  std::vector<std::vector<std::uint64_t>> planes(
      t, std::vector<std::uint64_t>(values.size(), 0));
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (unsigned k = 0; k < t; ++k) {
      planes[k][i] = (values[i] >> (t - 1 - k)) & 1;
    }
  }
  return planes;
}

MeteredVector to_binary_indicator(Backend& be, const SearchInput& inp,
                                  const MatchPredicate& match) {
  inp.validate();
  const auto values = encrypt_planes(be, bit_planes(inp.cost, inp.bits()));
  const auto lookup = encrypt_lookup(be, inp);
  return match.evaluate(be, values, lookup);
}

MeteredVector to_binary_indicator(Backend& be, const SearchInput& inp) {
  return to_binary_indicator(be, inp, *exact_match());
}

WitnessResult one_witness(const SearchInput& inp, std::uint64_t p,
                          const SearchOptions& options) {
  inp.validate();
  const MatchPtr match = options.match ? options.match : exact_match();
  const std::size_t m = inp.m();
  const std::size_t padded = next_power_of_two(m);
  const auto mats =
      options.matrices ? options.matrices(padded) : spirit_matrices(padded);
  if (!mats || mats->m != padded) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix source returned the wrong sketch size");
  }

  PlaintextBackend be(p);
  const auto values = encrypt_planes(be, bit_planes(inp.cost, inp.bits()));
  const auto lookup = encrypt_lookup(be, inp);
  MeteredVector indicator = match->evaluate(be, values, lookup);

  WitnessResult result;
  result.prime = p;
  result.indicator_degree = indicator.max_degree();

  if (padded > m) {
    const MeteredVector zeros = fill_constant(be, padded - m, 0);
    indicator.append(zeros);
  }
  const SpiritOutput sketch = first_positive_mod(be, *mats, indicator);
  result.bits = be.decrypt(sketch.bits);
  result.bits_degree = sketch.bits.max_degree();
  result.linear_stage_muls = sketch.linear_stage_muls;
  result.search_max_degree = be.metrics().max_degree;

  if (options.with_value) {
    // <one-hot, bit-plane> per value bit; the padded tail holds no data.
    const MeteredVector onehot = sketch.onehot.slice(0, m);
    const SparseBinaryMatrix sum_m = all_ones_row(m);
    std::vector<std::uint64_t> value_bits;
    value_bits.reserve(values.size());
    std::uint64_t value_degree = 0;
    for (const auto& plane : values) {
      const MeteredVector picked = be.linear_map(sum_m, be.mul(onehot, plane));
      value_degree = std::max(value_degree, picked.max_degree());
      value_bits.push_back(be.decrypt(picked).front());
    }
    result.value_degree = value_degree;
    result.value_bits = std::move(value_bits);
    const MeteredVector total =
        be.linear_map(all_ones_row(padded), sketch.onehot);
    result.found = be.decrypt(total).front();
  }
  result.metrics = be.metrics();
  return result;
}

bool is_bit_vector(std::span<const std::uint64_t> bits) {
  return std::all_of(bits.begin(), bits.end(),
                     [](std::uint64_t b) { return b <= 1; });
}

std::uint64_t decode_bits(std::span<const std::uint64_t> bits) {
  if (!is_bit_vector(bits)) {
    throw Error(ErrorCode::kInvalidArgument, "index bits must be 0 or 1");
  }
  if (bits.size() >= 64) {
    throw Error(ErrorCode::kInvalidArgument, "index wider than 63 bits");
  }
  return 1 + bits_to_integer(bits);
}

std::vector<WitnessResult> SearchServer::evaluate(
    const PrimeSet& primes, const SearchOptions& options) {
  ++batch_calls_;
  std::vector<WitnessResult> out(primes.count());
  parallel_for(primes.count(), [&](std::size_t i) {
    out[i] = one_witness(db_, primes.primes[i], options);
  });
  return out;
}

SearchResult decode_coreset(const SearchInput& inp, const PrimeSet& primes,
                            std::vector<WitnessResult> witnesses,
                            const SearchOptions& options) {
  const MatchPtr match = options.match ? options.match : exact_match();
  SearchResult result;
  result.primes = primes;
  for (const auto& w : witnesses) {
    CoresetItem item;
    item.prime = w.prime;
    item.bits = w.bits;
    if (is_bit_vector(w.bits)) {
      const std::uint64_t idx = decode_bits(w.bits);
      item.index = idx <= inp.m() ? idx : 0;
    }
    if (w.value_bits && is_bit_vector(*w.value_bits)) {
      item.value = bits_to_integer(*w.value_bits);
    }
    item.found = w.found;
    result.metrics.merge(w.metrics);

    bool verified = false;
    if (item.index != 0) {
      if (options.with_value) {
        verified = item.found == 1u && item.value &&
                   match->accepts(*item.value, inp.lookup);
      } else {
        verified = match->accepts(inp.cost[item.index - 1], inp.lookup);
      }
    }
    if (verified && (result.index == 0 || item.index < result.index)) {
      result.index = item.index;
      result.witness_prime = item.prime;
      result.value = options.with_value ? item.value : std::nullopt;
    }
    result.coreset.items.push_back(std::move(item));
  }
  result.witnesses = std::move(witnesses);
  return result;
}

SearchResult secure_search(const SearchInput& inp,
                           const SearchOptions& options) {
  inp.validate();
  const PrimeSet primes = protocol_primes(inp.m());
  SearchServer server(inp);
  auto witnesses = server.evaluate(primes, options);
  SearchResult result =
      decode_coreset(inp, primes, std::move(witnesses), options);
  result.batch_calls = server.batch_calls();
  return result;
}

}  // namespace spirit
