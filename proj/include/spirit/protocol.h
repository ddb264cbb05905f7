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

#ifndef SPIRIT_PROTOCOL_H_
#define SPIRIT_PROTOCOL_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "spirit/circuit.h"
#include "spirit/match.h"
#include "spirit/modring.h"
#include "spirit/sketch.h"
#include "spirit/value_range.h"

namespace spirit {

// One column of integers in {0, ..., r-1} plus the lookup value.
struct SearchInput {
  std::vector<std::uint64_t> cost;
  ValueRange range = ValueRange::from_count(2);
  std::uint64_t lookup = 0;

  std::size_t m() const { return cost.size(); }
  unsigned bits() const { return range.bits(); }

  // Throws kInvalidArgument for an empty column, kValueOutOfRange for a cost
  // entry outside the range and kLookupOutOfRange for the lookup value.
  void validate() const;
};

// t bit-planes of `values`; plane 0 holds the most significant bit.
std::vector<std::vector<std::uint64_t>> bit_planes(
    std::span<const std::uint64_t> values, unsigned t);

// Where the sketch matrices come from. Empty means the shared cache.
using MatrixSource =
    std::function<std::shared_ptr<const SpiritMatrices>(std::size_t)>;

struct SearchOptions {
  // Also return the matched value bits and a found flag with each witness,
  // so the client can verify candidates without reading the column.
  bool with_value = false;
  MatchPtr match;  // null means exact_match()
  MatrixSource matrices;
};

// Indicator of matching entries, evaluated in the backend's ring:
// m independent predicate evaluations of degree 2t each.
MeteredVector to_binary_indicator(Backend& be, const SearchInput& inp,
                                  const MatchPredicate& match);
MeteredVector to_binary_indicator(Backend& be, const SearchInput& inp);

// What the server returns for one prime, already decrypted by the client.
struct WitnessResult {
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> bits;  // b_p, log2(padded m) entries
  std::optional<std::vector<std::uint64_t>> value_bits;
  std::optional<std::uint64_t> found;  // sum of the one-hot vector
  EvalMetrics metrics;  // whole evaluation, value stage included
  // Max degree over the search circuit alone (indicator and sketch).
  std::uint64_t search_max_degree = 0;
  // with_value mode: max degree of the value stage, one product of the
  // one-hot vector with the degree-1 bit-planes.
  std::optional<std::uint64_t> value_degree;
  std::uint64_t indicator_degree = 0;
  std::uint64_t bits_degree = 0;
  std::uint64_t linear_stage_muls = 0;
};

// One coreset item: the index bits for prime p, evaluated on the
// zero-padded indicator in Z_p.
WitnessResult one_witness(const SearchInput& inp, std::uint64_t p,
                          const SearchOptions& options = {});

// True iff every entry is 0 or 1.
bool is_bit_vector(std::span<const std::uint64_t> bits);

// 1 + the integer whose big-endian binary digits are `bits`. Throws
// kInvalidArgument on entries other than 0 and 1.
std::uint64_t decode_bits(std::span<const std::uint64_t> bits);

struct CoresetItem {
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> bits;
  // Decoded candidate, or 0 when the bits are not binary or point into the
  // zero padding.
  std::uint64_t index = 0;
  std::optional<std::uint64_t> value;  // with_value mode, when decodable
  std::optional<std::uint64_t> found;

  friend bool operator==(const CoresetItem&, const CoresetItem&) = default;
};

struct SearchCoreset {
  std::vector<CoresetItem> items;

  friend bool operator==(const SearchCoreset&, const SearchCoreset&) = default;
};

// The server half: holds the (notionally encrypted) column and lookup and
// answers one batch of per-prime witness evaluations per call.
class SearchServer {
 public:
  explicit SearchServer(SearchInput db) : db_(std::move(db)) {}

  // All primes are evaluated as one non-interactive parallel batch; the
  // result order follows `primes`.
  std::vector<WitnessResult> evaluate(const PrimeSet& primes,
                                      const SearchOptions& options);

  std::uint64_t batch_calls() const { return batch_calls_; }

 private:
  SearchInput db_;
  std::uint64_t batch_calls_ = 0;
};

struct SearchResult {
  std::uint64_t index = 0;  // first match, 0 when absent
  std::optional<std::uint64_t> witness_prime;
  std::optional<std::uint64_t> value;  // with_value mode: retrieved cost(i*)
  PrimeSet primes;
  SearchCoreset coreset;
  std::vector<WitnessResult> witnesses;
  EvalMetrics metrics;  // merged over all witnesses
  std::uint64_t batch_calls = 0;
};

// Client decode of a server batch. In plaintext mode candidates are checked
// against inp.cost; in with_value mode against the retrieved value bits.
SearchResult decode_coreset(const SearchInput& inp, const PrimeSet& primes,
                            std::vector<WitnessResult> witnesses,
                            const SearchOptions& options);

// The whole protocol: one server batch over protocol_primes(m), then client
// decode. Returns the smallest verified candidate; among primes yielding it,
// the first ascending prime is recorded as the witness.
SearchResult secure_search(const SearchInput& inp,
                           const SearchOptions& options = {});

}  // namespace spirit

#endif  // SPIRIT_PROTOCOL_H_
