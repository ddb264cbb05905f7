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

#ifndef SPIRIT_DATASET_H_
#define SPIRIT_DATASET_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spirit/value_range.h"

namespace spirit {

// On-disk column: the 8-byte magic "SPIRITv1", then m, r and seed as
// little-endian u64 (r = 0 encodes 2^64), then m little-endian u64 values.
struct DatasetFile {
  ValueRange range = ValueRange::from_count(2);
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> values;

  std::uint64_t m() const { return values.size(); }

  // Throws kValueOutOfRange if some value is not below r.
  void validate() const;
  std::string serialize() const;
  // Throws kMalformedFile on a bad magic, a truncated or oversized payload,
  // or out-of-range values.
  static DatasetFile parse(std::string_view bytes);

  friend bool operator==(const DatasetFile&, const DatasetFile&) = default;
};

// Throws kIoError naming the path and the cause.
void write_dataset(const std::string& path, const DatasetFile& data);
DatasetFile read_dataset(const std::string& path);

enum class GenMode { kOneHot, kUniform };

// Deterministic in (m, r, seed, mode). One-hot needs r >= 2 and places a
// single 1 at a random index; uniform draws each value from {0..r-1}.
DatasetFile gen_dataset(std::uint64_t m, ValueRange r, std::uint64_t seed,
                        GenMode mode);

}  // namespace spirit

#endif  // SPIRIT_DATASET_H_
