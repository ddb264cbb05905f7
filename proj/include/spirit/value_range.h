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

#ifndef SPIRIT_VALUE_RANGE_H_
#define SPIRIT_VALUE_RANGE_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace spirit {

// The value domain {0, ..., r-1} for 1 <= r <= 2^64. Stored as r - 1 so the
// full 64-bit domain is representable.
class ValueRange {
 public:
  // Throws kInvalidArgument for r == 0.
  static ValueRange from_count(std::uint64_t r);
  static ValueRange full_64bit() { return ValueRange(UINT64_MAX); }
  // Decimal (up to 18446744073709551616) or "2^k" with 0 <= k <= 64.
  static ValueRange parse(std::string_view text);
  // Dataset-header encoding: r itself, with 0 standing for 2^64.
  static ValueRange from_header(std::uint64_t encoded);

  std::uint64_t max_value() const { return max_; }
  bool contains(std::uint64_t v) const { return v <= max_; }
  // ceil(log2 r); 0 for r == 1.
  unsigned ceil_log2() const;
  // Bits per value: max(1, ceil(log2 r)).
  unsigned bits() const;
  std::uint64_t header_encoding() const;
  std::string to_string() const;

  friend bool operator==(const ValueRange&, const ValueRange&) = default;

 private:
  explicit ValueRange(std::uint64_t max_value) : max_(max_value) {}

  std::uint64_t max_;
};

}  // namespace spirit

#endif  // SPIRIT_VALUE_RANGE_H_
