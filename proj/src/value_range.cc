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

#include "spirit/value_range.h"

#include <algorithm>
#include <bit>
#include <charconv>

#include "spirit/error.h"

namespace spirit {

ValueRange ValueRange::from_count(std::uint64_t r) {
  if (r == 0) throw Error(ErrorCode::kInvalidArgument, "range r must be >= 1");
  return ValueRange(r - 1);
}

ValueRange ValueRange::from_header(std::uint64_t encoded) {
  return encoded == 0 ? full_64bit() : from_count(encoded);
}

ValueRange ValueRange::parse(std::string_view text) {
  auto bad = [&] {
    return Error(ErrorCode::kInvalidArgument,
                 "cannot parse range '" + std::string(text) + "'");
  };
  if (text.starts_with("2^")) {
    unsigned k = 0;
    auto rest = text.substr(2);
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || k > 64) {
      throw bad();
    }
    return k == 64 ? full_64bit() : from_count(std::uint64_t{1} << k);
  }
  if (text == "18446744073709551616") return full_64bit();
  std::uint64_t r = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), r);
  if (ec != std::errc() || ptr != text.data() + text.size() || r == 0) {
    throw bad();
  }
  return from_count(r);
}

unsigned ValueRange::ceil_log2() const { return std::bit_width(max_); }

unsigned ValueRange::bits() const { return std::max(1u, ceil_log2()); }

std::uint64_t ValueRange::header_encoding() const {
  return max_ == UINT64_MAX ? 0 : max_ + 1;
}

std::string ValueRange::to_string() const {
  if (max_ == UINT64_MAX) return "18446744073709551616";
  return std::to_string(max_ + 1);
}

}  // namespace spirit
