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

#include "spirit/dataset.h"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>

#include "spirit/error.h"

namespace spirit {
namespace {

constexpr std::string_view kMagic = "SPIRITv1";
constexpr std::size_t kHeaderBytes = 8 + 3 * 8;

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t get_u64(std::string_view bytes, std::size_t at) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) {
    v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[at + i]))
         << (8 * i);
  }
  return v;
}

std::string io_cause() { return errno != 0 ? std::strerror(errno) : "unknown"; }

}  // namespace

void DatasetFile::validate() const {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!range.contains(values[i])) {
      throw Error(ErrorCode::kValueOutOfRange,
                  "value " + std::to_string(values[i]) + " at index " +
                      std::to_string(i + 1) + " is not below r = " +
                      range.to_string());
    }
  }
}

std::string DatasetFile::serialize() const {
  validate();
  std::string out(kMagic);
  out.reserve(kHeaderBytes + 8 * values.size());
  put_u64(out, values.size());
  put_u64(out, range.header_encoding());
  put_u64(out, seed);
  for (std::uint64_t v : values) put_u64(out, v);
  return out;
}

DatasetFile DatasetFile::parse(std::string_view bytes) {
  if (bytes.size() < kHeaderBytes || bytes.substr(0, 8) != kMagic) {
    throw Error(ErrorCode::kMalformedFile, "missing SPIRITv1 header");
  }
  const std::uint64_t m = get_u64(bytes, 8);
  DatasetFile out;
  out.range = ValueRange::from_header(get_u64(bytes, 16));
  out.seed = get_u64(bytes, 24);
  const std::size_t payload = bytes.size() - kHeaderBytes;
  if (payload % 8 != 0 || payload / 8 != m) {
    throw Error(ErrorCode::kMalformedFile,
                "header declares m = " + std::to_string(m) + " but payload holds " +
                    std::to_string(payload) + " bytes");
  }
  out.values.resize(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    out.values[i] = get_u64(bytes, kHeaderBytes + 8 * i);
  }
  try {
    out.validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kMalformedFile, e.what());
  }
  return out;
}

void write_dataset(const std::string& path, const DatasetFile& data) {
  const std::string bytes = data.serialize();
  errno = 0;
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorCode::kIoError, "cannot open " + path + ": " + io_cause());
  f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  f.close();
  if (!f) throw Error(ErrorCode::kIoError, "cannot write " + path + ": " + io_cause());
}

DatasetFile read_dataset(const std::string& path) {
  errno = 0;
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kIoError, "cannot open " + path + ": " + io_cause());
  std::ostringstream buf;
  buf << f.rdbuf();
  if (f.bad()) throw Error(ErrorCode::kIoError, "cannot read " + path + ": " + io_cause());
  return DatasetFile::parse(buf.str());
}

DatasetFile gen_dataset(std::uint64_t m, ValueRange r, std::uint64_t seed,
                        GenMode mode) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "m must be >= 1");
  DatasetFile out;
  out.range = r;
  out.seed = seed;
  out.values.assign(m, 0);
  std::mt19937_64 rng(seed);
  if (mode == GenMode::kOneHot) {
    if (r.max_value() < 1) {
      throw Error(ErrorCode::kInvalidArgument, "one-hot mode needs r >= 2");
    }
    std::uniform_int_distribution<std::uint64_t> pick(0, m - 1);
    out.values[pick(rng)] = 1;
  } else {
    std::uniform_int_distribution<std::uint64_t> draw(0, r.max_value());
    for (auto& v : out.values) v = draw(rng);
  }
  return out;
}

}  // namespace spirit
