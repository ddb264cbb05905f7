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

#ifndef SPIRIT_TOOLS_COMMANDS_H_
#define SPIRIT_TOOLS_COMMANDS_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "spirit/costmodel.h"
#include "spirit/dataset.h"
#include "spirit/protocol.h"
#include "spirit/value_range.h"

namespace spirit::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

inline constexpr char kSearchSchema[] = "spirit.search.v1";
inline constexpr char kBenchHeader[] =
    "m,r,p_max,k,wall_ms,mul,add,ispos,max_degree,backend";

struct SearchFlags {
  std::string data_path;
  std::string lookup = "0";
  std::string mode = "exact";  // exact | hamming
  unsigned threshold = 0;
  bool with_value = false;
  bool json = false;
};

struct BenchRecord {
  std::uint64_t m = 0;
  ValueRange r = ValueRange::from_count(2);
  std::uint64_t p_max = 0;
  std::uint64_t k = 0;
  double wall_ms = 0;
  std::uint64_t mul = 0;
  std::uint64_t add = 0;
  std::uint64_t ispos = 0;
  std::uint64_t max_degree = 0;
  std::string backend;
};

// One search over `data`; `wall_ms` is filled in by the caller.
struct SearchReport {
  SearchInput input;
  std::string mode;
  unsigned threshold = 0;
  bool with_value = false;
  SearchResult result;
  double wall_ms = 0;
};

SearchReport run_search(const DatasetFile& data, std::uint64_t lookup,
                        const std::string& mode, unsigned threshold,
                        bool with_value);
std::string search_json(const SearchReport& report);
std::string search_text(const SearchReport& report);

// `bench` rows: one-hot column with lookup 1 for r = 2, otherwise a uniform
// column searched for one of its own values. Deterministic except wall_ms.
BenchRecord bench_point(std::uint64_t m, ValueRange r, std::uint64_t seed);
std::string bench_csv_row(const BenchRecord& rec);

std::string estimate_text(std::uint64_t m, ValueRange r,
                          const CostParams& params);

// Parses argv (without the program name) and runs the chosen subcommand.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace spirit::cli

#endif  // SPIRIT_TOOLS_COMMANDS_H_
