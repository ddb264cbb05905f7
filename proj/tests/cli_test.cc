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

#include "commands.h"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.h"
#include "spirit/costmodel.h"
#include "spirit/verify.h"

namespace spirit::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (fs::temp_directory_path() / ("spirit_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string golden(const std::string& name) {
  return slurp(std::string(SPIRIT_GOLDEN_DIR) + "/" + name);
}

std::string worked_dataset() {
  const std::string path = temp_path("worked.bin");
  DatasetFile d;
  d.range = ValueRange::from_count(16);
  d.values = {4, 2, 3, 9, 5, 4, 9, 2};
  write_dataset(path, d);
  return path;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

TEST(CliGen, WritesDeterministicFiles) {
  const std::string a = temp_path("gen_a.bin"), b = temp_path("gen_b.bin");
  ASSERT_EQ(run({"gen", "--m", "8", "--r", "2^16", "--seed", "1", "--mode",
                 "uniform", "--out", a}).code, kExitOk);
  ASSERT_EQ(run({"gen", "--m", "8", "--r", "2^16", "--seed", "1", "--mode",
                 "uniform", "--out", b}).code, kExitOk);
  EXPECT_EQ(slurp(a), slurp(b));
  const DatasetFile d = read_dataset(a);
  EXPECT_EQ(d.m(), 8u);
  EXPECT_EQ(d.seed, 1u);
  EXPECT_EQ(d.range, ValueRange::parse("2^16"));

  ASSERT_EQ(run({"gen", "--m", "8", "--r", "2", "--seed", "1", "--mode",
                 "one-hot", "--out", a}).code, kExitOk);
  std::uint64_t ones = 0;
  for (std::uint64_t v : read_dataset(a).values) ones += v;
  EXPECT_EQ(ones, 1u);

  EXPECT_EQ(run({"gen", "--m", "8", "--out", "/nonexistent/dir/x.bin"}).code, kExitIo);
  EXPECT_EQ(run({"gen", "--m", "8", "--mode", "sparse", "--out", a}).code, kExitUsage);
  fs::remove(a);
  fs::remove(b);
}

TEST(CliSearch, WorkedExampleText) {
  const CliRun r = run({"search", worked_dataset(), "9"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("i* = 4\n"), std::string::npos);
  EXPECT_NE(r.out.find("coreset (p, i_p): 7 primes"), std::string::npos);
  EXPECT_NE(r.out.find("  11 4\n"), std::string::npos);
  EXPECT_NE(r.out.find("max_degree="), std::string::npos);
  EXPECT_NE(r.out.find("wall_ms: "), std::string::npos);
}

TEST(CliSearch, AbsentLookupStillEmitsCoreset) {
  const CliRun r = run({"search", worked_dataset(), "6", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["index"], 0);
  EXPECT_TRUE(j["witness_prime"].is_null());
  EXPECT_EQ(j["coreset"].size(), 7u);
}

TEST(CliSearch, JsonMatchesGolden) {
  for (const auto& [flags, file] :
       std::vector<std::pair<std::vector<std::string>, std::string>>{
           {{}, "search_worked.json"},
           {{"--with-value"}, "search_worked_with_value.json"},
           {{"--mode", "hamming", "--threshold", "1"}, "search_worked_hamming.json"}}) {
    std::vector<std::string> args{"search", worked_dataset(), "9", "--json"};
    args.insert(args.end(), flags.begin(), flags.end());
    const CliRun r = run(args);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    auto got = nlohmann::ordered_json::parse(r.out);
    ASSERT_TRUE(got["wall_ms"].is_number());
    got.erase("wall_ms");
    const auto want = nlohmann::ordered_json::parse(golden(file));
    EXPECT_EQ(got, want) << file << "\n" << got.dump(2);
    EXPECT_EQ(got.dump(), want.dump()) << "key order changed in " << file;
  }
}

TEST(CliSearch, HammingZeroEqualsExact) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    DatasetFile d;
    d.range = ValueRange::from_count(trial % 2 ? 16 : 256);
    d.values.resize(1 + rng() % 120);
    for (auto& v : d.values) v = rng() % (d.range.max_value() + 1);
    const std::uint64_t lookup = rng() % 2 ? d.values[rng() % d.values.size()]
                                           : rng() % (d.range.max_value() + 1);
    const SearchReport exact = run_search(d, lookup, "exact", 0, false);
    const SearchReport ham = run_search(d, lookup, "hamming", 0, false);
    ASSERT_EQ(exact.result.index, ham.result.index);
    ASSERT_EQ(exact.result.index, spirit_test::first_match(d.values, lookup));
  }
}

TEST(CliSearch, ErrorsMapToExitCodes) {
  const std::string data = worked_dataset();
  CliRun r = run({"search", data, "16"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("LookupOutOfRange"), std::string::npos) << r.err;
  EXPECT_EQ(run({"search", data, "nine"}).code, kExitUsage);
  EXPECT_EQ(run({"search", data, "9", "--mode", "hamming", "--threshold", "5"}).code,
            kExitUsage);
  EXPECT_EQ(run({"search", "/nonexistent/x.bin", "9"}).code, kExitIo);

  const std::string bad = temp_path("bad.bin");
  std::ofstream(bad, std::ios::binary) << "not a dataset";
  r = run({"search", bad, "1"});
  EXPECT_EQ(r.code, kExitIo);
  EXPECT_NE(r.err.find("MalformedFile"), std::string::npos) << r.err;
  fs::remove(bad);

  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"search"}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(CliVerify, FixedSuiteAndFault) {
  CliRun r = run({"verify", "--trials", "0"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("failures: 0"), std::string::npos);
  EXPECT_NE(r.out.find("PASS"), std::string::npos);

  r = run({"verify", "--trials", "30", "--max-m", "200", "--r", "2^8", "--seed", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.out;

  r = run({"verify", "--trials", "20", "--max-m", "64", "--inject-fault"});
  EXPECT_EQ(r.code, kExitVerifyFailed);
  EXPECT_NE(r.out.find("first counterexample: "), std::string::npos);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(CliBench, HeaderMatchesGolden) {
  const CliRun r = run({"bench", "--m-list", "8"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(split_lines(r.out).front() + "\n", golden("bench_header.csv"));
  EXPECT_EQ(std::string(kBenchHeader) + "\n", golden("bench_header.csv"));
}

TEST(CliBench, ColumnsAreConsistent) {
  const std::string csv = temp_path("bench.csv");
  const std::vector<std::string> args{"bench", "--m-list", "60,61,62,63,64,65,66,67,68,69,70",
                                      "--r", "256", "--csv", csv};
  ASSERT_EQ(run(args).code, kExitOk);
  const auto first = split_lines(slurp(csv));
  ASSERT_EQ(run(args).code, kExitOk);
  const auto second = split_lines(slurp(csv));
  ASSERT_EQ(first.size(), 12u);
  ASSERT_EQ(second.size(), first.size());

  const auto steps = step_points(60, 70);
  std::uint64_t prev_degree = 0;
  for (std::size_t i = 1; i < first.size(); ++i) {
    auto a = split_csv(first[i]);
    auto b = split_csv(second[i]);
    ASSERT_EQ(a.size(), 10u);
    a[4] = b[4] = "";  // wall_ms
    EXPECT_EQ(a, b);
    const std::uint64_t m = std::stoull(a[0]);
    const PrimeSet ps = protocol_primes(m);
    EXPECT_EQ(a[1], "256");
    EXPECT_EQ(std::stoull(a[2]), ps.largest());
    EXPECT_EQ(std::stoull(a[3]), ps.count());
    const std::uint64_t q = (ps.largest() - 1) * (ps.largest() - 1);
    const std::uint64_t degree = std::stoull(a[8]);
    EXPECT_EQ(degree, 2 * 8 * q);
    EXPECT_EQ(a[9], "plaintext-zp");
    if (i > 1) {
      const bool step = std::find(steps.begin(), steps.end(), m) != steps.end();
      EXPECT_EQ(degree != prev_degree, step) << "m=" << m;
    }
    prev_degree = degree;
  }
  EXPECT_FALSE(steps.empty());
  fs::remove(csv);
}

TEST(CliEstimate, ReferenceConstants) {
  const CliRun r = run({"estimate", "--m", "255844736", "--r", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.find("MUL term"), std::string::npos);
  const auto lines = split_lines(r.out);
  const std::string last = lines.back();
  ASSERT_EQ(last.rfind("predicted: ", 0), 0u);
  const double seconds = std::stod(last.substr(11));
  const double want = (32767.0 * 16 * 0.123 + 2 * 32767.0 * 695.690) / 1000.0;
  EXPECT_NEAR(seconds, want, 0.005);
  EXPECT_NEAR(seconds, 45659.0, 45659.0 * 1e-3);
  EXPECT_NE(r.out.find("n = 32767\n"), std::string::npos);
  // Exactly two decimals.
  EXPECT_EQ(last.size() - last.find('.') - 1, 4u);  // "dd s"
}

TEST(CliEstimate, BaseCaseAndMulTerm) {
  CliRun r = run({"estimate", "--m", "7808"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("predicted: 1.39 s"), std::string::npos) << r.out;

  r = run({"estimate", "--m", "10", "--r", "2^16", "--cores", "1", "--simd", "1",
           "--add-ms", "1", "--mul-ms", "10", "--ispos-ms", "100"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("MUL term: 0.16 s"), std::string::npos) << r.out;
  // 10 * 5 * 1 + 16 * 10 + 20 * 100 = 2210 ms.
  EXPECT_NE(r.out.find("predicted: 2.21 s"), std::string::npos) << r.out;

  EXPECT_EQ(run({"estimate", "--m", "10", "--cores", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"estimate"}).code, kExitUsage);
}

}  // namespace
}  // namespace spirit::cli
