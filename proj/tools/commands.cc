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

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "spirit/error.h"
#include "spirit/match.h"
#include "spirit/modring.h"
#include "spirit/verify.h"

namespace spirit::cli {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                what + " is not an unsigned 64-bit integer: " + text);
  }
  return v;
}

std::vector<std::uint64_t> parse_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_u64(item, "m"));
  if (out.empty()) throw Error(ErrorCode::kInvalidArgument, "empty m-list");
  return out;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kIoError:
    case ErrorCode::kMalformedFile:
      return kExitIo;
    default:
      return kExitUsage;
  }
}

std::uint64_t sum_mul(const SearchResult& r) { return r.metrics.mul_count; }

}  // namespace

SearchReport run_search(const DatasetFile& data, std::uint64_t lookup,
                        const std::string& mode, unsigned threshold,
                        bool with_value) {
  SearchReport report;
  report.input.cost = data.values;
  report.input.range = data.range;
  report.input.lookup = lookup;
  report.mode = mode;
  report.threshold = threshold;
  report.with_value = with_value;
  SearchOptions options;
  options.with_value = with_value;
  if (mode == "hamming") {
    options.match = hamming_match(threshold, data.range.bits());
  } else if (mode != "exact") {
    throw Error(ErrorCode::kInvalidArgument, "unknown mode " + mode);
  }
  const auto start = Clock::now();
  report.result = secure_search(report.input, options);
  report.wall_ms = ms_since(start);
  return report;
}

std::string search_json(const SearchReport& report) {
  const SearchResult& res = report.result;
  nlohmann::ordered_json j;
  j["schema"] = kSearchSchema;
  j["m"] = report.input.m();
  j["r"] = report.input.range.to_string();
  j["lookup"] = report.input.lookup;
  j["mode"] = report.mode;
  j["threshold"] = report.threshold;
  j["with_value"] = report.with_value;
  j["index"] = res.index;
  j["witness_prime"] =
      res.witness_prime ? nlohmann::ordered_json(*res.witness_prime) : nullptr;
  if (report.with_value) {
    j["value"] = res.value ? nlohmann::ordered_json(*res.value) : nullptr;
  }
  nlohmann::ordered_json items = nlohmann::ordered_json::array();
  for (const auto& item : res.coreset.items) {
    nlohmann::ordered_json e;
    e["p"] = item.prime;
    e["i_p"] = item.index;
    e["bits"] = item.bits;
    if (report.with_value) {
      e["value"] = item.value ? nlohmann::ordered_json(*item.value) : nullptr;
      e["found"] = item.found ? nlohmann::ordered_json(*item.found) : nullptr;
    }
    items.push_back(std::move(e));
  }
  j["coreset"] = std::move(items);
  j["metrics"] = {{"mul", res.metrics.mul_count},
                  {"add", res.metrics.add_count},
                  {"ispos", res.metrics.ispos_calls},
                  {"max_degree", res.metrics.max_degree},
                  {"log2_ops", res.metrics.log2_ops()}};
  j["batch_calls"] = res.batch_calls;
  j["wall_ms"] = report.wall_ms;
  return j.dump(2) + "\n";
}

std::string search_text(const SearchReport& report) {
  const SearchResult& res = report.result;
  std::ostringstream os;
  os << "i* = " << res.index << "\n";
  if (res.witness_prime) os << "witness prime: " << *res.witness_prime << "\n";
  if (report.with_value) {
    os << "value: " << (res.value ? std::to_string(*res.value) : "none") << "\n";
  }
  os << "coreset (p, i_p): " << res.coreset.items.size() << " primes\n";
  for (const auto& item : res.coreset.items) {
    os << "  " << item.prime << " " << item.index << "\n";
  }
  os << "metered: mul=" << sum_mul(res) << " add=" << res.metrics.add_count
     << " ispos=" << res.metrics.ispos_calls
     << " max_degree=" << res.metrics.max_degree
     << " log2_ops=" << fixed(res.metrics.log2_ops(), 2) << "\n";
  os << "wall_ms: " << fixed(report.wall_ms, 3) << "\n";
  return os.str();
}

BenchRecord bench_point(std::uint64_t m, ValueRange r, std::uint64_t seed) {
  const bool binary = r.max_value() == 1;
  DatasetFile data =
      gen_dataset(m, r, seed, binary ? GenMode::kOneHot : GenMode::kUniform);
  SearchInput inp;
  inp.cost = std::move(data.values);
  inp.range = r;
  if (binary) {
    inp.lookup = 1;
  } else {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    inp.lookup = inp.cost[std::uniform_int_distribution<std::uint64_t>(
        0, m - 1)(rng)];
  }
  const auto start = Clock::now();
  const SearchResult res = secure_search(inp);
  BenchRecord rec;
  rec.wall_ms = ms_since(start);
  rec.m = m;
  rec.r = r;
  rec.p_max = res.primes.largest();
  rec.k = res.primes.count();
  rec.mul = res.metrics.mul_count;
  rec.add = res.metrics.add_count;
  rec.ispos = res.metrics.ispos_calls;
  rec.max_degree = res.metrics.max_degree;
  rec.backend = PlaintextBackend(2).id();
  return rec;
}

std::string bench_csv_row(const BenchRecord& rec) {
  std::ostringstream os;
  os << rec.m << "," << rec.r.to_string() << "," << rec.p_max << "," << rec.k
     << "," << fixed(rec.wall_ms, 3) << "," << rec.mul << "," << rec.add << ","
     << rec.ispos << "," << rec.max_degree << "," << rec.backend;
  return os.str();
}

std::string estimate_text(std::uint64_t m, ValueRange r,
                          const CostParams& params) {
  const CostBreakdown t = estimate_time(m, r, params);
  std::ostringstream os;
  os << "n = " << t.n << "\n";
  os << "ADD term: " << fixed(t.add_term_ms / 1000.0, 2) << " s\n";
  if (r.ceil_log2() > 0) {
    os << "MUL term: " << fixed(t.mul_term_ms / 1000.0, 2) << " s\n";
  }
  os << "ISPOS term: " << fixed(t.ispos_term_ms / 1000.0, 2) << " s\n";
  os << "predicted: " << fixed(t.total_ms() / 1000.0, 2) << " s\n";
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Search over an encrypted column with a first-match sketch", "spirit"};
  app.require_subcommand(1);

  std::uint64_t m = 0;
  std::string r_text = "2";
  std::uint64_t seed = 1;
  std::string gen_mode = "uniform";
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Write a pseudo-random dataset");
  gen->add_option("--m", m, "Column length")->required();
  gen->add_option("--r", r_text, "Value range: decimal or 2^k");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--mode", gen_mode, "one-hot | uniform")
      ->check(CLI::IsMember({"one-hot", "uniform"}));
  gen->add_option("--out", out_path, "Output path")->required();

  SearchFlags sf;
  auto* search = app.add_subcommand("search", "Search a dataset for a value");
  search->add_option("data", sf.data_path, "Dataset path")->required();
  search->add_option("lookup", sf.lookup, "Lookup value")->required();
  search->add_option("--mode", sf.mode, "exact | hamming")
      ->check(CLI::IsMember({"exact", "hamming"}));
  search->add_option("--threshold", sf.threshold, "Hamming threshold h");
  search->add_flag("--with-value", sf.with_value, "Also retrieve the value");
  search->add_flag("--json", sf.json, "JSON report");

  VerifyConfig vc;
  std::string verify_r = "2";
  auto* verify = app.add_subcommand("verify", "Compare against a linear scan");
  verify->add_option("--trials", vc.trials, "Random instances");
  verify->add_option("--max-m", vc.max_m, "Largest column length");
  verify->add_option("--r", verify_r, "Value range");
  verify->add_option("--seed", vc.seed, "RNG seed");
  verify->add_flag("--inject-fault", vc.inject_fault,
                   "Flip one sketch-matrix bit");

  std::string m_list = "8,64,512,4096";
  std::string bench_r = "2";
  std::string csv_path;
  std::uint64_t bench_seed = 1;
  auto* bench = app.add_subcommand("bench", "Metered runs written as CSV");
  bench->add_option("--m-list", m_list, "Comma-separated lengths");
  bench->add_option("--r", bench_r, "Value range");
  bench->add_option("--seed", bench_seed, "RNG seed");
  bench->add_option("--csv", csv_path, "Output path (default stdout)");

  CostParams cp;
  std::uint64_t est_m = 0;
  std::string est_r = "1";
  auto* estimate = app.add_subcommand("estimate", "Predicted running time");
  estimate->add_option("--m", est_m, "Column length")->required();
  estimate->add_option("--r", est_r, "Value range");
  estimate->add_option("--cores", cp.cores, "Machines");
  estimate->add_option("--simd", cp.simd, "Slots per ciphertext");
  estimate->add_option("--add-ms", cp.add_ms, "ADD time");
  estimate->add_option("--mul-ms", cp.mul_ms, "MUL time");
  estimate->add_option("--ispos-ms", cp.ispos_ms, "isPositive time");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*gen) {
      const GenMode mode =
          gen_mode == "one-hot" ? GenMode::kOneHot : GenMode::kUniform;
      write_dataset(out_path, gen_dataset(m, ValueRange::parse(r_text), seed, mode));
      out << "wrote " << out_path << " (m=" << m << ", r=" << r_text
          << ", seed=" << seed << ")\n";
      return kExitOk;
    }
    if (*search) {
      const DatasetFile data = read_dataset(sf.data_path);
      const SearchReport rep =
          run_search(data, parse_u64(sf.lookup, "lookup"), sf.mode,
                     sf.threshold, sf.with_value);
      out << (sf.json ? search_json(rep) : search_text(rep));
      return kExitOk;
    }
    if (*verify) {
      vc.range = ValueRange::parse(verify_r);
      const VerifyReport rep = run_verification(vc);
      out << "instances: " << rep.instances
          << " witnesses: " << rep.witnesses_checked
          << " failures: " << rep.failures << "\n";
      if (rep.first_counterexample) {
        out << "first counterexample: " << *rep.first_counterexample << "\n";
      }
      out << (rep.ok() ? "PASS" : "FAIL") << "\n";
      return rep.ok() ? kExitOk : kExitVerifyFailed;
    }
    if (*bench) {
      const ValueRange r = ValueRange::parse(bench_r);
      std::ofstream file;
      std::ostream* sink = &out;
      if (!csv_path.empty()) {
        file.open(csv_path, std::ios::trunc);
        if (!file) {
          throw Error(ErrorCode::kIoError, "cannot open " + csv_path);
        }
        sink = &file;
      }
      *sink << kBenchHeader << "\n";
      for (std::uint64_t mi : parse_list(m_list)) {
        *sink << bench_csv_row(bench_point(mi, r, bench_seed)) << "\n";
      }
      sink->flush();
      if (!*sink) throw Error(ErrorCode::kIoError, "cannot write " + csv_path);
      return kExitOk;
    }
    if (*estimate) {
      out << estimate_text(est_m, ValueRange::parse(est_r), cp);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return kExitUsage;
}

}  // namespace spirit::cli
