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

#include "spirit/verify.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "spirit/parallel.h"

namespace spirit {
namespace {

std::string describe(const SearchInput& inp) {
  std::ostringstream os;
  os << "m=" << inp.m() << " r=" << inp.range.to_string()
     << " lookup=" << inp.lookup << " cost=(";
  const std::size_t shown = std::min<std::size_t>(inp.m(), 32);
  for (std::size_t i = 0; i < shown; ++i) os << (i ? "," : "") << inp.cost[i];
  if (shown < inp.m()) os << ",...";
  os << ")";
  return os.str();
}

SearchInput random_instance(std::mt19937_64& rng, std::uint64_t max_m,
                            ValueRange r) {
  std::uniform_int_distribution<std::uint64_t> size(1, max_m);
  std::uniform_int_distribution<std::uint64_t> value(0, r.max_value());
  SearchInput inp;
  inp.range = r;
  inp.cost.resize(size(rng));
  for (auto& v : inp.cost) v = value(rng);
  // Reuse a stored value half the time so matches are common for large r.
  if (rng() & 1) {
    std::uniform_int_distribution<std::size_t> at(0, inp.cost.size() - 1);
    inp.lookup = inp.cost[at(rng)];
  } else {
    inp.lookup = value(rng);
  }
  return inp;
}

// Returns a failure description, or nothing when the instance passes.
std::optional<std::string> check_instance(const SearchInput& inp,
                                          const SearchOptions& options,
                                          std::uint64_t* witnesses) {
  const std::uint64_t expected = linear_scan_oracle(inp.cost, inp.lookup);
  const SearchResult got = secure_search(inp, options);
  if (got.index != expected) {
    return describe(inp) + ": secure_search=" + std::to_string(got.index) +
           " oracle=" + std::to_string(expected);
  }
  const std::uint64_t bound = exact_match()->degree(inp.bits());
  for (const auto& w : got.witnesses) {
    if (auto bad = check_witness_degrees(w, inp.range, bound)) {
      return describe(inp) + ": " + *bad;
    }
  }
  *witnesses += got.witnesses.size();
  return std::nullopt;
}

}  // namespace

std::uint64_t linear_scan_oracle(std::span<const std::uint64_t> cost,
                                 std::uint64_t lookup,
                                 const MatchPredicate& match) {
  for (std::size_t i = 0; i < cost.size(); ++i) {
    if (match.accepts(cost[i], lookup)) return i + 1;
  }
  return 0;
}

std::uint64_t linear_scan_oracle(std::span<const std::uint64_t> cost,
                                 std::uint64_t lookup) {
  return linear_scan_oracle(cost, lookup, *exact_match());
}

std::vector<NamedInstance> adversarial_suite(ValueRange r) {
  const std::uint64_t hit = r.max_value();
  const std::uint64_t miss = hit == 0 ? 0 : hit - 1;
  std::vector<NamedInstance> out;
  for (std::size_t m : {1u, 2u, 3u, 7u, 8u, 9u, 64u, 100u}) {
    auto make = [&](std::string name, std::vector<std::uint64_t> cost) {
      SearchInput inp;
      inp.range = r;
      inp.lookup = hit;
      inp.cost = std::move(cost);
      out.push_back({name + " m=" + std::to_string(m), std::move(inp)});
    };
    std::vector<std::uint64_t> base(m, miss);
    auto first = base;
    first.front() = hit;
    make("match at 1", first);
    auto last = base;
    last.back() = hit;
    make("match at m", last);
    if (m >= 3) {
      auto dup = base;
      dup[m / 2] = hit;
      dup[m / 2 + 1] = hit;
      dup.back() = hit;
      make("duplicates", dup);
    }
    make("all match", std::vector<std::uint64_t>(m, hit));
    if (hit != miss) make("no match", base);
  }
  return out;
}

std::optional<std::string> check_witness_degrees(
    const WitnessResult& w, ValueRange r, std::uint64_t indicator_degree_bound) {
  const std::uint64_t q = (w.prime - 1) * (w.prime - 1);
  const std::uint64_t t = std::max(1u, r.ceil_log2());
  const std::string at = "p=" + std::to_string(w.prime) + ": ";
  if (w.search_max_degree > 2 * t * q) {
    return at + "max_degree " + std::to_string(w.search_max_degree) +
           " exceeds " + std::to_string(2 * t * q);
  }
  const std::uint64_t expected_total =
      w.value_degree ? std::max(w.search_max_degree, *w.value_degree)
                     : w.search_max_degree;
  if (w.metrics.max_degree != expected_total) {
    return at + "max_degree " + std::to_string(w.metrics.max_degree) +
           " not accounted for by the search and value stages";
  }
  if (w.value_degree && *w.value_degree != w.indicator_degree * q + 1) {
    return at + "value stage degree " + std::to_string(*w.value_degree) +
           " != indicator * (p-1)^2 + 1";
  }
  if (w.indicator_degree == 0 || w.indicator_degree > indicator_degree_bound) {
    return at + "indicator degree " + std::to_string(w.indicator_degree);
  }
  if (!w.bits.empty() && w.bits_degree != w.indicator_degree * q) {
    return at + "sketch stage degree " + std::to_string(w.bits_degree) +
           " != " + std::to_string(w.indicator_degree) + " * (p-1)^2";
  }
  if (w.linear_stage_muls != 0) {
    return at + std::to_string(w.linear_stage_muls) +
           " multiplications metered inside linear maps";
  }
  return std::nullopt;
}

MatrixSource faulty_matrix_source() {
  auto cache = std::make_shared<
      std::pair<std::mutex, std::map<std::size_t,
                                     std::shared_ptr<const SpiritMatrices>>>>();
  return [cache](std::size_t m) {
    std::lock_guard<std::mutex> lock(cache->first);
    auto& slot = cache->second[m];
    if (!slot) {
      auto mats = std::make_shared<SpiritMatrices>(*spirit_matrices(m));
      if (mats->sketch.rows() > 0 && mats->sketch.cols() > 0) {
        mats->sketch = mats->sketch.with_flipped_bit(0, 0);
      }
      slot = std::move(mats);
    }
    return slot;
  };
}

VerifyReport run_verification(const VerifyConfig& config) {
  SearchOptions options;
  if (config.inject_fault) options.matrices = faulty_matrix_source();

  std::vector<SearchInput> instances;
  for (auto& named : adversarial_suite(config.range)) {
    instances.push_back(std::move(named.input));
  }
  std::mt19937_64 rng(config.seed);
  const std::uint64_t max_m = std::max<std::uint64_t>(1, config.max_m);
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    instances.push_back(random_instance(rng, max_m, config.range));
  }

  std::vector<std::optional<std::string>> outcome(instances.size());
  std::vector<std::uint64_t> witnesses(instances.size(), 0);
  parallel_for(instances.size(), [&](std::size_t i) {
    outcome[i] = check_instance(instances[i], options, &witnesses[i]);
  });

  VerifyReport report;
  report.instances = instances.size();
  for (std::size_t i = 0; i < instances.size(); ++i) {
    report.witnesses_checked += witnesses[i];
    if (outcome[i]) {
      ++report.failures;
      if (!report.first_counterexample) report.first_counterexample = outcome[i];
    }
  }
  return report;
}

}  // namespace spirit
