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

#include "spirit/modring.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <string>

#include "spirit/error.h"

namespace spirit {
namespace {

std::map<std::uint64_t, std::uint64_t> factorize(std::uint64_t n) {
  std::map<std::uint64_t, std::uint64_t> factors;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      ++factors[d];
      n /= d;
    }
  }
  if (n > 1) ++factors[n];
  return factors;
}

// m^s == b^k, without forming the powers.
bool powers_equal(std::uint64_t m, std::uint64_t s, std::uint64_t b,
                  std::uint64_t k) {
  auto fm = factorize(m);
  auto fb = factorize(b);
  if (fm.size() != fb.size()) return false;
  for (const auto& [q, e] : fm) {
    auto it = fb.find(q);
    if (it == fb.end() || e * s != it->second * k) return false;
  }
  return true;
}

// Sieve of Eratosthenes over [0, limit].
std::vector<bool> sieve(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  composite[0] = true;
  if (limit >= 1) composite[1] = true;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return composite;
}

}  // namespace

std::uint64_t ceil_log2(std::uint64_t x) {
  if (x <= 1) return 0;
  return std::bit_width(x - 1);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> gen_primes_gt(std::uint64_t b, std::size_t count) {
  std::vector<std::uint64_t> out;
  if (count == 0) return out;
  out.reserve(count);
  // x / ln x primes below x; start a little above that and double on miss.
  double want = static_cast<double>(count) + 2.0;
  std::uint64_t limit =
      b + static_cast<std::uint64_t>(want * std::log(want + b + 2.0) * 1.5) + 16;
  for (;;) {
    auto composite = sieve(limit);
    out.clear();
    for (std::uint64_t n = b + 1; n <= limit && out.size() < count; ++n) {
      if (!composite[n]) out.push_back(n);
    }
    if (out.size() == count) return out;
    limit *= 2;
  }
}

std::uint64_t next_prime_above(std::uint64_t b) {
  std::uint64_t n = b + 1;
  while (!is_prime(n)) ++n;
  return n;
}

std::uint64_t prime_threshold(std::uint64_t m) {
  return std::max<std::uint64_t>(2, ceil_log2(m));
}

std::uint64_t prime_count(std::uint64_t m, std::uint64_t s, std::uint64_t b) {
  if (m <= 1 || s == 0) return 1;
  const long double lhs = static_cast<long double>(s) * std::log((long double)m);
  const long double unit = std::log(static_cast<long double>(b));
  const long double x = lhs / unit;
  const long double nearest = std::nearbyint(x);
  std::uint64_t k;
  if (std::fabs(x - nearest) < 1e-9L) {
    const auto n = static_cast<std::uint64_t>(nearest);
    if (powers_equal(m, s, b, n)) {
      k = n;
    } else {
      k = lhs < static_cast<long double>(n) * unit ? n : n + 1;
    }
  } else {
    k = static_cast<std::uint64_t>(std::ceil(x));
  }
  return 1 + k;
}

PrimeSet primes_for_search(std::uint64_t m, std::uint64_t s) {
  if (m < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "primes_for_search needs m >= 2, got " + std::to_string(m));
  }
  PrimeSet ps;
  ps.m = m;
  ps.s = s;
  ps.b = prime_threshold(m);
  ps.primes = gen_primes_gt(ps.b, prime_count(m, s, ps.b));
  return ps;
}

PrimeSet protocol_primes(std::uint64_t m) {
  const std::uint64_t mm = std::max<std::uint64_t>(m, 2);
  return primes_for_search(mm, std::max<std::uint64_t>(1, ceil_log2(mm)));
}

PrimeFamilyKey protocol_family_key(std::uint64_t m) {
  const std::uint64_t mm = std::max<std::uint64_t>(m, 2);
  const std::uint64_t s = std::max<std::uint64_t>(1, ceil_log2(mm));
  const std::uint64_t b = prime_threshold(mm);
  return {next_prime_above(b), prime_count(mm, s, b)};
}

bool is_a_correct(std::uint64_t p, const CorrectnessWitnessSet& a) {
  return std::none_of(a.begin(), a.end(), [p](std::uint64_t v) {
    return v != 0 && v % p == 0;
  });
}

std::uint64_t find_correct_prime(const PrimeSet& ps,
                                 const CorrectnessWitnessSet& a) {
  for (std::uint64_t p : ps.primes) {
    if (is_a_correct(p, a)) return p;
  }
  throw Error(ErrorCode::kNoCorrectPrime,
              "no A-correct prime among " + std::to_string(ps.count()) +
                  " primes for m = " + std::to_string(ps.m));
}

}  // namespace spirit
