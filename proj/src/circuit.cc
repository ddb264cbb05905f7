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

#include "spirit/circuit.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "spirit/error.h"
#include "spirit/modring.h"

namespace spirit {

RingSpec::RingSpec(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31)) {
    throw Error(ErrorCode::kInvalidArgument,
                "ring modulus must be in [2, 2^31), got " + std::to_string(p));
  }
  barrett_ = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(1) << 64) / p);
  prime_ = is_prime(p);
}

void EvalMetrics::merge(const EvalMetrics& other) {
  mul_count += other.mul_count;
  add_count += other.add_count;
  ispos_calls += other.ispos_calls;
  max_degree = std::max(max_degree, other.max_degree);
}

double EvalMetrics::log2_ops() const {
  const double ops = static_cast<double>(mul_count + add_count);
  return ops > 0 ? std::log2(ops) : 0.0;
}

MeteredVector::MeteredVector(std::initializer_list<MeteredValue> elems) {
  values_.reserve(elems.size());
  degrees_.reserve(elems.size());
  for (const MeteredValue& v : elems) {
    if (values_.empty()) {
      modulus_ = v.modulus_;
    } else if (v.modulus_ != modulus_) {
      throw Error(ErrorCode::kRingMismatch,
                  "elements from Z_" + std::to_string(modulus_) + " and Z_" +
                      std::to_string(v.modulus_));
    }
    values_.push_back(v.value_);
    degrees_.push_back(v.degree_);
  }
}

std::uint64_t MeteredVector::max_degree() const {
  std::uint64_t d = 0;
  for (std::uint64_t x : degrees_) d = std::max(d, x);
  return d;
}

MeteredVector MeteredVector::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "slice [" + std::to_string(begin) + ", " + std::to_string(end) +
                    ") of a length-" + std::to_string(size()) + " vector");
  }
  MeteredVector out;
  out.modulus_ = modulus_;
  out.values_.assign(values_.begin() + begin, values_.begin() + end);
  out.degrees_.assign(degrees_.begin() + begin, degrees_.begin() + end);
  return out;
}

void MeteredVector::append(const MeteredVector& tail) {
  if (tail.empty()) return;
  if (empty()) {
    modulus_ = tail.modulus_;
  } else if (tail.modulus_ != modulus_) {
    throw Error(ErrorCode::kRingMismatch,
                "cannot join Z_" + std::to_string(modulus_) + " and Z_" +
                    std::to_string(tail.modulus_) + " vectors");
  }
  values_.insert(values_.end(), tail.values_.begin(), tail.values_.end());
  degrees_.insert(degrees_.end(), tail.degrees_.begin(), tail.degrees_.end());
}

MeteredVector PlaintextBackend::lift(std::span<const std::uint64_t> plain,
                                     std::uint64_t deg) {
  MeteredVector out;
  const auto p = static_cast<std::uint32_t>(ring_.modulus());
  out.modulus_ = p;
  out.values_.resize(plain.size());
  for (std::size_t i = 0; i < plain.size(); ++i) {
    const std::uint64_t v = plain[i];
    out.values_[i] = static_cast<std::uint32_t>(v < p ? v : ring_.reduce(v));
  }
  out.degrees_.assign(plain.size(), deg);
  if (!plain.empty()) metrics_.max_degree = std::max(metrics_.max_degree, deg);
  return out;
}

MeteredVector PlaintextBackend::encrypt(std::span<const std::uint64_t> plain) {
  return lift(plain, 1);
}

MeteredVector PlaintextBackend::constant(
    std::span<const std::uint64_t> plain) {
  return lift(plain, 0);
}

void PlaintextBackend::check_ring(const MeteredVector& a) const {
  const std::uint64_t p = ring_.modulus();
  if (!a.empty() && a.modulus_ != p) {
    throw Error(ErrorCode::kRingMismatch,
                "operand lives in Z_" + std::to_string(a.modulus_) +
                    ", backend ring is Z_" + std::to_string(p));
  }
}

void PlaintextBackend::check_operands(const MeteredVector& a,
                                      const MeteredVector& b) const {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "operand lengths " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
  check_ring(a);
  check_ring(b);
}

void PlaintextBackend::note_degrees(const MeteredVector& out) {
  metrics_.max_degree = std::max(metrics_.max_degree, out.max_degree());
}

// Output skeleton for a slot-wise op: ring set, degrees combined by max
// (additive ops) or sum (products), values left for the caller.
MeteredVector PlaintextBackend::combined_degrees(const MeteredVector& a,
                                                 const MeteredVector& b,
                                                 bool sum) {
  check_operands(a, b);
  const std::size_t n = a.size();
  MeteredVector out;
  out.modulus_ = static_cast<std::uint32_t>(ring_.modulus());
  out.values_.resize(n);
  out.degrees_.resize(n);
  const std::uint64_t* da = a.degrees_.data();
  const std::uint64_t* db = b.degrees_.data();
  std::uint64_t* d = out.degrees_.data();
  std::uint64_t top = metrics_.max_degree;
  if (sum) {
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = da[i] + db[i];
      top = std::max(top, d[i]);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = std::max(da[i], db[i]);
      top = std::max(top, d[i]);
    }
  }
  metrics_.max_degree = top;
  return out;
}

MeteredVector PlaintextBackend::add(const MeteredVector& a,
                                    const MeteredVector& b) {
  MeteredVector out = combined_degrees(a, b, false);
  const std::uint32_t p = out.modulus_;
  const std::uint32_t* va = a.values_.data();
  const std::uint32_t* vb = b.values_.data();
  std::uint32_t* v = out.values_.data();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint32_t s = va[i] + vb[i];
    v[i] = s >= p ? s - p : s;
  }
  metrics_.add_count += a.size();
  return out;
}

MeteredVector PlaintextBackend::sub(const MeteredVector& a,
                                    const MeteredVector& b) {
  MeteredVector out = combined_degrees(a, b, false);
  const std::uint32_t p = out.modulus_;
  const std::uint32_t* va = a.values_.data();
  const std::uint32_t* vb = b.values_.data();
  std::uint32_t* v = out.values_.data();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint32_t s = va[i] + (p - vb[i]);
    v[i] = s >= p ? s - p : s;
  }
  metrics_.add_count += a.size();
  return out;
}

MeteredVector PlaintextBackend::mul(const MeteredVector& a,
                                    const MeteredVector& b) {
  MeteredVector out = combined_degrees(a, b, true);
  const std::uint32_t* va = a.values_.data();
  const std::uint32_t* vb = b.values_.data();
  std::uint32_t* v = out.values_.data();
  for (std::size_t i = 0; i < a.size(); ++i) {
    v[i] = static_cast<std::uint32_t>(
        ring_.reduce(static_cast<std::uint64_t>(va[i]) * vb[i]));
  }
  metrics_.mul_count += a.size();
  return out;
}

MeteredVector PlaintextBackend::linear_map(const SparseBinaryMatrix& m,
                                           const MeteredVector& x) {
  if (x.size() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "matrix has " + std::to_string(m.cols()) +
                    " columns, vector has " + std::to_string(x.size()));
  }
  check_ring(x);
  const auto p = static_cast<std::uint32_t>(ring_.modulus());
  MeteredVector out;
  out.modulus_ = p;
  out.values_.resize(m.rows());
  out.degrees_.resize(m.rows());
  const std::uint32_t* xv = x.values_.data();
  const std::uint64_t* xd = x.degrees_.data();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::uint32_t acc = 0;
    std::uint64_t deg = 0;
    for (const auto& e : m.row(r)) {
      acc += e.sign > 0 ? xv[e.col] : p - xv[e.col];
      if (acc >= p) acc -= p;
      deg = std::max(deg, xd[e.col]);
    }
    out.values_[r] = acc;
    out.degrees_[r] = deg;
  }
  metrics_.add_count += m.nnz();
  note_degrees(out);
  return out;
}

MeteredVector PlaintextBackend::is_positive(const MeteredVector& x) {
  if (!ring_.prime()) {
    throw Error(ErrorCode::kNonPrimeModulus,
                "zero test needs a prime modulus, got " +
                    std::to_string(ring_.modulus()));
  }
  check_ring(x);
  // Left-to-right square-and-multiply on the exponent p - 1, run per slot.
  // Every squaring and every multiply by x is metered as one product, so the
  // counts match the slot-wise circuit and the degree ends at deg * (p - 1).
  const std::uint64_t e = ring_.modulus() - 1;
  const int top = std::bit_width(e) - 2;
  const std::uint64_t steps =
      static_cast<std::uint64_t>(top + 1) + std::popcount(e) - 1;
  MeteredVector out;
  out.modulus_ = static_cast<std::uint32_t>(ring_.modulus());
  out.values_.resize(x.size());
  out.degrees_.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::uint64_t base = x.values_[i];
    std::uint64_t acc = base;
    for (int bit = top; bit >= 0; --bit) {
      acc = ring_.reduce(acc * acc);
      if ((e >> bit) & 1) acc = ring_.reduce(acc * base);
    }
    out.values_[i] = static_cast<std::uint32_t>(acc);
    out.degrees_[i] = x.degrees_[i] * e;
  }
  metrics_.mul_count += steps * x.size();
  metrics_.ispos_calls += x.size();
  note_degrees(out);
  return out;
}

std::vector<std::uint64_t> PlaintextBackend::decrypt(
    const MeteredVector& x) const {
  check_ring(x);
  return std::vector<std::uint64_t>(x.values_.begin(), x.values_.end());
}

MeteredValue ring_add(Backend& be, const MeteredValue& a,
                      const MeteredValue& b) {
  return be.add(MeteredVector{a}, MeteredVector{b}).front();
}

MeteredValue ring_sub(Backend& be, const MeteredValue& a,
                      const MeteredValue& b) {
  return be.sub(MeteredVector{a}, MeteredVector{b}).front();
}

MeteredValue ring_mul(Backend& be, const MeteredValue& a,
                      const MeteredValue& b) {
  return be.mul(MeteredVector{a}, MeteredVector{b}).front();
}

MeteredVector is_positive(Backend& be, const MeteredVector& x) {
  return be.is_positive(x);
}

MeteredVector fill_constant(Backend& be, std::size_t n, std::uint64_t c) {
  std::vector<std::uint64_t> plain(n, c);
  return be.constant(plain);
}

MeteredVector is_eq_slots(Backend& be, std::span<const MeteredVector> a,
                          std::span<const MeteredVector> b) {
  if (a.empty() || a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "is_eq needs t >= 1 planes on both sides, got " +
                    std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
  const MeteredVector ones = fill_constant(be, a.front().size(), 1);
  MeteredVector acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    MeteredVector diff = be.sub(a[i], b[i]);
    MeteredVector same = be.sub(ones, be.mul(diff, diff));
    acc = i == 0 ? std::move(same) : be.mul(acc, same);
  }
  return acc;
}

MeteredValue is_eq(Backend& be, std::span<const MeteredValue> a,
                   std::span<const MeteredValue> b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "bit vectors of length " + std::to_string(a.size()) +
                    " and " + std::to_string(b.size()));
  }
  std::vector<MeteredVector> pa, pb;
  for (const auto& v : a) pa.push_back(MeteredVector{v});
  for (const auto& v : b) pb.push_back(MeteredVector{v});
  return is_eq_slots(be, pa, pb).front();
}

MeteredVector mat_vec(Backend& be, const SparseBinaryMatrix& m,
                      const MeteredVector& x) {
  return be.linear_map(m, x);
}

}  // namespace spirit
