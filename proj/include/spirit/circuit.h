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

#ifndef SPIRIT_CIRCUIT_H_
#define SPIRIT_CIRCUIT_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <new>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "spirit/sparse_matrix.h"

namespace spirit {

// The plaintext modulus of the evaluation ring Z_p. Any p >= 2 is accepted
// for ring arithmetic; the zero test (is_positive) additionally needs p
// prime. Moduli are capped below 2^31 so products fit in 64 bits.
class RingSpec {
 public:
  explicit RingSpec(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  bool prime() const { return prime_; }

  std::uint64_t reduce(std::uint64_t x) const {
    const std::uint64_t q = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    return r >= p_ ? r - p_ : r;
  }

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.p_ == b.p_;
  }

 private:
  std::uint64_t p_;
  std::uint64_t barrett_;  // floor(2^64 / p)
  bool prime_;
};

// A ring element as seen by the server: opaque value plus the metered
// multiplicative degree of the polynomial that produced it. There is no
// comparison, division or conversion to an integer; only a Backend can read
// the value back out (the client's decrypt).
class MeteredValue {
 public:
  std::uint64_t degree() const { return degree_; }
  std::uint64_t modulus() const { return modulus_; }

 private:
  friend class PlaintextBackend;
  friend class MeteredVector;

  MeteredValue(std::uint32_t value, std::uint32_t modulus,
               std::uint64_t degree)
      : value_(value), modulus_(modulus), degree_(degree) {}

  std::uint32_t value_;
  std::uint32_t modulus_;
  std::uint64_t degree_;
};

// Allocator whose value-less construct leaves trivial types uninitialized,
// so resizing a slot array before overwriting it skips the zero fill.
template <typename T>
struct DefaultInitAllocator : std::allocator<T> {
  template <typename U>
  struct rebind {
    using other = DefaultInitAllocator<U>;
  };
  using std::allocator<T>::allocator;

  template <typename U>
  void construct(U* ptr) noexcept {
    ::new (static_cast<void*>(ptr)) U;
  }
  template <typename U, typename... Args>
  void construct(U* ptr, Args&&... args) {
    ::new (static_cast<void*>(ptr)) U(std::forward<Args>(args)...);
  }
};

template <typename T>
using SlotArray = std::vector<T, DefaultInitAllocator<T>>;

// A packed vector of ring elements sharing one modulus, the analogue of a
// SIMD ciphertext. Slots are stored as separate value and degree arrays.
class MeteredVector {
 public:
  MeteredVector() = default;
  // Throws kRingMismatch unless all elements share a modulus.
  MeteredVector(std::initializer_list<MeteredValue> elems);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  // 0 for an empty vector.
  std::uint64_t modulus() const { return modulus_; }

  MeteredValue operator[](std::size_t i) const {
    return MeteredValue(values_[i], modulus_, degrees_[i]);
  }
  MeteredValue front() const { return (*this)[0]; }
  std::uint64_t degree(std::size_t i) const { return degrees_[i]; }
  std::uint64_t max_degree() const;

  // Slots [begin, end).
  MeteredVector slice(std::size_t begin, std::size_t end) const;
  // Throws kRingMismatch when both vectors are nonempty in different rings.
  void append(const MeteredVector& tail);

 private:
  friend class PlaintextBackend;

  std::uint32_t modulus_ = 0;
  SlotArray<std::uint32_t> values_;
  SlotArray<std::uint64_t> degrees_;
};

// Operation counters for one evaluation session. Counts are per slot: a
// slot-wise multiplication of two length-n vectors adds n to mul_count, and
// ispos_calls counts zero-tested entries.
struct EvalMetrics {
  std::uint64_t mul_count = 0;
  std::uint64_t add_count = 0;
  std::uint64_t max_degree = 0;
  std::uint64_t ispos_calls = 0;

  void merge(const EvalMetrics& other);
  // log2(mul_count + add_count), the artifact's proxy for polynomial
  // log-size (an upper bound on the monomial count, not an equality).
  double log2_ops() const;

  friend bool operator==(const EvalMetrics&, const EvalMetrics&) = default;
};

// Server-side evaluation backend. It exposes only ring operations: slot-wise
// add/sub/mul, additions-only linear maps, and the Fermat zero test, which a
// homomorphic scheme would provide as a native primitive. Values cannot be
// branched on. encrypt/decrypt are the client's half of the interface.
class Backend {
 public:
  virtual ~Backend() = default;

  virtual std::string_view id() const = 0;
  virtual const RingSpec& ring() const = 0;
  virtual const EvalMetrics& metrics() const = 0;

  // Fresh inputs have degree 1, constants degree 0. Values are reduced.
  virtual MeteredVector encrypt(std::span<const std::uint64_t> plain) = 0;
  virtual MeteredVector constant(std::span<const std::uint64_t> plain) = 0;

  virtual MeteredVector add(const MeteredVector& a, const MeteredVector& b) = 0;
  virtual MeteredVector sub(const MeteredVector& a, const MeteredVector& b) = 0;
  virtual MeteredVector mul(const MeteredVector& a, const MeteredVector& b) = 0;

  // y = M x mod p using additions and subtractions only.
  virtual MeteredVector linear_map(const SparseBinaryMatrix& m,
                                   const MeteredVector& x) = 0;

  // y(i) = x(i)^(p-1) mod p by square-and-multiply. Throws kNonPrimeModulus.
  virtual MeteredVector is_positive(const MeteredVector& x) = 0;

  virtual std::vector<std::uint64_t> decrypt(const MeteredVector& x) const = 0;
};

// Reference backend: plain arithmetic in Z_p with degree metering. Degrees
// follow deg(a+b) = max, deg(a*b) = sum, so they are upper bounds that never
// notice cancellation.
class PlaintextBackend final : public Backend {
 public:
  explicit PlaintextBackend(RingSpec ring) : ring_(ring) {}
  explicit PlaintextBackend(std::uint64_t p) : ring_(p) {}

  std::string_view id() const override { return "plaintext-zp"; }
  const RingSpec& ring() const override { return ring_; }
  const EvalMetrics& metrics() const override { return metrics_; }

  MeteredVector encrypt(std::span<const std::uint64_t> plain) override;
  MeteredVector constant(std::span<const std::uint64_t> plain) override;
  MeteredVector add(const MeteredVector& a, const MeteredVector& b) override;
  MeteredVector sub(const MeteredVector& a, const MeteredVector& b) override;
  MeteredVector mul(const MeteredVector& a, const MeteredVector& b) override;
  MeteredVector linear_map(const SparseBinaryMatrix& m,
                           const MeteredVector& x) override;
  MeteredVector is_positive(const MeteredVector& x) override;
  std::vector<std::uint64_t> decrypt(const MeteredVector& x) const override;

 private:
  MeteredVector lift(std::span<const std::uint64_t> plain, std::uint64_t deg);
  void check_operands(const MeteredVector& a, const MeteredVector& b) const;
  void check_ring(const MeteredVector& a) const;
  void note_degrees(const MeteredVector& out);
  MeteredVector combined_degrees(const MeteredVector& a,
                                 const MeteredVector& b, bool sum);

  RingSpec ring_;
  EvalMetrics metrics_;
};

// Scalar conveniences over the slot-wise backend operations.
MeteredValue ring_add(Backend& be, const MeteredValue& a, const MeteredValue& b);
MeteredValue ring_sub(Backend& be, const MeteredValue& a, const MeteredValue& b);
MeteredValue ring_mul(Backend& be, const MeteredValue& a, const MeteredValue& b);

MeteredVector is_positive(Backend& be, const MeteredVector& x);

// prod_i (1 - (a_i - b_i)^2) over bit vectors of equal length t >= 1.
// Correct in Z_p for every p >= 2; degree grows by exactly 2t.
MeteredValue is_eq(Backend& be, std::span<const MeteredValue> a,
                   std::span<const MeteredValue> b);

// Slot-wise is_eq: a and b hold t bit-planes each (plane i carries bit i of
// every slot). Returns one equality flag per slot.
MeteredVector is_eq_slots(Backend& be, std::span<const MeteredVector> a,
                          std::span<const MeteredVector> b);

MeteredVector mat_vec(Backend& be, const SparseBinaryMatrix& m,
                      const MeteredVector& x);

// A length-n vector of the constant c.
MeteredVector fill_constant(Backend& be, std::size_t n, std::uint64_t c);

}  // namespace spirit

#endif  // SPIRIT_CIRCUIT_H_
