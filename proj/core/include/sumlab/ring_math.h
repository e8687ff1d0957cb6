/*
 * Copyright 2026 The sumlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SUMLAB_RING_MATH_H_
#define SUMLAB_RING_MATH_H_

#include <cstdint>
#include <ostream>
#include <random>
#include <span>
#include <utility>
#include <vector>

namespace sumlab {

class Modulus;

// A residue in [0, p). Only a Modulus can mint one, so the range invariant
// holds for every instance.
class FieldElement {
 public:
  constexpr FieldElement() = default;

  constexpr uint64_t value() const { return value_; }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  friend class Modulus;
  constexpr explicit FieldElement(uint64_t v) : value_(v) {}

  uint64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, FieldElement e);

// The prime modulus of the arithmetic domain Z_p.
class Modulus {
 public:
  static constexpr uint64_t kDefault = (uint64_t{1} << 61) - 1;

  // Throws Error{kTooSmall} when p < 2 and Error{kNotPrime} when p is
  // composite.
  static Modulus Make(uint64_t p);
  static Modulus Default() { return Make(kDefault); }

  uint64_t value() const { return p_; }

  // Reduces an arbitrary 64-bit value into the field.
  FieldElement Element(uint64_t v) const { return FieldElement(v % p_); }
  FieldElement Zero() const { return FieldElement(0); }

  FieldElement Add(FieldElement a, FieldElement b) const;
  FieldElement Sub(FieldElement a, FieldElement b) const;
  FieldElement Neg(FieldElement a) const;
  FieldElement Mul(FieldElement a, FieldElement b) const;
  // Multiplicative inverse; a must be nonzero.
  FieldElement Inv(FieldElement a) const;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  explicit Modulus(uint64_t p) : p_(p) {}

  uint64_t p_;
};

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool IsPrime(uint64_t n);

// Seedable pseudo-random source. Split() derives an independent child stream
// so that segments, masks and random inputs never share draws. Not suitable
// for cryptographic use.
class Rng {
 public:
  explicit Rng(uint64_t seed);

  uint64_t seed() const { return seed_; }

  Rng Split(uint64_t stream) const;

  // Uniform over [0, p).
  FieldElement Uniform(const Modulus& m);

 private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

// Named child streams used by the protocol engine and the CLI.
inline constexpr uint64_t kSegmentStream = 1;
inline constexpr uint64_t kMaskStream = 2;
inline constexpr uint64_t kInputStream = 3;

// Splits x into k additive segments: the first k-1 are uniform over Z_p and
// the last one balances the sum. k == 1 returns {x} without consuming
// randomness.
std::vector<FieldElement> SplitSegments(FieldElement x, int k, const Modulus& m,
                                        Rng& rng);

FieldElement SumInputs(std::span<const FieldElement> inputs, const Modulus& m);

// Per-party additive decomposition of the private inputs: row i holds the k
// segments of party i+1, and every row sums to inputs[i].
class SegmentMatrix {
 public:
  SegmentMatrix() = default;

  // Draws fresh segments for every input, row by row, from rng.
  static SegmentMatrix Split(std::span<const FieldElement> inputs, int k,
                             const Modulus& m, Rng& rng);

  // Rebuilds a matrix from stored rows. Throws Error{kDimensionMismatch} if
  // the shape is ragged or a row does not sum to its input.
  static SegmentMatrix FromRows(std::vector<FieldElement> inputs,
                                std::vector<std::vector<FieldElement>> rows,
                                const Modulus& m);

  int parties() const { return static_cast<int>(inputs_.size()); }
  int segments() const { return k_; }

  // party and segment are 1-based, matching P_1..P_n and d_i1..d_ik.
  FieldElement at(int party, int segment) const;
  FieldElement input(int party) const { return inputs_.at(party - 1); }

  const std::vector<FieldElement>& inputs() const { return inputs_; }
  std::span<const FieldElement> row(int party) const;

  friend bool operator==(const SegmentMatrix&, const SegmentMatrix&) = default;

 private:
  SegmentMatrix(int k, std::vector<FieldElement> inputs,
                std::vector<FieldElement> cells)
      : k_(k), inputs_(std::move(inputs)), cells_(std::move(cells)) {}

  int k_ = 0;
  std::vector<FieldElement> inputs_;
  std::vector<FieldElement> cells_;  // row-major n x k
};

}  // namespace sumlab

#endif  // SUMLAB_RING_MATH_H_
