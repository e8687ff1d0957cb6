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

#include "sumlab/ring_math.h"

#include <array>
#include <string>

#include "sumlab/error.h"

namespace sumlab {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrime:
      return "NotPrime";
    case ErrorCode::kTooSmall:
      return "TooSmall";
    case ErrorCode::kTooFewParties:
      return "TooFewParties";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kUnknownParty:
      return "UnknownParty";
    case ErrorCode::kInvalidRing:
      return "InvalidRing";
    case ErrorCode::kInvalidCoalition:
      return "InvalidCoalition";
    case ErrorCode::kInconsistentView:
      return "InconsistentView";
    case ErrorCode::kTooLargeToEnumerate:
      return "TooLargeToEnumerate";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

namespace {

__extension__ using Uint128 = unsigned __int128;

uint64_t MulMod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<Uint128>(a) * b % m);
}

uint64_t PowMod(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, FieldElement e) {
  return os << e.value();
}

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  // These witnesses are sufficient for every n < 3.3e24.
  constexpr std::array<uint64_t, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                   17, 19, 23, 29, 31, 37};
  for (uint64_t w : kWitnesses) {
    if (n % w == 0) return n == w;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : kWitnesses) {
    uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Modulus Modulus::Make(uint64_t p) {
  if (p < 2) {
    throw Error(ErrorCode::kTooSmall,
                "modulus must be >= 2, got " + std::to_string(p));
  }
  if (!IsPrime(p)) {
    throw Error(ErrorCode::kNotPrime,
                "modulus must be prime, got " + std::to_string(p));
  }
  return Modulus(p);
}

FieldElement Modulus::Add(FieldElement a, FieldElement b) const {
  uint64_t s = a.value_ + b.value_;
  if (s < a.value_ || s >= p_) s -= p_;
  return FieldElement(s);
}

FieldElement Modulus::Sub(FieldElement a, FieldElement b) const {
  return FieldElement(a.value_ >= b.value_ ? a.value_ - b.value_
                                           : a.value_ + (p_ - b.value_));
}

FieldElement Modulus::Neg(FieldElement a) const {
  return FieldElement(a.value_ == 0 ? 0 : p_ - a.value_);
}

FieldElement Modulus::Mul(FieldElement a, FieldElement b) const {
  return FieldElement(MulMod(a.value_, b.value_, p_));
}

FieldElement Modulus::Inv(FieldElement a) const {
  if (a.value_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "zero has no inverse");
  }
  return FieldElement(PowMod(a.value_, p_ - 2, p_));
}

Rng::Rng(uint64_t seed) : seed_(seed) {
  std::seed_seq seq{static_cast<uint32_t>(seed),
                    static_cast<uint32_t>(seed >> 32)};
  engine_.seed(seq);
}

Rng Rng::Split(uint64_t stream) const {
  std::seed_seq seq{static_cast<uint32_t>(seed_),
                    static_cast<uint32_t>(seed_ >> 32),
                    static_cast<uint32_t>(stream),
                    static_cast<uint32_t>(stream >> 32), 0x5eed5u};
  std::array<uint32_t, 2> words{};
  seq.generate(words.begin(), words.end());
  return Rng((static_cast<uint64_t>(words[1]) << 32) | words[0]);
}

FieldElement Rng::Uniform(const Modulus& m) {
  std::uniform_int_distribution<uint64_t> dist(0, m.value() - 1);
  return m.Element(dist(engine_));
}

std::vector<FieldElement> SplitSegments(FieldElement x, int k, const Modulus& m,
                                        Rng& rng) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "segment count must be >= 1, got " + std::to_string(k));
  }
  std::vector<FieldElement> out;
  out.reserve(k);
  FieldElement drawn = m.Zero();
  for (int j = 0; j + 1 < k; ++j) {
    FieldElement d = rng.Uniform(m);
    drawn = m.Add(drawn, d);
    out.push_back(d);
  }
  out.push_back(m.Sub(x, drawn));
  return out;
}

FieldElement SumInputs(std::span<const FieldElement> inputs, const Modulus& m) {
  FieldElement acc = m.Zero();
  for (FieldElement x : inputs) acc = m.Add(acc, x);
  return acc;
}

SegmentMatrix SegmentMatrix::Split(std::span<const FieldElement> inputs, int k,
                                   const Modulus& m, Rng& rng) {
  std::vector<FieldElement> cells;
  cells.reserve(inputs.size() * static_cast<size_t>(k < 0 ? 0 : k));
  for (FieldElement x : inputs) {
    auto row = SplitSegments(x, k, m, rng);
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return SegmentMatrix(k, {inputs.begin(), inputs.end()}, std::move(cells));
}

SegmentMatrix SegmentMatrix::FromRows(
    std::vector<FieldElement> inputs,
    std::vector<std::vector<FieldElement>> rows, const Modulus& m) {
  if (rows.size() != inputs.size() || rows.empty()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "segment rows do not match input count");
  }
  const size_t k = rows.front().size();
  if (k == 0) {
    throw Error(ErrorCode::kDimensionMismatch, "segment rows are empty");
  }
  std::vector<FieldElement> cells;
  cells.reserve(rows.size() * k);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != k) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged segment rows");
    }
    if (SumInputs(rows[i], m) != inputs[i]) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "segments of party " + std::to_string(i + 1) +
                      " do not sum to its input");
    }
    cells.insert(cells.end(), rows[i].begin(), rows[i].end());
  }
  return SegmentMatrix(static_cast<int>(k), std::move(inputs),
                       std::move(cells));
}

FieldElement SegmentMatrix::at(int party, int segment) const {
  if (party < 1 || party > parties() || segment < 1 || segment > k_) {
    throw Error(ErrorCode::kDimensionMismatch, "segment index out of range");
  }
  return cells_[static_cast<size_t>(party - 1) * k_ + (segment - 1)];
}

std::span<const FieldElement> SegmentMatrix::row(int party) const {
  if (party < 1 || party > parties()) {
    throw Error(ErrorCode::kDimensionMismatch, "party index out of range");
  }
  return std::span<const FieldElement>(cells_).subspan(
      static_cast<size_t>(party - 1) * k_, k_);
}

}  // namespace sumlab
