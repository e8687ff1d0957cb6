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

#ifndef SUMLAB_LINEAR_SYSTEM_H_
#define SUMLAB_LINEAR_SYSTEM_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sumlab/ring_math.h"

namespace sumlab {

// A linear combination of equations: sum_i weight_i * equation_i. Only
// nonzero weights are listed, in increasing equation index.
struct Derivation {
  FieldElement value;
  std::vector<std::pair<int, FieldElement>> weights;
};

class ReducedSystem;

// An affine system A x = b over Z_p, collected row by row.
class AffineSystem {
 public:
  AffineSystem(const Modulus& m, int variables);

  int variables() const { return variables_; }
  int equations() const { return static_cast<int>(rhs_.size()); }
  const Modulus& modulus() const { return modulus_; }

  // Appends coefficients . x = value and returns the equation index.
  // Throws Error{kDimensionMismatch} on a wrong-length row.
  int AddEquation(std::span<const FieldElement> coefficients,
                  FieldElement value);

  // Gauss-Jordan elimination; the result remembers, for every pivot row,
  // which original equations it was built from.
  ReducedSystem Reduce() const;

 private:
  Modulus modulus_;
  int variables_;
  std::vector<std::vector<FieldElement>> rows_;
  std::vector<FieldElement> rhs_;
};

class ReducedSystem {
 public:
  int rank() const { return static_cast<int>(pivots_.size()); }
  // False iff some combination of the equations reads 0 = c with c != 0.
  bool consistent() const { return consistent_; }
  int nullity() const { return variables_ - rank(); }

  // Returns the derivation of functional . x from the equations when the
  // functional lies in their row space, std::nullopt otherwise.
  std::optional<Derivation> Express(
      std::span<const FieldElement> functional) const;

 private:
  friend class AffineSystem;

  struct PivotRow {
    int column;
    std::vector<FieldElement> coefficients;
    FieldElement rhs;
    std::vector<FieldElement> combination;  // over original equations
  };

  ReducedSystem(Modulus m, int variables, int equations)
      : modulus_(m), variables_(variables), equations_(equations) {}

  Modulus modulus_;
  int variables_;
  int equations_;
  bool consistent_ = true;
  std::vector<PivotRow> pivots_;
};

}  // namespace sumlab

#endif  // SUMLAB_LINEAR_SYSTEM_H_
