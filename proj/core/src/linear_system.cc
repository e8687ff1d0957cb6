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

#include "sumlab/linear_system.h"

#include <string>

#include "sumlab/error.h"

namespace sumlab {

AffineSystem::AffineSystem(const Modulus& m, int variables)
    : modulus_(m), variables_(variables) {
  if (variables < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative variable count");
  }
}

int AffineSystem::AddEquation(std::span<const FieldElement> coefficients,
                              FieldElement value) {
  if (static_cast<int>(coefficients.size()) != variables_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "equation has " + std::to_string(coefficients.size()) +
                    " coefficients, expected " + std::to_string(variables_));
  }
  rows_.emplace_back(coefficients.begin(), coefficients.end());
  rhs_.push_back(value);
  return equations() - 1;
}

ReducedSystem AffineSystem::Reduce() const {
  const Modulus& m = modulus_;
  const int eqs = equations();

  // Working copy: coefficients | rhs | identity tracking.
  struct Work {
    std::vector<FieldElement> a;
    FieldElement b;
    std::vector<FieldElement> combo;
  };
  std::vector<Work> work;
  work.reserve(eqs);
  for (int i = 0; i < eqs; ++i) {
    std::vector<FieldElement> combo(eqs, m.Zero());
    combo[i] = m.Element(1);
    work.push_back({rows_[i], rhs_[i], std::move(combo)});
  }

  auto axpy = [&m](std::vector<FieldElement>& dst,
                   const std::vector<FieldElement>& src, FieldElement f) {
    for (size_t c = 0; c < dst.size(); ++c) {
      if (src[c].value() != 0) dst[c] = m.Sub(dst[c], m.Mul(f, src[c]));
    }
  };

  ReducedSystem out(m, variables_, eqs);
  int next = 0;
  for (int col = 0; col < variables_ && next < eqs; ++col) {
    int pivot = -1;
    for (int r = next; r < eqs; ++r) {
      if (work[r].a[col].value() != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(work[next], work[pivot]);
    Work& p = work[next];
    const FieldElement inv = m.Inv(p.a[col]);
    for (auto& x : p.a) x = m.Mul(x, inv);
    for (auto& x : p.combo) x = m.Mul(x, inv);
    p.b = m.Mul(p.b, inv);
    for (int r = 0; r < eqs; ++r) {
      if (r == next || work[r].a[col].value() == 0) continue;
      const FieldElement f = work[r].a[col];
      axpy(work[r].a, p.a, f);
      axpy(work[r].combo, p.combo, f);
      work[r].b = m.Sub(work[r].b, m.Mul(f, p.b));
    }
    ++next;
  }

  for (int r = 0; r < eqs; ++r) {
    if (r < next) {
      int col = 0;
      while (work[r].a[col].value() == 0) ++col;
      out.pivots_.push_back(
          {col, std::move(work[r].a), work[r].b, std::move(work[r].combo)});
    } else if (work[r].b.value() != 0) {
      out.consistent_ = false;
    }
  }
  return out;
}

std::optional<Derivation> ReducedSystem::Express(
    std::span<const FieldElement> functional) const {
  const Modulus& m = modulus_;
  if (static_cast<int>(functional.size()) != variables_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "functional length does not match variable count");
  }
  std::vector<FieldElement> residual(functional.begin(), functional.end());
  std::vector<FieldElement> combo(equations_, m.Zero());
  FieldElement value = m.Zero();
  for (const PivotRow& p : pivots_) {
    const FieldElement f = residual[p.column];
    if (f.value() == 0) continue;
    for (int c = 0; c < variables_; ++c) {
      residual[c] = m.Sub(residual[c], m.Mul(f, p.coefficients[c]));
    }
    for (int e = 0; e < equations_; ++e) {
      combo[e] = m.Add(combo[e], m.Mul(f, p.combination[e]));
    }
    value = m.Add(value, m.Mul(f, p.rhs));
  }
  for (FieldElement r : residual) {
    if (r.value() != 0) return std::nullopt;
  }
  Derivation d{value, {}};
  for (int e = 0; e < equations_; ++e) {
    if (combo[e].value() != 0) d.weights.emplace_back(e, combo[e]);
  }
  return d;
}

}  // namespace sumlab
