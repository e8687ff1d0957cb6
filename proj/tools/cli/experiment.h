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

#ifndef SUMLAB_TOOLS_CLI_EXPERIMENT_H_
#define SUMLAB_TOOLS_CLI_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sumlab/ring_math.h"
#include "sumlab/topology.h"

namespace sumlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInvariant = 3;

// Rejected configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  Variant variant = Variant::kModifiedCk;
  int n = 0;
  std::optional<int> k;  // k-secure only; derived for the other variants
  uint64_t modulus = Modulus::kDefault;
  uint64_t seed = 0;
  // Explicit inputs, or std::nullopt for inputs drawn from Z_p with seed.
  std::optional<std::vector<uint64_t>> inputs;
  std::string out;     // primary artifact path, empty for none
  std::string report;  // run summary JSON (run only)
};

// Parses "1,2,3" into integers, or "random" into std::nullopt.
std::optional<std::vector<uint64_t>> ParseInputList(std::string_view text);

// Parses "4..8" or "5" into an inclusive range.
std::pair<int, int> ParseRange(std::string_view text);

Variant ParseVariantOrThrow(std::string_view name);

// Checks every precondition of the chosen variant and returns the modulus.
// Throws ConfigError with a one-line message.
Modulus Validate(const ExperimentConfig& config);

// Explicit inputs reduced into the field, or the seeded random draw.
std::vector<FieldElement> ResolveInputs(const ExperimentConfig& config,
                                        const Modulus& m);

}  // namespace sumlab::cli

#endif  // SUMLAB_TOOLS_CLI_EXPERIMENT_H_
