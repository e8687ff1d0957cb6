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

#include "cli/experiment.h"

#include <charconv>
#include <string>

#include "sumlab/engine.h"
#include "sumlab/error.h"

namespace sumlab::cli {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename T>
T ParseNumber(std::string_view text, std::string_view what) {
  text = Trim(text);
  T value{};
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("invalid " + std::string(what) + ": '" +
                      std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::optional<std::vector<uint64_t>> ParseInputList(std::string_view text) {
  text = Trim(text);
  if (text == "random") return std::nullopt;
  std::vector<uint64_t> out;
  while (true) {
    const size_t comma = text.find(',');
    out.push_back(ParseNumber<uint64_t>(text.substr(0, comma), "input"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::pair<int, int> ParseRange(std::string_view text) {
  text = Trim(text);
  const size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int n = ParseNumber<int>(text, "n range");
    return {n, n};
  }
  const int lo = ParseNumber<int>(text.substr(0, dots), "n range");
  const int hi = ParseNumber<int>(text.substr(dots + 2), "n range");
  if (hi < lo) {
    throw ConfigError("n range " + std::string(text) + " is empty");
  }
  return {lo, hi};
}

Variant ParseVariantOrThrow(std::string_view name) {
  if (auto v = ParseVariant(name)) return *v;
  throw ConfigError("unknown variant '" + std::string(name) +
                    "' (expected baseline, k-secure, ck-secure or "
                    "modified-ck)");
}

Modulus Validate(const ExperimentConfig& config) {
  Modulus m = [&] {
    try {
      return Modulus::Make(config.modulus);
    } catch (const Error& e) {
      throw ConfigError(e.what());
    }
  }();
  const int min_n = MinParties(config.variant);
  if (config.n < min_n) {
    throw ConfigError("n must be >= " + std::to_string(min_n) + " for " +
                      std::string(VariantName(config.variant)) + ", got " +
                      std::to_string(config.n));
  }
  if (config.k) {
    if (config.variant != Variant::kKSecure) {
      const int derived = SegmentCount(config.variant, config.n);
      if (*config.k != derived) {
        throw ConfigError(std::string(VariantName(config.variant)) +
                          " fixes k = " + std::to_string(derived) + ", got " +
                          std::to_string(*config.k));
      }
    } else if (*config.k < 1) {
      throw ConfigError("k must be >= 1, got " + std::to_string(*config.k));
    }
  }
  if (config.inputs) {
    if (static_cast<int>(config.inputs->size()) != config.n) {
      throw ConfigError("expected " + std::to_string(config.n) +
                        " inputs, got " +
                        std::to_string(config.inputs->size()));
    }
    for (uint64_t x : *config.inputs) {
      if (x >= m.value()) {
        throw ConfigError("input " + std::to_string(x) +
                          " is not below the modulus " +
                          std::to_string(m.value()));
      }
    }
  }
  return m;
}

std::vector<FieldElement> ResolveInputs(const ExperimentConfig& config,
                                        const Modulus& m) {
  if (!config.inputs) return RandomInputs(config.n, m, config.seed);
  std::vector<FieldElement> out;
  out.reserve(config.inputs->size());
  for (uint64_t x : *config.inputs) out.push_back(m.Element(x));
  return out;
}

}  // namespace sumlab::cli
