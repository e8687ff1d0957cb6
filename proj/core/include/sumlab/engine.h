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

#ifndef SUMLAB_ENGINE_H_
#define SUMLAB_ENGINE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sumlab/ring_math.h"
#include "sumlab/topology.h"

namespace sumlab {

// One message on the ring. payload is the running partial sum the sender
// forwards after adding its own segment.
struct TraceEvent {
  int round = 0;  // 1-based
  int hop = 0;    // 1..n within the round; hop 1 is sent by the initiator
  PartyId sender;
  PartyId receiver;
  FieldElement payload;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct RunResult {
  Variant variant = Variant::kBaseline;
  Modulus modulus = Modulus::Default();
  uint64_t seed = 0;
  FieldElement announced;
  std::vector<TraceEvent> trace;
  int64_t messages_sent = 0;
  int64_t additions_performed = 0;
  int rounds_executed = 0;
  SwapSchedule schedule;
  SegmentMatrix segments;
  std::optional<FieldElement> mask;  // baseline only

  int parties() const { return schedule.n; }

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

// Executes one protocol run. Each round the initiator P1 sends the total it
// received at the end of the previous round plus its next segment; every
// other party adds its segment for that round and forwards; the last hop
// returns to P1. The baseline instead sends x_1 + R once and P1 removes R at
// the end.
//
// segments is the k of kKSecure (default n); other variants derive k.
// Throws Error{kTooFewParties} or Error{kInvalidArgument}.
RunResult RunProtocol(Variant v, std::span<const FieldElement> inputs,
                      const Modulus& m, uint64_t seed,
                      std::optional<int> segments = {});

struct ReplayOutcome {
  bool consistent = true;
  // Index into trace of the first bad event; trace.size() when the trace is
  // fine but the counters or the announcement are not.
  std::optional<size_t> first_mismatch;
  std::string reason;

  explicit operator bool() const { return consistent; }
};

// Recomputes every hop from result.segments, result.schedule and
// result.mask and compares against the stored trace and counters.
ReplayOutcome Replay(const RunResult& result);

struct ComplexityRow {
  int n = 0;
  int64_t messages = 0;
  int64_t additions = 0;

  friend bool operator==(const ComplexityRow&, const ComplexityRow&) = default;
};

// Runs the variant once per n in [n_min, n_max] on inputs drawn from seed
// and reports the measured counters.
std::vector<ComplexityRow> ComplexityTable(Variant v, int n_min, int n_max,
                                           const Modulus& m, uint64_t seed,
                                           std::optional<int> segments = {});

// Inputs drawn uniformly from Z_p on the kInputStream child of seed.
std::vector<FieldElement> RandomInputs(int n, const Modulus& m, uint64_t seed);

}  // namespace sumlab

#endif  // SUMLAB_ENGINE_H_
