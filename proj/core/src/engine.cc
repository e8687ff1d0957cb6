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

#include "sumlab/engine.h"

#include <algorithm>
#include <sstream>

#include "sumlab/error.h"

namespace sumlab {
namespace {

struct Execution {
  std::vector<TraceEvent> trace;
  int64_t additions = 0;
  FieldElement announced;
};

Execution Execute(const SwapSchedule& sched, const SegmentMatrix& segments,
                  std::optional<FieldElement> mask, const Modulus& m) {
  const int n = sched.n;
  Execution ex;
  ex.trace.reserve(static_cast<size_t>(n) * sched.rounds.size());
  // What P1 holds between rounds: the total that came back to it.
  FieldElement carried = m.Zero();
  for (size_t r = 0; r < sched.rounds.size(); ++r) {
    const RingOrder& ring = sched.rounds[r];
    const int start = ring.SlotOf(kInitiator);
    FieldElement running = carried;
    for (int hop = 1; hop <= n; ++hop) {
      const PartyId sender = ring.at((start + hop - 1) % n);
      const PartyId receiver = ring.at((start + hop) % n);
      running = m.Add(running, segments.at(sender.index, r + 1));
      if (hop == 1 && mask) running = m.Add(running, *mask);
      ++ex.additions;
      ex.trace.push_back(
          {static_cast<int>(r + 1), hop, sender, receiver, running});
    }
    carried = running;
  }
  if (mask) {
    carried = m.Sub(carried, *mask);
    ++ex.additions;
  }
  ex.announced = carried;
  return ex;
}

}  // namespace

std::vector<FieldElement> RandomInputs(int n, const Modulus& m, uint64_t seed) {
  Rng rng = Rng(seed).Split(kInputStream);
  std::vector<FieldElement> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(rng.Uniform(m));
  return out;
}

RunResult RunProtocol(Variant v, std::span<const FieldElement> inputs,
                      const Modulus& m, uint64_t seed,
                      std::optional<int> segments) {
  const int n = static_cast<int>(inputs.size());
  SwapSchedule sched = Schedule(v, n, segments);
  const int k = static_cast<int>(sched.rounds.size());

  Rng root(seed);
  Rng seg_rng = root.Split(kSegmentStream);
  SegmentMatrix matrix = SegmentMatrix::Split(inputs, k, m, seg_rng);
  std::optional<FieldElement> mask;
  if (v == Variant::kBaseline) {
    Rng mask_rng = root.Split(kMaskStream);
    mask = mask_rng.Uniform(m);
  }

  Execution ex = Execute(sched, matrix, mask, m);
  RunResult result{
      .variant = v,
      .modulus = m,
      .seed = seed,
      .announced = ex.announced,
      .trace = std::move(ex.trace),
      .messages_sent = 0,
      .additions_performed = ex.additions,
      .rounds_executed = k,
      .schedule = std::move(sched),
      .segments = std::move(matrix),
      .mask = mask,
  };
  result.messages_sent = static_cast<int64_t>(result.trace.size());
  return result;
}

ReplayOutcome Replay(const RunResult& result) {
  auto fail = [](size_t index, const std::string& why) {
    return ReplayOutcome{false, index, why};
  };
  const SwapSchedule& sched = result.schedule;
  if (sched.n != result.segments.parties() ||
      static_cast<int>(sched.rounds.size()) != result.segments.segments()) {
    return fail(0, "segment matrix does not match schedule");
  }
  if (result.mask.has_value() != (result.variant == Variant::kBaseline)) {
    return fail(0, "mask presence does not match variant");
  }
  Execution ex = Execute(sched, result.segments, result.mask, result.modulus);
  const size_t common = std::min(ex.trace.size(), result.trace.size());
  for (size_t i = 0; i < common; ++i) {
    if (ex.trace[i] != result.trace[i]) {
      const TraceEvent& e = result.trace[i];
      std::ostringstream why;
      why << "event " << i << " (round " << e.round << ", hop " << e.hop
          << ") expected " << ex.trace[i].sender << "->" << ex.trace[i].receiver
          << " payload " << ex.trace[i].payload << ", found " << e.sender
          << "->" << e.receiver << " payload " << e.payload;
      return fail(i, why.str());
    }
  }
  if (ex.trace.size() != result.trace.size()) {
    return fail(common, "trace length " + std::to_string(result.trace.size()) +
                            ", expected " + std::to_string(ex.trace.size()));
  }
  const size_t end = result.trace.size();
  if (result.messages_sent != static_cast<int64_t>(end)) {
    return fail(end, "messages_sent does not match trace length");
  }
  if (result.additions_performed != ex.additions) {
    return fail(end, "additions_performed mismatch");
  }
  if (result.rounds_executed != static_cast<int>(sched.rounds.size())) {
    return fail(end, "rounds_executed mismatch");
  }
  if (result.announced != ex.announced) {
    return fail(end, "announced sum mismatch");
  }
  return {};
}

std::vector<ComplexityRow> ComplexityTable(Variant v, int n_min, int n_max,
                                           const Modulus& m, uint64_t seed,
                                           std::optional<int> segments) {
  if (n_min < MinParties(v)) {
    throw Error(ErrorCode::kTooFewParties,
                "n must be >= " + std::to_string(MinParties(v)) + " for " +
                    std::string(VariantName(v)));
  }
  if (n_max < n_min) {
    throw Error(ErrorCode::kInvalidArgument, "empty n range");
  }
  std::vector<ComplexityRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    auto inputs = RandomInputs(n, m, seed);
    RunResult r = RunProtocol(v, inputs, m, seed, segments);
    rows.push_back({n, r.messages_sent, r.additions_performed});
  }
  return rows;
}

}  // namespace sumlab
