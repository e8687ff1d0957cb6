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

#include "sumlab/topology.h"

#include <algorithm>
#include <string>

#include "sumlab/error.h"

namespace sumlab {

std::string_view VariantName(Variant v) {
  switch (v) {
    case Variant::kBaseline:
      return "baseline";
    case Variant::kKSecure:
      return "k-secure";
    case Variant::kCkSecure:
      return "ck-secure";
    case Variant::kModifiedCk:
      return "modified-ck";
  }
  return "unknown";
}

std::optional<Variant> ParseVariant(std::string_view name) {
  for (Variant v : {Variant::kBaseline, Variant::kKSecure, Variant::kCkSecure,
                    Variant::kModifiedCk}) {
    if (VariantName(v) == name) return v;
  }
  return std::nullopt;
}

int MinParties(Variant v) {
  return (v == Variant::kCkSecure || v == Variant::kModifiedCk) ? 4 : 3;
}

int SegmentCount(Variant v, int n, std::optional<int> requested) {
  int derived = 0;
  switch (v) {
    case Variant::kBaseline:
      derived = 1;
      break;
    case Variant::kKSecure:
      derived = requested.value_or(n);
      break;
    case Variant::kCkSecure:
      derived = n - 1;
      break;
    case Variant::kModifiedCk:
      derived = n;
      break;
  }
  if (requested && *requested != derived) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(VariantName(v)) +
                    " requires k = " + std::to_string(derived) + ", got " +
                    std::to_string(*requested));
  }
  if (derived < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "k must be >= 1, got " + std::to_string(derived));
  }
  return derived;
}

std::ostream& operator<<(std::ostream& os, PartyId p) {
  return os << 'P' << p.index;
}

RingOrder::RingOrder(std::vector<PartyId> order) : order_(std::move(order)) {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (PartyId p : order_) {
    if (p.index < 1 || p.index > n || seen[p.index]) {
      throw Error(
          ErrorCode::kInvalidRing,
          "ring order is not a permutation of P1..P" + std::to_string(n));
    }
    seen[p.index] = true;
  }
}

RingOrder RingOrder::Identity(int n) {
  std::vector<PartyId> order;
  order.reserve(n);
  for (int i = 1; i <= n; ++i) order.push_back(PartyId{i});
  return RingOrder(std::move(order));
}

int RingOrder::SlotOf(PartyId p) const {
  auto it = std::find(order_.begin(), order_.end(), p);
  if (it == order_.end()) {
    throw Error(ErrorCode::kUnknownParty,
                "party P" + std::to_string(p.index) + " is not in the ring");
  }
  return static_cast<int>(it - order_.begin());
}

PartyId RingOrder::Successor(PartyId p) const {
  return order_[(SlotOf(p) + 1) % size()];
}

PartyId RingOrder::Predecessor(PartyId p) const {
  return order_[(SlotOf(p) + size() - 1) % size()];
}

RingOrder RingOrder::SwapSlots(int a, int b) const {
  RingOrder out = *this;
  std::swap(out.order_.at(a), out.order_.at(b));
  return out;
}

Neighbors NeighborsOf(const RingOrder& ring, PartyId party) {
  return {ring.Predecessor(party), ring.Successor(party)};
}

SwapSchedule Schedule(Variant v, int n, std::optional<int> segments) {
  if (n < MinParties(v)) {
    throw Error(ErrorCode::kTooFewParties,
                "n must be >= " + std::to_string(MinParties(v)) + " for " +
                    std::string(VariantName(v)) + ", got " + std::to_string(n));
  }
  const int k = SegmentCount(v, n, segments);
  SwapSchedule sched{v, n, {}};
  sched.rounds.reserve(k);
  RingOrder ring = RingOrder::Identity(n);
  sched.rounds.push_back(ring);

  switch (v) {
    case Variant::kBaseline:
    case Variant::kKSecure:
      for (int r = 1; r < k; ++r) sched.rounds.push_back(ring);
      break;
    case Variant::kModifiedCk:
      // Slot j (0-based) is where P_{j+1} started.
      for (int j = 1; j < k; ++j) {
        ring = ring.SwapSlots(ring.SlotOf(kInitiator), j);
        sched.rounds.push_back(ring);
      }
      break;
    case Variant::kCkSecure:
      for (int i = 1; i < k; ++i) {
        ring = ring.SwapSlots(ring.SlotOf(PartyId{2}),
                              ring.SlotOf(PartyId{i + 2}));
        sched.rounds.push_back(ring);
      }
      break;
  }
  return sched;
}

std::optional<std::pair<PartyId, PartyId>> TranspositionBetween(
    const RingOrder& a, const RingOrder& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<int> diff;
  for (int s = 0; s < a.size(); ++s) {
    if (a.at(s) != b.at(s)) diff.push_back(s);
  }
  if (diff.size() != 2) return std::nullopt;
  if (a.at(diff[0]) != b.at(diff[1]) || a.at(diff[1]) != b.at(diff[0])) {
    return std::nullopt;
  }
  const PartyId x = a.at(diff[0]);
  const PartyId y = a.at(diff[1]);
  return std::make_pair(std::min(x, y), std::max(x, y));
}

int ExchangeCount(const SwapSchedule& sched) {
  int count = 0;
  for (size_t r = 1; r < sched.rounds.size(); ++r) {
    if (sched.rounds[r] != sched.rounds[r - 1]) ++count;
  }
  return count;
}

std::set<std::pair<PartyId, PartyId>> ConstantNeighborPairs(
    const SwapSchedule& sched, PartyId victim) {
  std::set<std::pair<PartyId, PartyId>> out;
  if (sched.rounds.empty()) return out;
  const Neighbors first = NeighborsOf(sched.rounds.front(), victim);
  for (const RingOrder& ring : sched.rounds) {
    if (NeighborsOf(ring, victim) != first) return out;
  }
  out.emplace(first.predecessor, first.successor);
  return out;
}

}  // namespace sumlab
