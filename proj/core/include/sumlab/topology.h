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

#ifndef SUMLAB_TOPOLOGY_H_
#define SUMLAB_TOPOLOGY_H_

#include <compare>
#include <optional>
#include <ostream>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

namespace sumlab {

// Protocol variants sharing the ring machinery.
enum class Variant {
  kBaseline,    // single pass, one random mask held by the initiator
  kKSecure,     // k segments, fixed ring
  kCkSecure,    // k = n-1 segments, P2 walks, initiator fixed
  kModifiedCk,  // k = n segments, initiator P1 walks to the tail
};

std::string_view VariantName(Variant v);
// Accepts the CLI spellings: baseline, k-secure, ck-secure, modified-ck.
std::optional<Variant> ParseVariant(std::string_view name);

// Smallest party count the variant supports.
int MinParties(Variant v);

// Number of segments per party, which is also the number of rounds.
// requested is honoured only for kKSecure (default n there); the other
// variants derive it from n and reject a conflicting request.
int SegmentCount(Variant v, int n, std::optional<int> requested = {});

// 1-based party index, P_1..P_n.
struct PartyId {
  int index = 0;

  friend constexpr auto operator<=>(PartyId, PartyId) = default;
};

std::ostream& operator<<(std::ostream& os, PartyId p);

inline constexpr PartyId kInitiator{1};

// One round's ring: messages travel order[t] -> order[t+1], wrapping around.
class RingOrder {
 public:
  // Throws Error{kInvalidRing} unless order is a permutation of P_1..P_n.
  explicit RingOrder(std::vector<PartyId> order);
  static RingOrder Identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  PartyId at(int slot) const { return order_.at(slot); }
  const std::vector<PartyId>& parties() const { return order_; }

  // 0-based slot; throws Error{kUnknownParty}.
  int SlotOf(PartyId p) const;
  PartyId Successor(PartyId p) const;
  PartyId Predecessor(PartyId p) const;

  // Returns the ring with the occupants of two slots exchanged.
  RingOrder SwapSlots(int a, int b) const;

  friend bool operator==(const RingOrder&, const RingOrder&) = default;

 private:
  std::vector<PartyId> order_;
};

struct Neighbors {
  PartyId predecessor;
  PartyId successor;

  friend constexpr auto operator<=>(const Neighbors&,
                                    const Neighbors&) = default;
};

Neighbors NeighborsOf(const RingOrder& ring, PartyId party);

struct SwapSchedule {
  Variant variant = Variant::kBaseline;
  int n = 0;
  std::vector<RingOrder> rounds;

  friend bool operator==(const SwapSchedule&, const SwapSchedule&) = default;
};

// Builds the per-round rings:
//   kModifiedCk: n rounds; after round j < n, P1 trades places with whoever
//                sits in the slot P_{j+1} started in.
//   kCkSecure:   n-1 rounds; after round i, P2 trades places with P_{i+2};
//                P1 never moves.
//   kKSecure:    k identical rounds of the identity ring.
//   kBaseline:   one round of the identity ring.
// Throws Error{kTooFewParties} below MinParties(v).
SwapSchedule Schedule(Variant v, int n, std::optional<int> segments = {});

// If b is a with exactly two slots exchanged, returns those two parties.
std::optional<std::pair<PartyId, PartyId>> TranspositionBetween(
    const RingOrder& a, const RingOrder& b);

// Number of adjacent round pairs whose rings differ.
int ExchangeCount(const SwapSchedule& sched);

// The (predecessor, successor) pairs flanking victim in every round. At most
// one element; empty means the victim's neighbors change at least once.
std::set<std::pair<PartyId, PartyId>> ConstantNeighborPairs(
    const SwapSchedule& sched, PartyId victim);

}  // namespace sumlab

#endif  // SUMLAB_TOPOLOGY_H_
