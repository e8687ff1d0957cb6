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

#ifndef SUMLAB_ADVERSARY_H_
#define SUMLAB_ADVERSARY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sumlab/engine.h"
#include "sumlab/ring_math.h"
#include "sumlab/topology.h"

namespace sumlab {

// Sorted, duplicate-free set of colluding parties.
using Coalition = std::vector<PartyId>;

// coefficients . x = value, where x holds every segment d_ij of the run
// (row-major, party-major) followed by the baseline mask R when present.
struct AffineEquation {
  std::vector<FieldElement> coefficients;
  FieldElement value;
  std::string origin;  // e.g. "msg r2 h1 P1->P3", "own d[2][3]", "announced"
};

// Everything a coalition of semi-honest parties can pool: the messages on
// links touching any member, the members' own segments (and the mask if the
// initiator colludes), the public announcement, and the schedule.
struct CoalitionView {
  Coalition coalition;
  int parties = 0;
  int segments = 0;
  bool has_mask = false;
  std::vector<AffineEquation> equations;

  int variable_count() const { return parties * segments + (has_mask ? 1 : 0); }
  int SegmentVariable(PartyId p, int segment) const {
    return (p.index - 1) * segments + (segment - 1);
  }
  int MaskVariable() const { return parties * segments; }
  bool Contains(PartyId p) const;
};

struct LeakageVerdict {
  bool determined = false;
  std::optional<FieldElement> value;  // present iff determined
  // Dimension of the consistent solution set projected onto the victim's
  // input: 0 when determined, 1 otherwise.
  int free_dimension = 1;
  // Equations (index, weight) whose weighted sum is exactly the victim's
  // input functional. Empty unless determined by DecideLeakage.
  std::vector<std::pair<int, FieldElement>> witness;
  // Per-segment diagnostic: whether d_{victim,j} alone is determined.
  std::vector<bool> segment_determined;
};

// Throws Error{kInvalidCoalition} if the coalition is empty, covers every
// party, names an unknown party or repeats one.
Coalition MakeCoalition(std::vector<PartyId> members, int n);

CoalitionView ExtractView(const RunResult& result,
                          std::span<const PartyId> coalition);

// Exact decision by Gauss-Jordan elimination over Z_p: the victim's input is
// determined iff the functional sum_j d_{victim,j} lies in the row space of
// the view. Throws Error{kInconsistentView} for a contradictory view and
// Error{kInvalidCoalition} if the victim colludes.
LeakageVerdict DecideLeakage(const CoalitionView& view, PartyId victim,
                             const Modulus& m);

// Limits for BruteForceLeakage.
inline constexpr uint64_t kMaxEnumerationModulus = 7;
inline constexpr int kMaxEnumerationUnknowns = 16;

// Number of values the oracle must enumerate: non-coalition segments, plus
// the mask when the initiator is honest.
int UnknownCount(const RunResult& result, std::span<const PartyId> coalition);

// Independent oracle: walks every assignment of the unknown values hop by
// hop, recomputing each payload and pruning as soon as a message the
// coalition saw disagrees. The victim is determined iff its input takes a
// single value over all surviving assignments. Throws
// Error{kTooLargeToEnumerate} beyond the limits above.
LeakageVerdict BruteForceLeakage(const RunResult& result,
                                 std::span<const PartyId> coalition,
                                 PartyId victim);

struct PrivacyRow {
  int coalition_size = 0;
  bool leaks = false;
  // Lexicographically first leaking (coalition, victim).
  std::optional<Coalition> witness_coalition;
  std::optional<PartyId> witness_victim;
  int64_t coalitions_checked = 0;
  int64_t coalitions_leaking = 0;  // coalitions that determine some victim
  int64_t pairs_checked = 0;
  int64_t pairs_leaking = 0;
  bool exhaustive = true;
  // Same scan restricted to the initiator as victim.
  bool initiator_leaks = false;
  std::optional<Coalition> initiator_witness;
  // Oracle cross-check, when enabled and within enumeration limits.
  int64_t oracle_checked = 0;
  int64_t oracle_disagreements = 0;
};

struct PrivacyMatrix {
  Variant variant = Variant::kBaseline;
  int n = 0;
  int segments = 0;
  uint64_t modulus = 0;
  uint64_t seed = 0;
  std::vector<PrivacyRow> rows;  // coalition sizes 2..n-1

  int64_t oracle_disagreements() const;
};

// Coalitions per size scanned exhaustively up to this many; beyond it the
// row covers the first kMaxCoalitionsPerSize in lexicographic order.
inline constexpr int64_t kMaxCoalitionsPerSize = 100000;

struct PrivacyOptions {
  std::optional<int> segments;  // kKSecure only
  bool cross_check = false;     // run BruteForceLeakage where feasible
};

// Runs the variant once on inputs drawn from seed and scans every
// (coalition, victim) pair for coalition sizes 2..n-1.
PrivacyMatrix BuildPrivacyMatrix(Variant v, int n, const Modulus& m,
                                 uint64_t seed,
                                 const PrivacyOptions& options = {});

// Calls fn(coalition) for every size-s subset of P_1..P_n in lexicographic
// order; stops early when fn returns false.
template <typename Fn>
void ForEachCoalition(int n, int s, Fn&& fn) {
  if (s < 0 || s > n) return;
  std::vector<int> idx(s);
  for (int i = 0; i < s; ++i) idx[i] = i + 1;
  while (true) {
    Coalition c;
    c.reserve(s);
    for (int i : idx) c.push_back(PartyId{i});
    if (!fn(c)) return;
    int i = s - 1;
    while (i >= 0 && idx[i] == n - s + i + 1) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace sumlab

#endif  // SUMLAB_ADVERSARY_H_
