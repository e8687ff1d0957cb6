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

#include "sumlab/adversary.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "sumlab/error.h"
#include "sumlab/linear_system.h"

namespace sumlab {
namespace {

bool InCoalition(std::span<const PartyId> coalition, PartyId p) {
  return std::find(coalition.begin(), coalition.end(), p) != coalition.end();
}

void CheckVictim(std::span<const PartyId> coalition, PartyId victim, int n) {
  if (victim.index < 1 || victim.index > n) {
    throw Error(ErrorCode::kUnknownParty,
                "victim P" + std::to_string(victim.index) + " out of range");
  }
  if (InCoalition(coalition, victim)) {
    throw Error(ErrorCode::kInvalidCoalition, "victim P" +
                                                  std::to_string(victim.index) +
                                                  " is part of the coalition");
  }
}

std::string MessageOrigin(const TraceEvent& e) {
  std::ostringstream os;
  os << "msg r" << e.round << " h" << e.hop << ' ' << e.sender << "->"
     << e.receiver;
  return os.str();
}

ReducedSystem ReduceView(const CoalitionView& view, const Modulus& m) {
  AffineSystem system(m, view.variable_count());
  for (const AffineEquation& eq : view.equations) {
    system.AddEquation(eq.coefficients, eq.value);
  }
  ReducedSystem reduced = system.Reduce();
  if (!reduced.consistent()) {
    throw Error(ErrorCode::kInconsistentView,
                "coalition view is self-contradictory; the trace is corrupt");
  }
  return reduced;
}

LeakageVerdict VerdictFor(const CoalitionView& view,
                          const ReducedSystem& reduced, PartyId victim,
                          const Modulus& m) {
  std::vector<FieldElement> functional(view.variable_count(), m.Zero());
  for (int j = 1; j <= view.segments; ++j) {
    functional[view.SegmentVariable(victim, j)] = m.Element(1);
  }
  LeakageVerdict verdict;
  if (auto d = reduced.Express(functional)) {
    verdict.determined = true;
    verdict.value = d->value;
    verdict.free_dimension = 0;
    verdict.witness = std::move(d->weights);
  }
  verdict.segment_determined.reserve(view.segments);
  for (int j = 1; j <= view.segments; ++j) {
    std::vector<FieldElement> single(view.variable_count(), m.Zero());
    single[view.SegmentVariable(victim, j)] = m.Element(1);
    verdict.segment_determined.push_back(reduced.Express(single).has_value());
  }
  return verdict;
}

// Depth-first enumeration of every value assignment consistent with what the
// coalition observed. Each non-colluding party contributes exactly one
// unknown segment per round, at the hop where it sends.
class Enumerator {
 public:
  Enumerator(const RunResult& result, std::span<const PartyId> coalition,
             PartyId victim)
      : result_(result),
        m_(result.modulus),
        coalition_(coalition),
        victim_(victim) {}

  LeakageVerdict Solve() {
    const bool mask_unknown =
        result_.mask.has_value() && !InCoalition(coalition_, kInitiator);
    if (!result_.mask) {
      Walk(0, m_.Zero(), m_.Zero(), std::nullopt);
    } else if (!mask_unknown) {
      Walk(0, m_.Zero(), m_.Zero(), result_.mask);
    } else {
      for (uint64_t r = 0; r < m_.value() && totals_.size() < 2; ++r) {
        Walk(0, m_.Zero(), m_.Zero(), m_.Element(r));
      }
    }
    LeakageVerdict verdict;
    if (totals_.empty()) {
      throw Error(ErrorCode::kInconsistentView,
                  "no assignment reproduces the observed messages");
    }
    if (totals_.size() == 1) {
      verdict.determined = true;
      verdict.value = *totals_.begin();
      verdict.free_dimension = 0;
    }
    return verdict;
  }

 private:
  void Walk(size_t t, FieldElement running, FieldElement victim_total,
            std::optional<FieldElement> mask) {
    if (totals_.size() >= 2) return;
    const auto& trace = result_.trace;
    if (t == trace.size()) {
      FieldElement announced = mask ? m_.Sub(running, *mask) : running;
      if (announced == result_.announced) totals_.insert(victim_total);
      return;
    }
    const TraceEvent& e = trace[t];
    const bool visible = InCoalition(coalition_, e.sender) ||
                         InCoalition(coalition_, e.receiver);
    auto step = [&](FieldElement segment) {
      FieldElement payload = m_.Add(running, segment);
      if (e.hop == 1 && mask) payload = m_.Add(payload, *mask);
      if (visible && payload != e.payload) return;
      FieldElement total =
          e.sender == victim_ ? m_.Add(victim_total, segment) : victim_total;
      Walk(t + 1, payload, total, mask);
    };
    if (InCoalition(coalition_, e.sender)) {
      step(result_.segments.at(e.sender.index, e.round));
    } else {
      for (uint64_t v = 0; v < m_.value(); ++v) step(m_.Element(v));
    }
  }

  const RunResult& result_;
  const Modulus& m_;
  std::span<const PartyId> coalition_;
  PartyId victim_;
  std::set<FieldElement> totals_;
};

}  // namespace

bool CoalitionView::Contains(PartyId p) const {
  return InCoalition(coalition, p);
}

Coalition MakeCoalition(std::vector<PartyId> members, int n) {
  std::sort(members.begin(), members.end());
  if (members.empty()) {
    throw Error(ErrorCode::kInvalidCoalition, "coalition is empty");
  }
  if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
    throw Error(ErrorCode::kInvalidCoalition, "coalition repeats a party");
  }
  if (members.front().index < 1 || members.back().index > n) {
    throw Error(ErrorCode::kInvalidCoalition,
                "coalition names a party outside P1..P" + std::to_string(n));
  }
  if (static_cast<int>(members.size()) >= n) {
    throw Error(ErrorCode::kInvalidCoalition,
                "coalition contains every party; no victim remains");
  }
  return members;
}

CoalitionView ExtractView(const RunResult& result,
                          std::span<const PartyId> coalition) {
  const Modulus& m = result.modulus;
  CoalitionView view;
  view.coalition =
      MakeCoalition({coalition.begin(), coalition.end()}, result.parties());
  view.parties = result.parties();
  view.segments = result.segments.segments();
  view.has_mask = result.mask.has_value();
  const int vars = view.variable_count();
  const FieldElement one = m.Element(1);

  std::vector<FieldElement> running(vars, m.Zero());
  for (const TraceEvent& e : result.trace) {
    const int var = view.SegmentVariable(e.sender, e.round);
    running[var] = m.Add(running[var], one);
    if (e.hop == 1 && view.has_mask) {
      running[view.MaskVariable()] = m.Add(running[view.MaskVariable()], one);
    }
    if (view.Contains(e.sender) || view.Contains(e.receiver)) {
      view.equations.push_back({running, e.payload, MessageOrigin(e)});
    }
  }

  for (PartyId p : view.coalition) {
    for (int j = 1; j <= view.segments; ++j) {
      std::vector<FieldElement> row(vars, m.Zero());
      row[view.SegmentVariable(p, j)] = one;
      view.equations.push_back({std::move(row), result.segments.at(p.index, j),
                                "own d[" + std::to_string(p.index) + "][" +
                                    std::to_string(j) + "]"});
    }
  }
  if (view.has_mask && view.Contains(kInitiator)) {
    std::vector<FieldElement> row(vars, m.Zero());
    row[view.MaskVariable()] = one;
    view.equations.push_back({std::move(row), *result.mask, "own mask"});
  }

  std::vector<FieldElement> total(vars, one);
  if (view.has_mask) total[view.MaskVariable()] = m.Zero();
  view.equations.push_back({std::move(total), result.announced, "announced"});
  return view;
}

LeakageVerdict DecideLeakage(const CoalitionView& view, PartyId victim,
                             const Modulus& m) {
  CheckVictim(view.coalition, victim, view.parties);
  return VerdictFor(view, ReduceView(view, m), victim, m);
}

int UnknownCount(const RunResult& result, std::span<const PartyId> coalition) {
  const int honest = result.parties() - static_cast<int>(coalition.size());
  int unknowns = honest * result.segments.segments();
  if (result.mask && !InCoalition(coalition, kInitiator)) ++unknowns;
  return unknowns;
}

LeakageVerdict BruteForceLeakage(const RunResult& result,
                                 std::span<const PartyId> coalition,
                                 PartyId victim) {
  Coalition members =
      MakeCoalition({coalition.begin(), coalition.end()}, result.parties());
  CheckVictim(members, victim, result.parties());
  const int unknowns = UnknownCount(result, members);
  if (result.modulus.value() > kMaxEnumerationModulus ||
      unknowns > kMaxEnumerationUnknowns) {
    throw Error(
        ErrorCode::kTooLargeToEnumerate,
        "enumeration needs p <= " + std::to_string(kMaxEnumerationModulus) +
            " and <= " + std::to_string(kMaxEnumerationUnknowns) +
            " unknowns; got p = " + std::to_string(result.modulus.value()) +
            ", " + std::to_string(unknowns) + " unknowns");
  }
  return Enumerator(result, members, victim).Solve();
}

int64_t PrivacyMatrix::oracle_disagreements() const {
  int64_t total = 0;
  for (const PrivacyRow& r : rows) total += r.oracle_disagreements;
  return total;
}

PrivacyMatrix BuildPrivacyMatrix(Variant v, int n, const Modulus& m,
                                 uint64_t seed, const PrivacyOptions& options) {
  auto inputs = RandomInputs(n, m, seed);
  RunResult run = RunProtocol(v, inputs, m, seed, options.segments);

  PrivacyMatrix matrix{v, n, run.segments.segments(), m.value(), seed, {}};
  const bool oracle_modulus = m.value() <= kMaxEnumerationModulus;

  for (int s = 2; s <= n - 1; ++s) {
    PrivacyRow row;
    row.coalition_size = s;
    ForEachCoalition(n, s, [&](const Coalition& c) {
      if (row.coalitions_checked == kMaxCoalitionsPerSize) {
        row.exhaustive = false;
        return false;
      }
      ++row.coalitions_checked;
      CoalitionView view = ExtractView(run, c);
      ReducedSystem reduced = ReduceView(view, m);
      const bool oracle = options.cross_check && oracle_modulus &&
                          UnknownCount(run, c) <= kMaxEnumerationUnknowns;
      bool any = false;
      for (int victim = 1; victim <= n; ++victim) {
        const PartyId p{victim};
        if (view.Contains(p)) continue;
        ++row.pairs_checked;
        LeakageVerdict verdict = VerdictFor(view, reduced, p, m);
        if (oracle) {
          LeakageVerdict brute = BruteForceLeakage(run, c, p);
          ++row.oracle_checked;
          if (brute.determined != verdict.determined ||
              brute.value != verdict.value) {
            ++row.oracle_disagreements;
          }
        }
        if (!verdict.determined) continue;
        any = true;
        ++row.pairs_leaking;
        if (!row.leaks) {
          row.leaks = true;
          row.witness_coalition = c;
          row.witness_victim = p;
        }
        if (p == kInitiator && !row.initiator_leaks) {
          row.initiator_leaks = true;
          row.initiator_witness = c;
        }
      }
      if (any) ++row.coalitions_leaking;
      return true;
    });
    matrix.rows.push_back(std::move(row));
  }
  return matrix;
}

}  // namespace sumlab
