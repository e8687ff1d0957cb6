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

#include "sumlab/report.h"

#include <string>

#include "json.hpp"
#include "sumlab/error.h"

namespace sumlab {
namespace {

using Json = nlohmann::ordered_json;

Json PartyList(std::span<const PartyId> parties) {
  Json out = Json::array();
  for (PartyId p : parties) out.push_back(p.index);
  return out;
}

Json ScheduleObject(const SwapSchedule& sched) {
  Json rounds = Json::array();
  for (const RingOrder& ring : sched.rounds) {
    rounds.push_back(PartyList(ring.parties()));
  }
  return Json{{"variant", VariantName(sched.variant)},
              {"n", sched.n},
              {"rounds", std::move(rounds)}};
}

Json ValueList(std::span<const FieldElement> values) {
  Json out = Json::array();
  for (FieldElement v : values) out.push_back(v.value());
  return out;
}

Variant VariantFromJson(const Json& j) {
  auto v = ParseVariant(j.get<std::string>());
  if (!v) throw Error(ErrorCode::kParseError, "unknown variant in report");
  return *v;
}

FieldElement ElementFromJson(const Json& j, const Modulus& m) {
  const uint64_t v = j.get<uint64_t>();
  if (v >= m.value()) {
    throw Error(ErrorCode::kParseError,
                "value " + std::to_string(v) + " is not reduced mod p");
  }
  return m.Element(v);
}

}  // namespace

void WriteTraceJsonl(std::ostream& os, std::span<const TraceEvent> trace) {
  for (const TraceEvent& e : trace) {
    Json line{{"round", e.round},
              {"hop", e.hop},
              {"sender", e.sender.index},
              {"receiver", e.receiver.index},
              {"payload", e.payload.value()}};
    os << line.dump() << '\n';
  }
}

std::vector<TraceEvent> ReadTraceJsonl(std::istream& is, const Modulus& m) {
  std::vector<TraceEvent> out;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      Json j = Json::parse(line);
      out.push_back({j.at("round").get<int>(), j.at("hop").get<int>(),
                     PartyId{j.at("sender").get<int>()},
                     PartyId{j.at("receiver").get<int>()},
                     ElementFromJson(j.at("payload"), m)});
    } catch (const Json::exception& ex) {
      throw Error(ErrorCode::kParseError,
                  "trace line " + std::to_string(lineno) + ": " + ex.what());
    }
  }
  return out;
}

std::string ScheduleJson(const SwapSchedule& sched) {
  return ScheduleObject(sched).dump();
}

void WriteComplexityCsv(std::ostream& os, std::span<const ComplexityRow> rows) {
  os << "n,messages,additions\n";
  for (const ComplexityRow& r : rows) {
    os << r.n << ',' << r.messages << ',' << r.additions << '\n';
  }
}

std::string PrivacyMatrixJson(const PrivacyMatrix& matrix) {
  Json rows = Json::array();
  for (const PrivacyRow& r : matrix.rows) {
    Json row{
        {"coalition_size", r.coalition_size},
        {"leaks", r.leaks},
        {"witness_coalition",
         r.witness_coalition ? PartyList(*r.witness_coalition) : Json(nullptr)},
        {"witness_victim",
         r.witness_victim ? Json(r.witness_victim->index) : Json(nullptr)},
        {"coalitions_checked", r.coalitions_checked},
        {"coalitions_leaking", r.coalitions_leaking},
        {"pairs_checked", r.pairs_checked},
        {"pairs_leaking", r.pairs_leaking},
        {"exhaustive", r.exhaustive},
        {"initiator_leaks", r.initiator_leaks},
        {"initiator_witness",
         r.initiator_witness ? PartyList(*r.initiator_witness) : Json(nullptr)},
        {"oracle_checked", r.oracle_checked},
        {"oracle_disagreements", r.oracle_disagreements}};
    rows.push_back(std::move(row));
  }
  Json out{{"variant", VariantName(matrix.variant)},
           {"n", matrix.n},
           {"k", matrix.segments},
           {"p", matrix.modulus},
           {"seed", matrix.seed},
           {"rows", std::move(rows)}};
  return out.dump(2) + "\n";
}

std::string RunReportJson(const RunResult& result) {
  Json segments = Json::array();
  for (int i = 1; i <= result.segments.parties(); ++i) {
    segments.push_back(ValueList(result.segments.row(i)));
  }
  Json out{{"variant", VariantName(result.variant)},
           {"n", result.parties()},
           {"k", result.segments.segments()},
           {"p", result.modulus.value()},
           {"seed", result.seed},
           {"inputs", ValueList(result.segments.inputs())},
           {"segments", std::move(segments)},
           {"mask", result.mask ? Json(result.mask->value()) : Json(nullptr)},
           {"announced", result.announced.value()},
           {"messages_sent", result.messages_sent},
           {"additions_performed", result.additions_performed},
           {"rounds_executed", result.rounds_executed},
           {"schedule", ScheduleObject(result.schedule)}};
  return out.dump(2) + "\n";
}

RunResult RunResultFromArtifacts(const std::string& report_json,
                                 std::istream& trace_jsonl) {
  try {
    Json j = Json::parse(report_json);
    const Modulus m = Modulus::Make(j.at("p").get<uint64_t>());

    std::vector<FieldElement> inputs;
    for (const Json& v : j.at("inputs"))
      inputs.push_back(ElementFromJson(v, m));
    std::vector<std::vector<FieldElement>> rows;
    for (const Json& row : j.at("segments")) {
      std::vector<FieldElement> r;
      for (const Json& v : row) r.push_back(ElementFromJson(v, m));
      rows.push_back(std::move(r));
    }

    const Json& sj = j.at("schedule");
    SwapSchedule sched{
        VariantFromJson(sj.at("variant")), sj.at("n").get<int>(), {}};
    for (const Json& ring : sj.at("rounds")) {
      std::vector<PartyId> order;
      for (const Json& p : ring) order.push_back(PartyId{p.get<int>()});
      if (static_cast<int>(order.size()) != sched.n) {
        throw Error(ErrorCode::kParseError, "ring size does not match n");
      }
      sched.rounds.emplace_back(std::move(order));
    }

    RunResult r{
        .variant = VariantFromJson(j.at("variant")),
        .modulus = m,
        .seed = j.at("seed").get<uint64_t>(),
        .announced = ElementFromJson(j.at("announced"), m),
        .trace = ReadTraceJsonl(trace_jsonl, m),
        .messages_sent = j.at("messages_sent").get<int64_t>(),
        .additions_performed = j.at("additions_performed").get<int64_t>(),
        .rounds_executed = j.at("rounds_executed").get<int>(),
        .schedule = std::move(sched),
        .segments =
            SegmentMatrix::FromRows(std::move(inputs), std::move(rows), m),
        .mask = j.at("mask").is_null()
                    ? std::nullopt
                    : std::optional(ElementFromJson(j.at("mask"), m)),
    };
    return r;
  } catch (const Json::exception& ex) {
    throw Error(ErrorCode::kParseError,
                std::string("run report: ") + ex.what());
  }
}

}  // namespace sumlab
