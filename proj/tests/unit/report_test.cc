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

#include <sstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "sumlab/error.h"

namespace sumlab {
namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

TEST(TraceJsonlTest, StableKeyOrder) {
  const Modulus m = Modulus::Make(5);
  std::vector<TraceEvent> trace = {
      {1, 1, PartyId{1}, PartyId{2}, m.Element(3)},
      {1, 2, PartyId{2}, PartyId{1}, m.Element(0)}};
  std::ostringstream os;
  WriteTraceJsonl(os, trace);
  EXPECT_EQ(
      os.str(),
      "{\"round\":1,\"hop\":1,\"sender\":1,\"receiver\":2,\"payload\":3}\n"
      "{\"round\":1,\"hop\":2,\"sender\":2,\"receiver\":1,\"payload\":0}\n");
  std::istringstream is(os.str());
  EXPECT_EQ(ReadTraceJsonl(is, m), trace);
}

TEST(TraceJsonlTest, RejectsBadLines) {
  const Modulus m = Modulus::Make(5);
  std::istringstream garbage("{\"round\":1}\n");
  EXPECT_THROW(ReadTraceJsonl(garbage, m), Error);
  std::istringstream unreduced(
      "{\"round\":1,\"hop\":1,\"sender\":1,\"receiver\":2,\"payload\":9}\n");
  EXPECT_THROW(ReadTraceJsonl(unreduced, m), Error);
}

TEST(ScheduleJsonTest, ModifiedCk) {
  EXPECT_EQ(ScheduleJson(Schedule(Variant::kModifiedCk, 4)),
            "{\"variant\":\"modified-ck\",\"n\":4,\"rounds\":[[1,2,3,4],"
            "[2,1,3,4],[2,3,1,4],[2,3,4,1]]}");
}

TEST(ComplexityCsvTest, Format) {
  std::vector<ComplexityRow> rows = {{4, 16, 16}, {5, 25, 25}};
  std::ostringstream os;
  WriteComplexityCsv(os, rows);
  EXPECT_EQ(os.str(), "n,messages,additions\n4,16,16\n5,25,25\n");
}

TEST(PrivacyJsonTest, Fields) {
  PrivacyMatrix pm =
      BuildPrivacyMatrix(Variant::kBaseline, 4, Modulus::Make(5), 3);
  auto j = nlohmann::ordered_json::parse(PrivacyMatrixJson(pm));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"variant", "n", "k", "p", "seed",
                                            "rows"}));
  EXPECT_EQ(j["variant"], "baseline");
  EXPECT_EQ(j["p"], 5);
  EXPECT_EQ(j["seed"], 3);
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_EQ(j["rows"][0]["coalition_size"], 2);
  EXPECT_EQ(j["rows"][0]["leaks"], true);
  EXPECT_EQ(j["rows"][0]["witness_coalition"],
            nlohmann::ordered_json::array({1, 3}));
  EXPECT_EQ(j["rows"][0]["witness_victim"], 2);
}

TEST(RunReportTest, RoundTripsThroughReplay) {
  const Modulus m = Modulus::Make(101);
  for (Variant v : {Variant::kBaseline, Variant::kModifiedCk}) {
    RunResult r = RunProtocol(v, RandomInputs(5, m, 2), m, 2);
    std::ostringstream trace;
    WriteTraceJsonl(trace, r.trace);
    std::istringstream in(trace.str());
    RunResult back = RunResultFromArtifacts(RunReportJson(r), in);
    EXPECT_EQ(back, r);
    EXPECT_TRUE(Replay(back));
  }
}

TEST(RunReportTest, TamperedTraceFailsReplay) {
  const Modulus m = Modulus::Make(101);
  RunResult r = RunProtocol(Variant::kModifiedCk, RandomInputs(4, m, 2), m, 2);
  std::ostringstream trace;
  WriteTraceJsonl(trace, r.trace);
  std::string text = trace.str();
  // Drop the last event.
  text.erase(text.rfind('{'));
  std::istringstream in(text);
  EXPECT_FALSE(Replay(RunResultFromArtifacts(RunReportJson(r), in)));
}

TEST(RunReportTest, ReportsSeedAndCounters) {
  const Modulus m = Modulus::Make(101);
  RunResult r = RunProtocol(Variant::kCkSecure, RandomInputs(4, m, 77), m, 77);
  const std::string report = RunReportJson(r);
  EXPECT_THAT(report, StartsWith("{\n  \"variant\": \"ck-secure\""));
  EXPECT_THAT(report, HasSubstr("\"seed\": 77"));
  EXPECT_THAT(report, HasSubstr("\"messages_sent\": 12"));
  EXPECT_THAT(report, HasSubstr("\"mask\": null"));
}

TEST(RunReportTest, MalformedReport) {
  std::istringstream empty;
  EXPECT_THROW(RunResultFromArtifacts("{}", empty), Error);
  EXPECT_THROW(RunResultFromArtifacts("not json", empty), Error);
}

}  // namespace
}  // namespace sumlab
