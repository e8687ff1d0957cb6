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

#ifndef SUMLAB_REPORT_H_
#define SUMLAB_REPORT_H_

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sumlab/adversary.h"
#include "sumlab/engine.h"
#include "sumlab/topology.h"

namespace sumlab {

// Machine-readable artifacts. Every writer emits keys in a fixed order so
// identical inputs give byte-identical files.

// One JSON object per line: {"round","hop","sender","receiver","payload"}.
void WriteTraceJsonl(std::ostream& os, std::span<const TraceEvent> trace);
// Inverse of WriteTraceJsonl. Throws Error{kParseError}.
std::vector<TraceEvent> ReadTraceJsonl(std::istream& is, const Modulus& m);

// {"variant","n","rounds":[[1,2,3,4],...]}
std::string ScheduleJson(const SwapSchedule& sched);

// Header "n,messages,additions".
void WriteComplexityCsv(std::ostream& os, std::span<const ComplexityRow> rows);

// {"variant","n","k","p","seed","rows":[...]}
std::string PrivacyMatrixJson(const PrivacyMatrix& matrix);

// Run summary with everything Replay needs except the trace itself.
std::string RunReportJson(const RunResult& result);
// Rebuilds a RunResult from RunReportJson output plus the trace JSONL.
// Throws Error{kParseError} or the validation errors of the core types.
RunResult RunResultFromArtifacts(const std::string& report_json,
                                 std::istream& trace_jsonl);

}  // namespace sumlab

#endif  // SUMLAB_REPORT_H_
