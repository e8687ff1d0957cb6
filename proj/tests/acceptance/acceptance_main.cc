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

// Acceptance suite. Prints one PASS/FAIL line per criterion (and per clause
// where a criterion has several) and exits nonzero if any fails.
//
//   acceptance                 run everything
//   acceptance --criterion 5   run one criterion

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.h"
#include "sumlab/adversary.h"
#include "sumlab/engine.h"
#include "sumlab/topology.h"

namespace sumlab {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr Variant kAllVariants[] = {Variant::kBaseline, Variant::kKSecure,
                                    Variant::kCkSecure, Variant::kModifiedCk};

// Thresholds.
constexpr int kCorrectnessTrials = 1000;
constexpr int kCorrectnessMaxParties = 10;
constexpr double kCorrectnessBudgetSeconds = 10.0;
constexpr int kScheduleMinParties = 4;
constexpr int kScheduleMaxParties = 12;
constexpr uint64_t kDeskModulus = 5;
constexpr double kPrivacyBudgetSeconds = 120.0;

int failures = 0;

void Report(bool ok, const std::string& id, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << "  " << detail
            << std::endl;
  if (!ok) ++failures;
}

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Describe(const Coalition& c, PartyId victim) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << "} -> " << victim;
  return os.str();
}

void CorrectnessCriterion() {
  const auto start = Clock::now();
  std::mt19937_64 gen(1);
  int64_t runs = 0;
  int64_t wrong = 0;
  for (uint64_t p : {kDeskModulus, Modulus::kDefault}) {
    const Modulus m = Modulus::Make(p);
    for (Variant v : kAllVariants) {
      for (int n = MinParties(v); n <= kCorrectnessMaxParties; ++n) {
        for (int t = 0; t < kCorrectnessTrials; ++t) {
          std::vector<FieldElement> xs;
          for (int i = 0; i < n; ++i) xs.push_back(m.Element(gen()));
          RunResult r = RunProtocol(v, xs, m, gen());
          ++runs;
          wrong += r.announced != SumInputs(xs, m);
        }
      }
    }
  }
  const double secs = SecondsSince(start);
  std::ostringstream d;
  d << "correctness: " << runs << " runs, " << wrong << " wrong sums, " << secs
    << " s (budget " << kCorrectnessBudgetSeconds << " s)";
  Report(wrong == 0 && secs < kCorrectnessBudgetSeconds, "C1", d.str());
}

std::string ReadFile(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  return cli::Main(args, out, err);
}

void ComplexityCriterion(const fs::path& tmp) {
  const Modulus m = Modulus::Default();
  bool counters_ok = true;
  for (int n = kScheduleMinParties; n <= kScheduleMaxParties; ++n) {
    RunResult r =
        RunProtocol(Variant::kModifiedCk, RandomInputs(n, m, n), m, n);
    counters_ok &= r.messages_sent == int64_t{n} * n &&
                   r.additions_performed == int64_t{n} * n;
  }
  Report(counters_ok, "C2a",
         "modified-ck messages_sent = additions_performed = n^2, n in [4,12]");

  const fs::path csv = tmp / "complexity.csv";
  const int rc = Cli({"complexity", "--variant", "modified-ck", "--range",
                      "4..12", "--out", csv.string()});
  std::istringstream in(ReadFile(csv));
  std::string line;
  std::getline(in, line);
  bool header_ok = line == "n,messages,additions";
  std::vector<int64_t> messages, additions;
  while (std::getline(in, line)) {
    int n = 0;
    long long msg = 0, add = 0;
    if (std::sscanf(line.c_str(), "%d,%lld,%lld", &n, &msg, &add) == 3) {
      messages.push_back(msg);
      additions.push_back(add);
    }
  }
  bool shape_ok = rc == 0 && header_ok && messages.size() == 9;
  for (size_t i = 2; shape_ok && i < messages.size(); ++i) {
    shape_ok = messages[i] - 2 * messages[i - 1] + messages[i - 2] == 2 &&
               additions[i] - 2 * additions[i - 1] + additions[i - 2] == 2;
  }
  Report(shape_ok, "C2b",
         "complexity CSV for n = 4..12 has constant second differences = 2");
}

void RoundsCriterion() {
  bool ok = true;
  std::ostringstream bad;
  for (int n = kScheduleMinParties; n <= kScheduleMaxParties; ++n) {
    SwapSchedule s = Schedule(Variant::kModifiedCk, n);
    const int rounds = static_cast<int>(s.rounds.size());
    const int exchanges = ExchangeCount(s);
    if (rounds != n || exchanges != n - 1) {
      ok = false;
      bad << " n=" << n << ":(" << rounds << "," << exchanges << ")";
    }
  }
  Report(
      ok, "C3",
      "modified-ck (rounds, exchanges) = (n, n-1) for n in [4,12]" + bad.str());
}

void NeighborCriterion() {
  bool changing = true;
  bool fixed = true;
  for (int n = kScheduleMinParties; n <= kScheduleMaxParties; ++n) {
    SwapSchedule mck = Schedule(Variant::kModifiedCk, n);
    SwapSchedule ks = Schedule(Variant::kKSecure, n);
    for (int v = 1; v <= n; ++v) {
      changing &= ConstantNeighborPairs(mck, PartyId{v}).empty();
    }
    for (int v = 2; v < n; ++v) {
      fixed &= !ConstantNeighborPairs(ks, PartyId{v}).empty();
    }
  }
  Report(changing, "C4a",
         "modified-ck: no victim keeps the same neighbors, n in [4,12]");
  Report(fixed, "C4b",
         "k-secure: every middle party keeps its neighbors, n in [4,12]");
}

struct Scan {
  // Leaking (coalition, victim) pairs by coalition size.
  std::vector<std::vector<std::pair<Coalition, PartyId>>> leaks;
  // Number of coalitions of each size that determine at least one victim.
  std::vector<int64_t> leaking_coalitions;
  std::vector<int64_t> coalitions;
};

Scan ScanAll(Variant v, int n, const Modulus& m, uint64_t seed) {
  RunResult r = RunProtocol(v, RandomInputs(n, m, seed), m, seed);
  Scan s;
  s.leaks.resize(n);
  s.leaking_coalitions.assign(n, 0);
  s.coalitions.assign(n, 0);
  for (int size = 1; size < n; ++size) {
    ForEachCoalition(n, size, [&](const Coalition& c) {
      CoalitionView view = ExtractView(r, c);
      bool any = false;
      for (int victim = 1; victim <= n; ++victim) {
        if (view.Contains(PartyId{victim})) continue;
        if (DecideLeakage(view, PartyId{victim}, m).determined) {
          s.leaks[size].emplace_back(c, PartyId{victim});
          any = true;
        }
      }
      ++s.coalitions[size];
      s.leaking_coalitions[size] += any;
      return true;
    });
  }
  return s;
}

void PrivacyCriterion() {
  const auto start = Clock::now();
  const Modulus m = Modulus::Make(kDeskModulus);

  for (int n : {3, 4, 5}) {
    Scan s = ScanAll(Variant::kBaseline, n, m, 0);
    const bool ok = !s.leaks[2].empty();
    Report(
        ok, "C5a",
        "baseline n=" + std::to_string(n) + ": a size-2 coalition leaks" +
            (ok ? " (" + Describe(s.leaks[2][0].first, s.leaks[2][0].second) +
                      ")"
                : ""));
  }

  for (int n : {4, 5}) {
    Scan s = ScanAll(Variant::kModifiedCk, n, m, 0);
    std::vector<std::pair<Coalition, PartyId>> small;
    for (int size = 1; size <= n - 2; ++size) {
      small.insert(small.end(), s.leaks[size].begin(), s.leaks[size].end());
    }
    std::string detail = "modified-ck n=" + std::to_string(n) +
                         ": no coalition of size <= n-2 leaks";
    if (!small.empty()) {
      detail += "; found " + std::to_string(small.size()) +
                " leaking pair(s), first " +
                Describe(small[0].first, small[0].second);
    }
    Report(small.empty(), "C5b", detail);
    const bool all = s.leaking_coalitions[n - 1] == s.coalitions[n - 1];
    Report(all, "C5b",
           "modified-ck n=" + std::to_string(n) +
               ": every size-(n-1) "
               "coalition leaks (" +
               std::to_string(s.leaking_coalitions[n - 1]) + "/" +
               std::to_string(s.coalitions[n - 1]) + ")");
  }

  for (int n : {4, 5}) {
    Scan s = ScanAll(Variant::kCkSecure, n, m, 0);
    Report(s.leaks[2].empty(), "C5c",
           "ck-secure n=" + std::to_string(n) + ": no size-2 coalition leaks");
    for (int size = 3; size < n; ++size) {
      std::string initiator = "none";
      std::string movers = "none";
      for (const auto& [c, victim] : s.leaks[size]) {
        if (victim == kInitiator && initiator == "none") {
          initiator = Describe(c, victim);
        }
        if (victim != kInitiator && movers == "none") {
          movers = Describe(c, victim);
        }
      }
      std::cout << "[INFO] C5c  ck-secure n=" << n << " size " << size << ": "
                << s.leaks[size].size()
                << " leaking pair(s); initiator attacked by " << initiator
                << "; first non-initiator victim " << movers << std::endl;
    }
  }

  const double secs = SecondsSince(start);
  Report(secs < kPrivacyBudgetSeconds, "C5",
         "exhaustive privacy scans took " + std::to_string(secs) +
             " s (budget 120 s)");
}

void OracleCriterion() {
  const Modulus m = Modulus::Make(kDeskModulus);
  const int n = 4;
  for (Variant v : kAllVariants) {
    RunResult r = RunProtocol(v, RandomInputs(n, m, 0), m, 0);
    int64_t compared = 0;
    int64_t disagree = 0;
    int64_t unsound = 0;
    for (int size = 1; size < n; ++size) {
      ForEachCoalition(n, size, [&](const Coalition& c) {
        CoalitionView view = ExtractView(r, c);
        for (int victim = 1; victim <= n; ++victim) {
          const PartyId p{victim};
          if (view.Contains(p)) continue;
          LeakageVerdict fast = DecideLeakage(view, p, m);
          LeakageVerdict slow = BruteForceLeakage(r, c, p);
          ++compared;
          disagree +=
              fast.determined != slow.determined || fast.value != slow.value;
          unsound += fast.determined && fast.value != r.segments.input(victim);
        }
        return true;
      });
    }
    Report(disagree == 0 && unsound == 0 && compared > 0, "C6",
           std::string(VariantName(v)) +
               " n=4 p=5: " + std::to_string(compared) + " pairs, " +
               std::to_string(disagree) + " disagreement(s)");
  }
}

void DeterminismCriterion(const fs::path& tmp) {
  struct Artifact {
    std::vector<std::string> args;
    std::vector<std::string> files;
  };
  auto make = [&](int i) {
    const std::string t = std::to_string(i);
    return std::vector<Artifact>{
        {{"run", "--variant", "modified-ck", "--n", "7", "--seed", "11",
          "--out", (tmp / ("trace" + t)).string(), "--report",
          (tmp / ("report" + t)).string()},
         {"trace" + t, "report" + t}},
        {{"run", "--variant", "baseline", "--n", "5", "--seed", "11", "--out",
          (tmp / ("btrace" + t)).string()},
         {"btrace" + t}},
        {{"privacy", "--variant", "modified-ck", "--n", "5", "--modulus", "5",
          "--seed", "11", "--out", (tmp / ("privacy" + t)).string()},
         {"privacy" + t}},
        {{"complexity", "--variant", "ck-secure", "--range", "4..9", "--out",
          (tmp / ("complexity" + t)).string()},
         {"complexity" + t}},
    };
  };
  bool ok = true;
  std::vector<Artifact> first = make(0), second = make(1);
  for (size_t a = 0; a < first.size(); ++a) {
    ok &= Cli(first[a].args) == 0;
    ok &= Cli(second[a].args) == 0;
    for (size_t f = 0; f < first[a].files.size(); ++f) {
      const std::string x = ReadFile(tmp / first[a].files[f]);
      const std::string y = ReadFile(tmp / second[a].files[f]);
      ok &= !x.empty() && x == y;
    }
  }
  Report(ok, "C7",
         "identical flags give byte-identical trace, report, privacy and "
         "complexity artifacts");
}

}  // namespace
}  // namespace sumlab

int main(int argc, char** argv) {
  using namespace sumlab;
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--criterion") only = std::stoi(argv[i + 1]);
  }
  const fs::path tmp = SUMLAB_ACCEPTANCE_TMPDIR;
  fs::create_directories(tmp);

  const std::vector<std::function<void()>> criteria = {
      CorrectnessCriterion,
      [&] { ComplexityCriterion(tmp); },
      RoundsCriterion,
      NeighborCriterion,
      PrivacyCriterion,
      OracleCriterion,
      [&] { DeterminismCriterion(tmp); },
  };
  for (size_t i = 0; i < criteria.size(); ++i) {
    if (only == 0 || only == static_cast<int>(i + 1)) criteria[i]();
  }
  std::cout << (failures == 0 ? "acceptance: all criteria passed"
                              : "acceptance: " + std::to_string(failures) +
                                    " check(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
