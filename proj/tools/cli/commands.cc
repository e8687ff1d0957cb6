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

#include "cli/commands.h"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "sumlab/adversary.h"
#include "sumlab/engine.h"
#include "sumlab/error.h"
#include "sumlab/report.h"

namespace sumlab::cli {
namespace {

// Largest n for which every C(n, s) stays within kMaxCoalitionsPerSize.
constexpr int kMaxPrivacyParties = 19;

void Field(std::ostream& os, std::string_view key, const auto& value) {
  os << std::left << std::setw(12) << key << value << '\n';
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  f << contents;
  if (!f) throw ConfigError("failed writing '" + path + "'");
}

std::string ReadFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string FormatCoalition(const Coalition& c) {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << '}';
  return os.str();
}

// Catches the error families shared by every command.
template <typename Fn>
int Guard(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    const bool usage = e.code() == ErrorCode::kTooFewParties ||
                       e.code() == ErrorCode::kInvalidArgument ||
                       e.code() == ErrorCode::kNotPrime ||
                       e.code() == ErrorCode::kTooSmall ||
                       e.code() == ErrorCode::kParseError ||
                       e.code() == ErrorCode::kTooLargeToEnumerate;
    err << "error: " << ErrorCodeName(e.code()) << ": " << e.what() << '\n';
    return usage ? kExitUsage : kExitInvariant;
  }
}

}  // namespace

int CmdRun(const ExperimentConfig& config, std::ostream& out,
           std::ostream& err) {
  return Guard(err, [&] {
    const Modulus m = Validate(config);
    const auto inputs = ResolveInputs(config, m);
    RunResult r = RunProtocol(config.variant, inputs, m, config.seed, config.k);

    Field(out, "variant", VariantName(r.variant));
    Field(out, "n", r.parties());
    Field(out, "k", r.segments.segments());
    Field(out, "modulus", m.value());
    Field(out, "seed", r.seed);
    Field(out, "sum", r.announced.value());
    Field(out, "messages", r.messages_sent);
    Field(out, "additions", r.additions_performed);
    Field(out, "rounds", r.rounds_executed);
    Field(out, "exchanges", ExchangeCount(r.schedule));
    if (config.inputs) {
      // The announcement is a residue; say so when it differs from the
      // plain integer sum.
      unsigned __int128 plain = 0;
      for (uint64_t x : *config.inputs) plain += x;
      if (plain >= m.value()) {
        out << "note: integer sum exceeds the modulus; the announced value "
               "is reduced mod p\n";
      }
    }

    if (!config.out.empty()) {
      std::ostringstream trace;
      WriteTraceJsonl(trace, r.trace);
      WriteFile(config.out, trace.str());
      Field(out, "trace", config.out);
    }
    if (!config.report.empty()) {
      WriteFile(config.report, RunReportJson(r));
      Field(out, "report", config.report);
    }
    return kExitOk;
  });
}

int CmdComplexity(const ExperimentConfig& config, int n_min, int n_max,
                  std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    if (n_max < n_min) throw ConfigError("empty n range");
    ExperimentConfig probe = config;
    probe.n = n_min;
    probe.inputs.reset();
    const Modulus m = Validate(probe);
    auto rows =
        ComplexityTable(config.variant, n_min, n_max, m, config.seed, config.k);

    out << std::left << std::setw(6) << "n" << std::setw(12) << "messages"
        << "additions\n";
    for (const ComplexityRow& row : rows) {
      out << std::left << std::setw(6) << row.n << std::setw(12) << row.messages
          << row.additions << '\n';
    }
    if (!config.out.empty()) {
      std::ostringstream csv;
      WriteComplexityCsv(csv, rows);
      WriteFile(config.out, csv.str());
    }
    return kExitOk;
  });
}

int CmdPrivacy(const ExperimentConfig& config, bool cross_check,
               std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    ExperimentConfig probe = config;
    probe.inputs.reset();
    const Modulus m = Validate(probe);
    if (config.n > kMaxPrivacyParties) {
      throw ConfigError("privacy scan supports n <= " +
                        std::to_string(kMaxPrivacyParties));
    }
    PrivacyMatrix matrix = BuildPrivacyMatrix(
        config.variant, config.n, m, config.seed, {config.k, cross_check});

    out << VariantName(matrix.variant) << "  n=" << matrix.n
        << "  k=" << matrix.segments << "  p=" << matrix.modulus
        << "  seed=" << matrix.seed << '\n';
    out << std::left << std::setw(6) << "size" << std::setw(7) << "leaks"
        << std::setw(24) << "witness" << std::setw(14) << "pairs"
        << std::setw(24) << "initiator" << "oracle\n";
    for (const PrivacyRow& row : matrix.rows) {
      std::string witness = "-";
      if (row.witness_coalition) {
        std::ostringstream w;
        w << FormatCoalition(*row.witness_coalition) << "->"
          << *row.witness_victim;
        witness = w.str();
      }
      std::string initiator =
          row.initiator_witness ? FormatCoalition(*row.initiator_witness) : "-";
      std::string oracle = std::to_string(row.oracle_checked) + " checked, " +
                           std::to_string(row.oracle_disagreements) +
                           " disagree";
      out << std::left << std::setw(6) << row.coalition_size << std::setw(7)
          << (row.leaks ? "yes" : "no") << std::setw(24) << witness
          << std::setw(14)
          << (std::to_string(row.pairs_leaking) + "/" +
              std::to_string(row.pairs_checked))
          << std::setw(24) << initiator << oracle << '\n';
    }
    if (!config.out.empty()) WriteFile(config.out, PrivacyMatrixJson(matrix));
    if (matrix.oracle_disagreements() != 0) {
      err << "error: analyzer and enumeration oracle disagree on "
          << matrix.oracle_disagreements() << " pair(s)\n";
      return kExitInvariant;
    }
    return kExitOk;
  });
}

int CmdReplay(const std::string& report_path, const std::string& trace_path,
              std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    const std::string report = ReadFile(report_path);
    std::istringstream trace(ReadFile(trace_path));
    RunResult r = RunResultFromArtifacts(report, trace);
    ReplayOutcome outcome = Replay(r);
    if (!outcome) {
      err << "error: replay failed: " << outcome.reason << '\n';
      return kExitInvariant;
    }
    Field(out, "replay", "ok");
    Field(out, "events", r.trace.size());
    Field(out, "sum", r.announced.value());
    return kExitOk;
  });
}

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Secure-sum protocol laboratory", "sumlab"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML config file; flags override it");

  ExperimentConfig config;
  std::string variant = "modified-ck";
  std::string inputs = "random";
  std::string range;
  std::string trace_path;
  std::optional<int> k;
  bool no_cross_check = false;

  app.add_option("--modulus", config.modulus, "Prime modulus p")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Random seed")->capture_default_str();
  app.add_option("--out", config.out, "Primary output artifact path");

  auto* run = app.add_subcommand("run", "Execute one protocol run");
  run->fallthrough();
  run->add_option("--variant", variant,
                  "baseline | k-secure | ck-secure | modified-ck")
      ->capture_default_str();
  run->add_option("--n", config.n, "Number of parties")->required();
  run->add_option("--k", k, "Segments per party (k-secure only)");
  run->add_option("--inputs", inputs, "Comma-separated inputs or 'random'")
      ->capture_default_str();
  run->add_option("--report", config.report, "Run summary JSON path");

  auto* complexity =
      app.add_subcommand("complexity", "Measured message/addition counts");
  complexity->fallthrough();
  complexity->add_option("--variant", variant)->capture_default_str();
  complexity->add_option("--range", range, "n or lo..hi")->required();
  complexity->add_option("--k", k, "Segments per party (k-secure only)");

  auto* privacy =
      app.add_subcommand("privacy", "Exhaustive coalition leakage matrix");
  privacy->fallthrough();
  privacy->add_option("--variant", variant)->capture_default_str();
  privacy->add_option("--n", config.n, "Number of parties")->required();
  privacy->add_option("--k", k, "Segments per party (k-secure only)");
  privacy->add_flag("--no-cross-check", no_cross_check,
                    "Skip the enumeration oracle");

  auto* replay = app.add_subcommand("replay", "Re-verify a stored run");
  replay->fallthrough();
  replay->add_option("--report", config.report, "Run summary JSON")->required();
  replay->add_option("--trace", trace_path, "Trace JSONL")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (replay->parsed()) return CmdReplay(config.report, trace_path, out, err);

  try {
    config.variant = ParseVariantOrThrow(variant);
    config.k = k;
    if (run->parsed()) config.inputs = ParseInputList(inputs);
    if (complexity->parsed()) {
      auto [lo, hi] = ParseRange(range);
      return CmdComplexity(config, lo, hi, out, err);
    }
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (run->parsed()) return CmdRun(config, out, err);
  return CmdPrivacy(config, !no_cross_check, out, err);
}

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("sumlab");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return Main(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sumlab::cli
