// Copyright 2026 The Templar Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: `templar repair <bug-dir>` and
// `templar bench <corpus-root>`.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "templar/corpus.h"
#include "templar/repair_driver.h"
#include "templar/report.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCorpus = 2;
constexpr int kExitInternal = 3;

struct Flags {
  std::string target;
  bool perfect_fl = false;
  bool exhaustive = false;
  std::string timeout = "60";
  int max_suspicious = 50;
  std::vector<std::string> patterns;
  std::string report;
  bool seed_check = false;
};

void AddFlags(CLI::App* cmd, Flags& flags, const std::string& what) {
  cmd->add_option("target", flags.target, what)->required();
  cmd->add_flag("--perfect-fl", flags.perfect_fl,
                "use the ground-truth buggy statements as the suspicious list");
  cmd->add_flag("--exhaustive", flags.exhaustive,
                "validate every candidate and report all plausible patches");
  cmd->add_option("--timeout", flags.timeout,
                  "repair budget per bug in seconds, or 'unlimited'")
      ->capture_default_str();
  cmd->add_option("--max-suspicious", flags.max_suspicious,
                  "statements taken from the suspicious list")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--patterns", flags.patterns,
                  "comma-separated pattern ids or families (FP2 selects FP2.x)")
      ->delimiter(',');
  cmd->add_option("--report", flags.report, "write the JSON report to this path");
  cmd->add_flag("--seed-check", flags.seed_check, "only verify corpus invariants");
}

std::optional<std::chrono::milliseconds> ParseTimeout(const std::string& text) {
  if (text == "unlimited") return std::nullopt;
  size_t used = 0;
  double seconds = -1;
  try {
    seconds = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(seconds) || seconds < 0) {
    throw CLI::ValidationError("--timeout", "expected seconds or 'unlimited', got '" + text + "'");
  }
  return std::chrono::milliseconds(static_cast<int64_t>(std::llround(seconds * 1000)));
}

int Run(const Flags& flags, bool bench) {
  templar::RepairOptions options;
  options.mode = flags.perfect_fl ? templar::LocalizationMode::kPerfect
                                  : templar::LocalizationMode::kNormal;
  options.exhaustive = flags.exhaustive;
  options.budget = ParseTimeout(flags.timeout);
  options.max_suspicious = flags.max_suspicious;
  try {
    options.patterns = templar::PatternFilter(flags.patterns);
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("--patterns", e.what());
  }

  std::vector<templar::BugCase> bugs;
  if (bench) {
    bugs = templar::LoadCorpus(flags.target);
  } else {
    bugs.push_back(templar::LoadBug(flags.target));
  }
  if (flags.seed_check) {
    for (const templar::BugCase& bug : bugs) {
      std::cout << bug.id << ": ok (" << bug.failing_tests.size() << " failing test"
                << (bug.failing_tests.size() == 1 ? "" : "s") << ")\n";
    }
    std::cout << bugs.size() << " bug" << (bugs.size() == 1 ? "" : "s") << " verified\n";
    return kExitOk;
  }

  auto outcomes = templar::RunSuite(
      bugs, options, [](const templar::BugCase& bug, const templar::RepairOutcome& o) {
        std::cerr << bug.id << ": " << templar::FixStatusName(o.status) << '\n';
      });
  nlohmann::json report = templar::BuildReport(bugs, outcomes, options);
  if (!flags.report.empty()) {
    std::ofstream out(flags.report, std::ios::binary);
    out << templar::SerializeReport(report);
    if (!out) throw std::runtime_error("cannot write " + flags.report);
  }
  std::cout << templar::RenderHumanReport(report);
  if (!bench && outcomes.front().plausible) {
    std::cout << '\n' << report["bugs"][0]["plausible_patch"]["diff"].get<std::string>();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Template-based program repair for MiniJ"};
  app.require_subcommand(1);
  Flags repair_flags;
  Flags bench_flags;
  CLI::App* repair = app.add_subcommand("repair", "repair one bug directory");
  AddFlags(repair, repair_flags, "bug directory");
  CLI::App* bench = app.add_subcommand("bench", "repair every bug of a corpus");
  AddFlags(bench, bench_flags, "corpus root");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return repair->parsed() ? Run(repair_flags, false) : Run(bench_flags, true);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const templar::CorpusError& e) {
    std::cerr << "corpus error: " << e.what() << '\n';
    return kExitCorpus;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
