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

#ifndef TEMPLAR_REPAIR_DRIVER_H_
#define TEMPLAR_REPAIR_DRIVER_H_

#include <chrono>
#include <compare>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "templar/fault_localization.h"
#include "templar/interpreter.h"
#include "templar/pattern_catalog.h"

namespace templar {

enum class PatchVerdict { kPlausible, kPartial, kBroken };
enum class FixStatus { kFullyFixed, kPartiallyFixed, kUnfixed };
enum class LocalizationMode { kPerfect, kNormal };

std::string_view PatchVerdictName(PatchVerdict verdict);
std::string_view FixStatusName(FixStatus status);

// A candidate placed in the global schedule.
struct CandidatePatch {
  Candidate candidate;
  StatementId location;
  double suspiciousness = 0;
  int rank = 0;   // 1-based position of `location` in the suspicious list
  int match = 0;  // ordinal of the producing match on this statement
  int64_t sequence_no = -1;
};

// Total order of candidates: suspicious rank, traversal position, change
// action (Update, Insert, Delete, Move), catalog order, match, then donor
// distance (donor-free first), donor position and emission order.
struct ScheduleKey {
  int rank = 0;
  int traversal = 0;
  int action = 0;
  int pattern = 0;
  int match = 0;
  bool has_donor = false;
  int donor_distance = 0;
  int donor_position = 0;
  int generation = 0;

  auto operator<=>(const ScheduleKey&) const = default;
};

ScheduleKey KeyOf(const CandidatePatch& patch);

// Stable sort by KeyOf.
void ScheduleCandidates(std::vector<CandidatePatch>& candidates);

// Outcome of running the suite on a patched program. Tests are compared by
// name with the verdicts of the unpatched program.
struct Validation {
  PatchVerdict verdict = PatchVerdict::kBroken;
  std::vector<std::string> fixed_tests;   // previously failing, now passing
  std::vector<std::string> broken_tests;  // previously passing, now failing
};

// Runs the previously failing tests first and stops early once the verdict
// is known to be broken.
Validation ValidatePatch(const CheckedProgram& patched, std::string_view suite_path,
                         const std::vector<std::string>& failing,
                         const std::vector<std::string>& passing,
                         const RunOptions& options = {});

// What a repair run needs to know about one bug.
struct BugInput {
  std::string id;
  std::shared_ptr<const CheckedProgram> program;
  std::string suite_path;
  // Ground-truth buggy statements: the suspicious list in perfect mode and
  // the reference for the reported rank.
  std::vector<StatementId> buggy_statements;
  // Program with the developer fix applied, for the correctness flag.
  std::shared_ptr<const CheckedProgram> fixed;
};

struct RepairOptions {
  LocalizationMode mode = LocalizationMode::kNormal;
  bool exhaustive = false;
  // Unlimited when empty.
  std::optional<std::chrono::milliseconds> budget;
  int max_suspicious = 50;
  PatternFilter patterns;
  int per_match_cap = 20;
  RunOptions run;
  DistanceMetric metric = DistanceMetric::kTreePath;
  // Called after every validation, in order.
  std::function<void(const CandidatePatch&, const Validation&)> on_validate;
};

struct PatchRecord {
  std::string pattern_id;
  StatementId location;
  int rank = 0;
  int64_t sequence_no = 0;
  std::string file;
  std::string patched_text;  // printed patched file
  bool correct = false;
  std::vector<std::string> fixed_tests;
};

struct RepairOutcome {
  std::string bug_id;
  LocalizationMode mode = LocalizationMode::kNormal;
  FixStatus status = FixStatus::kUnfixed;
  // First plausible patch; in exhaustive mode `plausible_all` lists every one.
  std::optional<PatchRecord> plausible;
  std::vector<PatchRecord> plausible_all;
  std::vector<PatchRecord> partial;
  bool correct = false;
  int64_t candidates_generated = 0;
  int64_t candidates_rejected = 0;  // failed to apply, parse or type-check
  int64_t candidates_validated = 0;
  std::optional<int> buggy_rank;    // best position of a buggy statement
  int suspicious_count = 0;
  std::vector<std::string> failing_tests;
  bool budget_exhausted = false;
  double wall_seconds = 0;
};

class InvalidBug : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Suspicious statements outside the suite file, highest score first.
SuspiciousList LocalizeFaults(const CheckedProgram& program,
                              std::string_view suite_path,
                              const std::vector<CoverageTrace>& traces);

// Throws InvalidBug when the unpatched program passes every test.
RepairOutcome RunRepair(const BugInput& bug, const RepairOptions& options);

// Whether `patched` equals the ground truth on every non-suite file after
// normalization.
bool MatchesGroundTruth(const CheckedProgram& patched, const CheckedProgram& fixed,
                        std::string_view suite_path);

}  // namespace templar

#endif  // TEMPLAR_REPAIR_DRIVER_H_
