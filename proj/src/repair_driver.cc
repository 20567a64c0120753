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

#include "templar/repair_driver.h"

#include <algorithm>
#include <map>
#include <set>

#include "templar/normalize.h"

namespace templar {

std::string_view PatchVerdictName(PatchVerdict verdict) {
  switch (verdict) {
    case PatchVerdict::kPlausible: return "plausible";
    case PatchVerdict::kPartial: return "partial";
    case PatchVerdict::kBroken: return "broken";
  }
  return "?";
}

std::string_view FixStatusName(FixStatus status) {
  switch (status) {
    case FixStatus::kFullyFixed: return "fully-fixed";
    case FixStatus::kPartiallyFixed: return "partially-fixed";
    case FixStatus::kUnfixed: return "unfixed";
  }
  return "?";
}

ScheduleKey KeyOf(const CandidatePatch& patch) {
  const Candidate& c = patch.candidate;
  ScheduleKey key;
  key.rank = patch.rank;
  key.traversal = c.traversal;
  key.action = ActionPriority(c.descriptor->action);
  key.pattern = c.descriptor->index;
  key.match = patch.match;
  key.has_donor = c.patch.donor_distance.has_value();
  key.donor_distance = c.patch.donor_distance.value_or(0);
  key.donor_position = c.donor_position;
  key.generation = c.generation;
  return key;
}

void ScheduleCandidates(std::vector<CandidatePatch>& candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const CandidatePatch& a, const CandidatePatch& b) {
                     return KeyOf(a) < KeyOf(b);
                   });
}

Validation ValidatePatch(const CheckedProgram& patched, std::string_view suite_path,
                         const std::vector<std::string>& failing,
                         const std::vector<std::string>& passing,
                         const RunOptions& options) {
  Validation result;
  std::map<std::string, TestCase> tests;
  for (const TestCase& t : DiscoverTests(patched, suite_path)) tests[t.name] = t;
  RunOptions quiet = options;
  quiet.record_coverage = false;
  auto passes = [&](const std::string& name) {
    auto it = tests.find(name);
    return it != tests.end() &&
           RunTest(patched, it->second, quiet).verdict == Verdict::kPassed;
  };
  for (const std::string& name : failing) {
    if (passes(name)) result.fixed_tests.push_back(name);
  }
  if (result.fixed_tests.empty()) return result;
  for (const std::string& name : passing) {
    if (!passes(name)) {
      result.broken_tests.push_back(name);
      return result;
    }
  }
  result.verdict = result.fixed_tests.size() == failing.size() ? PatchVerdict::kPlausible
                                                               : PatchVerdict::kPartial;
  return result;
}

SuspiciousList LocalizeFaults(const CheckedProgram& program, std::string_view suite_path,
                              const std::vector<CoverageTrace>& traces) {
  std::vector<StatementId> universe;
  for (const SourceFile& file : program.program().files) {
    if (file.path == suite_path) continue;
    for (const StatementId& id : StatementsOf(file)) universe.push_back(id);
  }
  SuspiciousList ranked = Rank(BuildSpectrum(traces, universe));
  std::erase_if(ranked, [&](const Suspicious& s) { return s.id.file == suite_path; });
  return ranked;
}

bool MatchesGroundTruth(const CheckedProgram& patched, const CheckedProgram& fixed,
                        std::string_view suite_path) {
  for (const SourceFile& truth : fixed.program().files) {
    if (truth.path == suite_path) continue;
    int index = patched.program().FileIndex(truth.path);
    if (index < 0 || !NormalizeEqual(patched.file(index).ast, truth.ast)) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

class RepairRun {
 public:
  RepairRun(const BugInput& bug, const RepairOptions& options)
      : bug_(bug), options_(options), start_(Clock::now()) {}

  RepairOutcome Run() {
    outcome_.bug_id = bug_.id;
    outcome_.mode = options_.mode;
    const CheckedProgram& program = *bug_.program;
    std::vector<TestCase> tests = DiscoverTests(program, bug_.suite_path);
    std::vector<CoverageTrace> traces = RunTests(program, tests, options_.run);
    for (const CoverageTrace& t : traces) {
      (t.verdict == Verdict::kPassed ? passing_ : failing_).push_back(t.test);
    }
    if (failing_.empty()) {
      throw InvalidBug("bug " + bug_.id + ": the unpatched program passes every test");
    }
    outcome_.failing_tests = failing_;

    SuspiciousList suspicious;
    if (options_.mode == LocalizationMode::kPerfect) {
      suspicious = PerfectLocalization(bug_.buggy_statements);
    } else {
      suspicious = LocalizeFaults(program, bug_.suite_path, traces);
    }
    for (const StatementId& id : bug_.buggy_statements) {
      if (auto position = PositionOf(suspicious, id)) {
        if (!outcome_.buggy_rank || *position < *outcome_.buggy_rank) {
          outcome_.buggy_rank = position;
        }
      }
    }
    if (static_cast<int>(suspicious.size()) > options_.max_suspicious) {
      suspicious.resize(std::max(0, options_.max_suspicious));
    }
    outcome_.suspicious_count = static_cast<int>(suspicious.size());

    for (size_t i = 0; i < suspicious.size() && !done_; ++i) {
      if (Expired()) break;
      RepairStatement(suspicious[i], static_cast<int>(i) + 1);
    }

    if (outcome_.plausible) {
      outcome_.status = FixStatus::kFullyFixed;
      outcome_.correct = outcome_.plausible->correct;
    } else if (!outcome_.partial.empty()) {
      outcome_.status = FixStatus::kPartiallyFixed;
    }
    outcome_.wall_seconds =
        std::chrono::duration<double>(Clock::now() - start_).count();
    return std::move(outcome_);
  }

 private:
  bool Expired() {
    if (!options_.budget) return false;
    if (Clock::now() - start_ >= *options_.budget) outcome_.budget_exhausted = true;
    return outcome_.budget_exhausted;
  }

  void RepairStatement(const Suspicious& suspicious, int rank) {
    RepairSite site(bug_.program, suspicious.id, options_.metric);
    std::vector<PatternMatch> matches = MatchStatement(site, options_.patterns);
    std::vector<CandidatePatch> scheduled;
    for (size_t m = 0; m < matches.size(); ++m) {
      for (Candidate& c : GenerateCandidates(matches[m], site)) {
        CandidatePatch patch;
        patch.candidate = std::move(c);
        patch.location = suspicious.id;
        patch.suspiciousness = suspicious.score;
        patch.rank = rank;
        patch.match = static_cast<int>(m);
        scheduled.push_back(std::move(patch));
      }
    }
    ScheduleCandidates(scheduled);

    std::vector<int> verified(matches.size(), 0);
    std::vector<std::set<std::string>> seen_in_match(matches.size());
    for (CandidatePatch& patch : scheduled) {
      if (done_ || Expired()) return;
      if (verified[patch.match] >= options_.per_match_cap) continue;
      patch.sequence_no = outcome_.candidates_generated++;
      if (!VerifyCandidate(patch.candidate, site)) {
        ++outcome_.candidates_rejected;
        continue;
      }
      if (!seen_in_match[patch.match].insert(patch.candidate.patched_text).second) continue;
      ++verified[patch.match];
      // The same program may come from several patterns; it is judged once.
      if (!validated_texts_.insert(patch.candidate.patched_text).second) continue;
      if (Expired()) return;
      Validate(patch);
    }
  }

  void Validate(const CandidatePatch& patch) {
    const Candidate& c = patch.candidate;
    ++outcome_.candidates_validated;
    Validation v = ValidatePatch(*c.patched, bug_.suite_path, failing_, passing_,
                                 options_.run);
    if (options_.on_validate) options_.on_validate(patch, v);
    if (v.verdict == PatchVerdict::kBroken) return;
    PatchRecord record;
    record.pattern_id = c.patch.pattern_id;
    record.location = patch.location;
    record.rank = patch.rank;
    record.sequence_no = patch.sequence_no;
    record.file = c.patch.file;
    record.patched_text = c.patched_text;
    record.fixed_tests = v.fixed_tests;
    if (v.verdict == PatchVerdict::kPartial) {
      // Later partial patches of the same statement are abandoned.
      if (partial_locations_.insert(patch.location).second) {
        outcome_.partial.push_back(std::move(record));
      }
      return;
    }
    record.correct = bug_.fixed != nullptr &&
                     MatchesGroundTruth(*c.patched, *bug_.fixed, bug_.suite_path);
    if (!outcome_.plausible) outcome_.plausible = record;
    outcome_.plausible_all.push_back(std::move(record));
    if (!options_.exhaustive) done_ = true;
  }

  const BugInput& bug_;
  const RepairOptions& options_;
  Clock::time_point start_;
  RepairOutcome outcome_;
  std::vector<std::string> failing_;
  std::vector<std::string> passing_;
  std::set<std::string> validated_texts_;
  std::set<StatementId> partial_locations_;
  bool done_ = false;
};

}  // namespace

RepairOutcome RunRepair(const BugInput& bug, const RepairOptions& options) {
  return RepairRun(bug, options).Run();
}

}  // namespace templar
