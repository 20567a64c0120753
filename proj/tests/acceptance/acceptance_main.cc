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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "support/program_fuzzer.h"
#include "templar/corpus.h"
#include "templar/fault_localization.h"
#include "templar/normalize.h"
#include "templar/parser.h"
#include "templar/pattern_catalog.h"
#include "templar/printer.h"
#include "templar/repair_driver.h"
#include "templar/report.h"

namespace templar {
namespace {
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

const fs::path kSeeded = fs::path(TEMPLAR_SOURCE_DIR) / "tests/corpus/seeded";
const fs::path kConstructed = fs::path(TEMPLAR_SOURCE_DIR) / "tests/corpus/constructed";

// Collects failed checks of one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  std::string Summary() const {
    std::string out;
    for (const std::string& f : failures_) out += "\n    - " + f;
    if (failed_ > static_cast<int>(failures_.size())) {
      out += "\n    - ... " + std::to_string(failed_ - failures_.size()) + " more";
    }
    return out;
  }

 private:
  std::vector<std::string> failures_;
  int failed_ = 0;
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Fixed(double value, int digits = 2) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

std::vector<BugCase> FullCorpus() {
  std::vector<BugCase> bugs = LoadCorpus(kSeeded);
  for (BugCase& bug : LoadCorpus(kConstructed)) bugs.push_back(std::move(bug));
  return bugs;
}

// 1. Catalog counts per change property.
std::string CatalogFidelity(Check& check) {
  std::map<ChangeAction, int> action;
  std::map<Granularity, int> granularity;
  std::map<Spread, int> spread;
  for (const PatternDescriptor& d : Catalog()) {
    ++action[d.action];
    for (Granularity g : d.granularity) ++granularity[g];
    for (Spread s : d.spread) ++spread[s];
  }
  check.Expect(Catalog().size() == 35, "35 descriptors");
  check.Expect(action[ChangeAction::kUpdate] == 17, "Update 17");
  check.Expect(action[ChangeAction::kDelete] == 4, "Delete 4");
  check.Expect(action[ChangeAction::kInsert] == 13, "Insert 13");
  check.Expect(action[ChangeAction::kMove] == 1, "Move 1");
  check.Expect(granularity[Granularity::kExpression] == 21, "Expression 21");
  check.Expect(granularity[Granularity::kStatement] == 17, "Statement 17");
  check.Expect(granularity[Granularity::kMethod] == 1, "Method 1");
  check.Expect(spread[Spread::kSingle] == 30, "Single 30");
  check.Expect(spread[Spread::kMultiple] == 7, "Multiple 7");
  std::ostringstream out;
  out << "update/delete/insert/move " << action[ChangeAction::kUpdate] << "/"
      << action[ChangeAction::kDelete] << "/" << action[ChangeAction::kInsert] << "/"
      << action[ChangeAction::kMove] << ", expression/statement/method "
      << granularity[Granularity::kExpression] << "/" << granularity[Granularity::kStatement]
      << "/" << granularity[Granularity::kMethod] << ", single/multiple "
      << spread[Spread::kSingle] << "/" << spread[Spread::kMultiple];
  return out.str();
}

struct ModeRun {
  std::vector<BugCase> bugs;
  std::vector<RepairOutcome> outcomes;
  double seconds = 0;
  int fully_fixed = 0;
  int correct = 0;
};

ModeRun RunSeeded(LocalizationMode mode) {
  ModeRun run;
  run.bugs = LoadCorpus(kSeeded);
  RepairOptions options;
  options.mode = mode;
  Clock::time_point start = Clock::now();
  run.outcomes = RunSuite(run.bugs, options);
  run.seconds = Seconds(start);
  for (const RepairOutcome& o : run.outcomes) {
    if (o.status == FixStatus::kFullyFixed) ++run.fully_fixed;
    if (o.status == FixStatus::kFullyFixed && o.correct) ++run.correct;
  }
  return run;
}

// 2. Every seeded bug fully fixed under perfect localization, >= 90% correct.
std::string PerfectRepair(Check& check, const ModeRun& run) {
  size_t total = run.bugs.size();
  check.Expect(total >= 35, "seeded corpus holds at least 35 bugs");
  for (size_t i = 0; i < total; ++i) {
    check.Expect(run.outcomes[i].status == FixStatus::kFullyFixed,
                 run.bugs[i].id + " is " + std::string(FixStatusName(run.outcomes[i].status)));
  }
  double ratio = run.fully_fixed == 0 ? 0.0 : double(run.correct) / run.fully_fixed;
  check.Expect(ratio >= 0.9, "correct ratio " + Fixed(ratio) + " below 0.90");
  check.Expect(run.seconds < 300, "took " + Fixed(run.seconds) + " s");
  return std::to_string(run.fully_fixed) + "/" + std::to_string(total) + " fully fixed, " +
         std::to_string(run.correct) + " correct (" + Fixed(100 * ratio, 1) + "%), " +
         Fixed(run.seconds) + " s";
}

// 3. Normal localization fixes no more than perfect localization, and the
// buggy-statement rank is reported for every bug.
std::string NoiseDirection(Check& check, const ModeRun& perfect, const ModeRun& normal) {
  check.Expect(normal.fully_fixed <= perfect.fully_fixed,
               "normal fixes " + std::to_string(normal.fully_fixed) + " > perfect " +
                   std::to_string(perfect.fully_fixed));
  RepairOptions options;
  nlohmann::json report = BuildReport(normal.bugs, normal.outcomes, options);
  double fixed_sum = 0, other_sum = 0;
  int fixed_n = 0, other_n = 0;
  for (const nlohmann::json& row : report["bugs"]) {
    bool ranked = row["buggy_rank"].is_number_integer();
    check.Expect(ranked, row["id"].get<std::string>() + " lacks buggy_rank");
    if (!ranked) continue;
    if (row["status"] == "fully-fixed") {
      fixed_sum += row["buggy_rank"].get<int>();
      ++fixed_n;
    } else {
      other_sum += row["buggy_rank"].get<int>();
      ++other_n;
    }
  }
  check.Expect(normal.seconds < 600, "took " + Fixed(normal.seconds) + " s");
  std::string out = "normal " + std::to_string(normal.fully_fixed) + " vs perfect " +
                    std::to_string(perfect.fully_fixed) + " fully fixed, " +
                    std::to_string(normal.correct) + " correct; mean rank fixed " +
                    (fixed_n ? Fixed(fixed_sum / fixed_n) : "-") + ", not fixed " +
                    (other_n ? Fixed(other_sum / other_n) : "-") + ", " +
                    Fixed(normal.seconds) + " s";
  return out;
}

// 4. Ochiai and ranking against direct arithmetic and a sort.
std::string OchiaiOracle(Check& check) {
  std::mt19937 rng(404);
  Clock::time_point start = Clock::now();
  int statements_ranked = 0;
  for (int round = 0; round < 1000; ++round) {
    TestSpectrum spectrum;
    spectrum.failed = 1 + static_cast<int>(rng() % 6);
    spectrum.passed = static_cast<int>(rng() % 8);
    int count = 1 + static_cast<int>(rng() % 25);
    std::vector<std::tuple<double, StatementId>> oracle;
    for (int s = 0; s < count; ++s) {
      StatementId id{(rng() % 3) ? "src/A.mj" : "src/B.mj", static_cast<int>(rng() % 60)};
      if (spectrum.counts.count(id)) continue;
      SpectrumCounts c;
      c.e_f = static_cast<int>(rng() % (spectrum.failed + 1));
      c.e_p = static_cast<int>(rng() % (spectrum.passed + 1));
      c.n_f = spectrum.failed - c.e_f;
      c.n_p = spectrum.passed - c.e_p;
      spectrum.counts[id] = c;
      double denominator = std::sqrt(double(c.e_f + c.n_f) * double(c.e_f + c.e_p));
      double expected = denominator == 0 ? 0.0 : c.e_f / denominator;
      double actual = Ochiai(c.e_f, c.e_p, c.n_f);
      check.Expect(std::fabs(actual - expected) <= 1e-12,
                   "ochiai(" + std::to_string(c.e_f) + "," + std::to_string(c.e_p) + "," +
                       std::to_string(c.n_f) + ")");
      if (expected > 0) oracle.emplace_back(-expected, id);
    }
    std::sort(oracle.begin(), oracle.end());
    SuspiciousList ranked = Rank(spectrum);
    bool same = ranked.size() == oracle.size();
    for (size_t i = 0; same && i < ranked.size(); ++i) {
      same = ranked[i].id == std::get<1>(oracle[i]) &&
             std::fabs(ranked[i].score + std::get<0>(oracle[i])) <= 1e-12;
    }
    check.Expect(same, "rank order differs in round " + std::to_string(round));
    statements_ranked += static_cast<int>(ranked.size());
  }
  double seconds = Seconds(start);
  check.Expect(seconds < 10, "took " + Fixed(seconds) + " s");
  return "1000 spectra, " + std::to_string(statements_ranked) + " ranked statements, " +
         Fixed(seconds, 3) + " s";
}

// 5. Candidate order against the documented total order.
std::string SchedulingOrder(Check& check) {
  std::mt19937 rng(505);
  const std::vector<PatternDescriptor>& catalog = Catalog();
  auto action_rank = [](ChangeAction a) {
    switch (a) {
      case ChangeAction::kUpdate: return 0;
      case ChangeAction::kInsert: return 1;
      case ChangeAction::kDelete: return 2;
      case ChangeAction::kMove: return 3;
    }
    return 4;
  };
  Clock::time_point start = Clock::now();
  size_t candidates = 0;
  for (int round = 0; round < 500; ++round) {
    // A few statements with distinct scores; rank follows the score.
    int statement_count = 1 + static_cast<int>(rng() % 4);
    std::vector<double> scores;
    std::set<int> used;
    while (static_cast<int>(scores.size()) < statement_count) {
      int s = 1 + static_cast<int>(rng() % 100);
      if (used.insert(s).second) scores.push_back(s / 100.0);
    }
    std::vector<double> sorted_scores = scores;
    std::sort(sorted_scores.rbegin(), sorted_scores.rend());

    std::vector<CandidatePatch> patches(1 + rng() % 40);
    for (size_t i = 0; i < patches.size(); ++i) {
      CandidatePatch& p = patches[i];
      double score = scores[rng() % scores.size()];
      p.suspiciousness = score;
      p.rank = 1 + static_cast<int>(std::find(sorted_scores.begin(), sorted_scores.end(),
                                              score) - sorted_scores.begin());
      p.location = StatementId{"src/A.mj", p.rank};
      p.match = static_cast<int>(rng() % 3);
      p.candidate.descriptor = &catalog[rng() % catalog.size()];
      p.candidate.traversal = static_cast<int>(rng() % 5);
      p.candidate.donor_position = static_cast<int>(rng() % 4) - 1;
      p.candidate.generation = static_cast<int>(i);
      if (rng() % 3) p.candidate.patch.donor_distance = static_cast<int>(rng() % 5);
      p.sequence_no = static_cast<int64_t>(i);
    }
    using Key = std::tuple<double, int, int, int, int, int, int, int, int, int64_t>;
    auto key = [&](const CandidatePatch& p) {
      const Candidate& c = p.candidate;
      return Key(-p.suspiciousness, c.traversal, action_rank(c.descriptor->action),
                 c.descriptor->index, p.match, c.patch.donor_distance ? 1 : 0,
                 c.patch.donor_distance.value_or(0), c.donor_position, c.generation,
                 p.sequence_no);
    };
    std::vector<Key> expected;
    for (const CandidatePatch& p : patches) expected.push_back(key(p));
    std::sort(expected.begin(), expected.end());
    ScheduleCandidates(patches);
    std::vector<Key> actual;
    for (const CandidatePatch& p : patches) actual.push_back(key(p));
    check.Expect(actual == expected, "order differs in round " + std::to_string(round));
    candidates += patches.size();
  }
  double seconds = Seconds(start);
  check.Expect(seconds < 10, "took " + Fixed(seconds) + " s");
  return "500 sets, " + std::to_string(candidates) + " candidates, " + Fixed(seconds, 3) + " s";
}

// Validations the exhaustive driver should perform, enumerated without the
// driver. Inside one match the schedule order is the donor order, so each
// match contributes its first `cap` distinct verified programs; identical
// programs are validated once overall.
struct Enumerated {
  int validations = 0;
  int plausible = 0;
};

Enumerated EnumerateValidations(const BugInput& bug, int cap) {
  std::vector<std::string> failing;
  std::vector<std::string> passing;
  for (const CoverageTrace& t :
       RunTests(*bug.program, DiscoverTests(*bug.program, bug.suite_path))) {
    (t.verdict == Verdict::kPassed ? passing : failing).push_back(t.test);
  }
  Enumerated out;
  std::set<std::string> seen;
  for (const StatementId& id : bug.buggy_statements) {
    RepairSite site(bug.program, id);
    for (const PatternMatch& match : MatchStatement(site)) {
      for (const Candidate& c : ApplyPattern(match, site, cap)) {
        if (!seen.insert(c.patched_text).second) continue;
        ++out.validations;
        Validation v = ValidatePatch(*c.patched, bug.suite_path, failing, passing);
        if (v.verdict == PatchVerdict::kPlausible) ++out.plausible;
      }
    }
  }
  return out;
}

// 6. Stop-on-first versus exhaustive on the constructed multi-patch bugs.
std::string StopOnFirst(Check& check) {
  std::ostringstream out;
  for (const char* id : {"multi-boundary", "multi-dead-write", "multi-int-division",
                         "multi-null-deref", "multi-wrong-operator"}) {
    BugInput bug = ToInput(LoadBug(kConstructed / id));
    RepairOptions options;
    options.mode = LocalizationMode::kPerfect;
    int after_plausible = 0;
    bool seen_plausible = false;
    options.on_validate = [&](const CandidatePatch&, const Validation& v) {
      if (seen_plausible) ++after_plausible;
      if (v.verdict == PatchVerdict::kPlausible) seen_plausible = true;
    };
    RepairOutcome first = RunRepair(bug, options);
    check.Expect(first.status == FixStatus::kFullyFixed, std::string(id) + " not fixed");
    check.Expect(after_plausible == 0, std::string(id) + ": " +
                                           std::to_string(after_plausible) +
                                           " validations after the first plausible patch");
    check.Expect(first.plausible_all.size() == 1, std::string(id) + ": default mode kept " +
                                                      std::to_string(first.plausible_all.size()));

    options.exhaustive = true;
    options.on_validate = nullptr;
    RepairOutcome all = RunRepair(bug, options);
    Enumerated oracle = EnumerateValidations(bug, options.per_match_cap);
    check.Expect(all.candidates_validated == oracle.validations,
                 std::string(id) + ": validated " + std::to_string(all.candidates_validated) +
                     ", expected " + std::to_string(oracle.validations));
    check.Expect(static_cast<int>(all.plausible_all.size()) == oracle.plausible,
                 std::string(id) + ": reported " + std::to_string(all.plausible_all.size()) +
                     " plausible, expected " + std::to_string(oracle.plausible));
    check.Expect(all.plausible_all.size() >= 2, std::string(id) + ": fewer than 2 plausible");
    check.Expect(first.plausible && all.plausible &&
                     first.plausible->sequence_no == all.plausible->sequence_no,
                 std::string(id) + ": first plausible patch differs between modes");
    out << (out.tellp() > 0 ? "; " : "") << id << " " << first.candidates_validated << "->"
        << all.candidates_validated << " validated, " << all.plausible_all.size()
        << " plausible";
  }
  return out.str();
}

// Re-checks a candidate from its printed text alone.
bool Rechecks(const Program& original, const Candidate& c) {
  try {
    Program patched = original;
    int index = patched.FileIndex(c.patch.file);
    if (index < 0) return false;
    patched.files[index] = ParseSourceFile(c.patch.file, c.patched_text);
    return TypeCheck(std::move(patched)).ok();
  } catch (const std::exception&) {
    return false;
  }
}

// 7. Every emitted candidate parses and type-checks.
std::string TypePreservation(Check& check, const std::vector<BugCase>& corpus) {
  Clock::time_point start = Clock::now();
  int candidates = 0;
  int violations = 0;
  auto sweep = [&](const std::shared_ptr<const CheckedProgram>& program,
                   const std::string& label) {
    for (const SourceFile& file : program->program().files) {
      if (file.path == kSuitePath) continue;
      for (const StatementId& id : StatementsOf(file)) {
        RepairSite site(program, id);
        for (const PatternMatch& match : MatchStatement(site)) {
          for (const Candidate& c : ApplyPattern(match, site)) {
            ++candidates;
            if (!Rechecks(program->program(), c)) {
              ++violations;
              check.Expect(false, label + " " + match.descriptor->id + " at " + id.ToString());
            }
          }
        }
      }
    }
  };
  for (const BugCase& bug : corpus) sweep(bug.program, bug.id);
  int fuzzed = 0;
  for (uint32_t seed = 7000; fuzzed < 200; ++seed, ++fuzzed) {
    CheckResult checked = TypeCheckSource(ProgramFuzzer(seed).Generate(), "src/Fuzz.mj");
    check.Expect(checked.ok(), "fuzzed program " + std::to_string(seed) + " is ill-typed");
    if (checked.ok()) sweep(checked.program, "fuzz-" + std::to_string(seed));
  }
  check.Expect(candidates > 0, "no candidates");
  return std::to_string(candidates) + " candidates over " + std::to_string(corpus.size()) +
         " corpus bugs and " + std::to_string(fuzzed) + " fuzzed programs, " +
         std::to_string(violations) + " violations, " + Fixed(Seconds(start)) + " s";
}

// 8. Partial fixes on the two-fault bug.
std::string PartialSemantics(Check& check) {
  BugCase bug = LoadBug(kConstructed / "partial-two-faults");
  RepairOptions options;
  options.mode = LocalizationMode::kPerfect;
  std::map<StatementId, int> partial_verdicts;
  options.on_validate = [&](const CandidatePatch& p, const Validation& v) {
    if (v.verdict == PatchVerdict::kPartial) ++partial_verdicts[p.location];
  };
  RepairOutcome outcome = RunRepair(ToInput(bug), options);
  check.Expect(outcome.status == FixStatus::kPartiallyFixed,
               "status " + std::string(FixStatusName(outcome.status)));
  check.Expect(!outcome.plausible.has_value(), "a plausible patch was reported");
  check.Expect(!outcome.partial.empty(), "no partial patch");

  // Independent verdict: rerun the whole suite on each reported patch.
  std::map<std::string, Verdict> before;
  for (const CoverageTrace& t :
       RunTests(*bug.program, DiscoverTests(*bug.program, kSuitePath))) {
    before[t.test] = t.verdict;
  }
  std::set<StatementId> locations;
  for (const PatchRecord& r : outcome.partial) {
    check.Expect(locations.insert(r.location).second,
                 "two partial patches at " + r.location.ToString());
    Program patched = bug.program->program();
    patched.files[patched.FileIndex(r.file)] = ParseSourceFile(r.file, r.patched_text);
    CheckResult checked = TypeCheck(std::move(patched));
    check.Expect(checked.ok(), "partial patch does not type-check");
    if (!checked.ok()) continue;
    int newly_passing = 0;
    int still_failing = 0;
    std::vector<std::string> fixed;
    for (const CoverageTrace& t :
         RunTests(*checked.program, DiscoverTests(*checked.program, kSuitePath))) {
      bool was_passing = before.at(t.test) == Verdict::kPassed;
      bool passes = t.verdict == Verdict::kPassed;
      check.Expect(!was_passing || passes, "partial patch breaks " + t.test);
      if (!was_passing && passes) ++newly_passing, fixed.push_back(t.test);
      if (!was_passing && !passes) ++still_failing;
    }
    check.Expect(newly_passing > 0 && still_failing > 0,
                 "patch at " + r.location.ToString() + " is not a partial fix");
    check.Expect(fixed == r.fixed_tests, "reported fixed tests differ from rerun");
  }
  int suppressed = 0;
  for (const auto& [location, count] : partial_verdicts) {
    check.Expect(locations.count(location) == 1,
                 "partial verdict at " + location.ToString() + " not reported");
    suppressed += count - 1;
  }
  check.Expect(suppressed > 0, "no same-statement partial patch to deduplicate");
  return std::string(FixStatusName(outcome.status)) + ", " +
         std::to_string(outcome.partial.size()) + " partial patches kept at distinct " +
         "statements, " + std::to_string(suppressed) + " same-statement duplicates dropped";
}

// 9. Printing is a parse fixpoint and reports are reproducible.
std::string RoundTripAndDeterminism(Check& check, const std::vector<BugCase>& corpus) {
  int files = 0;
  for (const BugCase& bug : corpus) {
    for (const CheckedProgram* program : {bug.program.get(), bug.fixed.get()}) {
      for (const SourceFile& file : program->program().files) {
        ++files;
        SourceFile parsed = ParseSourceFile(file.path, file.text);
        std::string printed = PrettyPrint(parsed.ast);
        SourceFile again = ParseSourceFile(file.path, printed);
        check.Expect(StructurallyEqual(parsed.ast, again.ast) &&
                         PrettyPrint(again.ast) == printed,
                     bug.id + " " + file.path + " is not a fixpoint");
      }
    }
  }
  RepairOptions options;
  options.exhaustive = true;
  std::string first = SerializeReport(BuildReport(corpus, RunSuite(corpus, options), options));
  std::string second = SerializeReport(BuildReport(corpus, RunSuite(corpus, options), options));
  check.Expect(first == second, "reports differ between runs");
  return std::to_string(files) + " files round-trip, two exhaustive unlimited runs give " +
         std::to_string(first.size()) + "-byte identical reports";
}

int Main() {
  int failures = 0;
  auto report = [&](int number, const std::string& title,
                    const std::function<std::string(Check&)>& body) {
    Check check;
    std::string detail;
    try {
      detail = body(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    if (!check.ok()) ++failures;
    std::cout << (check.ok() ? "PASS" : "FAIL") << "  " << number << ". " << title << ": "
              << detail << check.Summary() << std::endl;
  };

  std::vector<BugCase> corpus = FullCorpus();
  ModeRun perfect;
  ModeRun normal;
  report(1, "catalog fidelity", CatalogFidelity);
  report(2, "seeded corpus, perfect localization", [&](Check& check) {
    perfect = RunSeeded(LocalizationMode::kPerfect);
    return PerfectRepair(check, perfect);
  });
  report(3, "localization noise direction", [&](Check& check) {
    normal = RunSeeded(LocalizationMode::kNormal);
    return NoiseDirection(check, perfect, normal);
  });
  report(4, "ochiai and ranking oracle", OchiaiOracle);
  report(5, "scheduling order", SchedulingOrder);
  report(6, "stop on first plausible patch", StopOnFirst);
  report(7, "type preservation",
         [&](Check& check) { return TypePreservation(check, corpus); });
  report(8, "partial fix semantics", PartialSemantics);
  report(9, "round trip and determinism",
         [&](Check& check) { return RoundTripAndDeterminism(check, corpus); });
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " failing")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace templar

int main() { return templar::Main(); }
