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

#include "templar/report.h"

#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "templar/printer.h"
#include "templar/unified_diff.h"

namespace templar {
using nlohmann::json;

int StatementLine(const CheckedProgram& program, const StatementId& id) {
  int index = program.program().FileIndex(id.file);
  if (index < 0) throw std::invalid_argument("unknown file " + id.file);
  const SourceFile& file = program.file(index);
  TreeIndex tree(file.ast);
  return file.LineOf(tree.at(id.preorder).span.begin);
}

std::vector<RepairOutcome> RunSuite(
    const std::vector<BugCase>& bugs, const RepairOptions& options,
    const std::function<void(const BugCase&, const RepairOutcome&)>& progress) {
  std::vector<RepairOutcome> outcomes;
  outcomes.reserve(bugs.size());
  for (const BugCase& bug : bugs) {
    outcomes.push_back(RunRepair(ToInput(bug), options));
    if (progress) progress(bug, outcomes.back());
  }
  return outcomes;
}

namespace {

json PatchJson(const BugCase& bug, const PatchRecord& record, bool with_correct) {
  const CheckedProgram& program = *bug.program;
  int index = program.program().FileIndex(record.file);
  std::string before = index >= 0 ? PrettyPrint(program.file(index).ast) : "";
  json patch = {
      {"pattern", record.pattern_id},
      {"file", record.file},
      {"line", StatementLine(program, record.location)},
      {"statement", record.location.preorder},
      {"rank", record.rank},
      {"sequence_no", record.sequence_no},
      {"fixed_tests", record.fixed_tests},
      {"diff", MakeUnifiedDiff(record.file, before, record.patched_text)},
  };
  if (with_correct) patch["correct"] = record.correct;
  return patch;
}

json OptionalInt(const std::optional<int>& value) {
  return value ? json(*value) : json(nullptr);
}

json Average(const std::vector<int>& values) {
  if (values.empty()) return nullptr;
  double sum = 0;
  for (int v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

}  // namespace

json BuildReport(const std::vector<BugCase>& bugs, const std::vector<RepairOutcome>& outcomes,
                 const RepairOptions& options) {
  if (bugs.size() != outcomes.size()) {
    throw std::invalid_argument("one outcome per bug is required");
  }
  json report;
  report["schema_version"] = kReportSchemaVersion;
  report["mode"] = options.mode == LocalizationMode::kPerfect ? "perfect" : "normal";
  report["exhaustive"] = options.exhaustive;
  report["max_suspicious"] = options.max_suspicious;
  report["budget_seconds"] =
      options.budget ? json(static_cast<double>(options.budget->count()) / 1000.0)
                     : json(nullptr);
  report["patterns"] = options.patterns.ids();

  json rows = json::array();
  int fully_correct = 0;
  int fully_plausible = 0;
  int partially = 0;
  int unfixed = 0;
  struct PatternTally {
    int correct = 0;
    int plausible = 0;
    std::vector<int> positions;
  };
  std::map<std::string, PatternTally> per_pattern;
  std::vector<int> fixed_ranks;
  std::vector<int> unfixed_ranks;

  for (size_t i = 0; i < bugs.size(); ++i) {
    const BugCase& bug = bugs[i];
    const RepairOutcome& o = outcomes[i];
    json row = {
        {"id", bug.id},
        {"expected_pattern", bug.expected_pattern ? json(*bug.expected_pattern) : json(nullptr)},
        {"status", std::string(FixStatusName(o.status))},
        {"correct", o.correct},
        {"buggy_rank", OptionalInt(o.buggy_rank)},
        {"suspicious_count", o.suspicious_count},
        {"failing_tests", o.failing_tests},
        {"candidates_generated", o.candidates_generated},
        {"candidates_rejected", o.candidates_rejected},
        {"candidates_validated", o.candidates_validated},
        {"budget_exhausted", o.budget_exhausted},
    };
    row["plausible_patch"] = o.plausible ? PatchJson(bug, *o.plausible, true) : json(nullptr);
    json all = json::array();
    for (const PatchRecord& r : o.plausible_all) all.push_back(PatchJson(bug, r, true));
    row["plausible_patches"] = std::move(all);
    json partial = json::array();
    for (const PatchRecord& r : o.partial) partial.push_back(PatchJson(bug, r, false));
    row["partial_patches"] = std::move(partial);
    rows.push_back(std::move(row));

    switch (o.status) {
      case FixStatus::kFullyFixed: {
        ++fully_plausible;
        if (o.correct) ++fully_correct;
        PatternTally& tally = per_pattern[o.plausible->pattern_id];
        ++tally.plausible;
        if (o.correct) ++tally.correct;
        if (o.buggy_rank) {
          tally.positions.push_back(*o.buggy_rank);
          fixed_ranks.push_back(*o.buggy_rank);
        }
        break;
      }
      case FixStatus::kPartiallyFixed:
        ++partially;
        if (o.buggy_rank) unfixed_ranks.push_back(*o.buggy_rank);
        break;
      case FixStatus::kUnfixed:
        ++unfixed;
        if (o.buggy_rank) unfixed_ranks.push_back(*o.buggy_rank);
        break;
    }
  }
  report["bugs"] = std::move(rows);

  json patterns = json::object();
  for (const auto& [id, tally] : per_pattern) {
    patterns[id] = {{"correct", tally.correct},
                    {"plausible", tally.plausible},
                    {"average_position", Average(tally.positions)}};
  }
  report["aggregates"] = {
      {"bugs", static_cast<int>(bugs.size())},
      {"fully_fixed", {{"correct", fully_correct}, {"plausible", fully_plausible}}},
      {"partially_fixed", partially},
      {"unfixed", unfixed},
      {"per_pattern", std::move(patterns)},
      // Not fully fixed covers partially fixed and unfixed bugs.
      {"average_rank", {{"fully_fixed", Average(fixed_ranks)},
                        {"not_fully_fixed", Average(unfixed_ranks)}}},
  };
  return report;
}

std::string SerializeReport(const json& report) { return report.dump(2) + "\n"; }

namespace {

std::string Cell(const json& value) {
  if (value.is_null()) return "-";
  if (value.is_boolean()) return value.get<bool>() ? "yes" : "no";
  if (value.is_number_float()) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", value.get<double>());
    return buffer;
  }
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

// Left-aligned columns sized to their widest cell.
std::string Table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << '\n';
  }
  return out.str();
}

}  // namespace

std::string RenderHumanReport(const json& report) {
  std::ostringstream out;
  out << "mode: " << Cell(report.at("mode"))
      << "  exhaustive: " << Cell(report.at("exhaustive"))
      << "  max-suspicious: " << Cell(report.at("max_suspicious"))
      << "  budget(s): " << (report.at("budget_seconds").is_null()
                                 ? std::string("unlimited")
                                 : Cell(report.at("budget_seconds")))
      << '\n';
  if (!report.at("patterns").empty()) {
    std::string list;
    for (const json& p : report.at("patterns")) list += (list.empty() ? "" : ",") + Cell(p);
    out << "patterns: " << list << '\n';
  }
  out << '\n';

  std::vector<std::vector<std::string>> rows = {
      {"bug", "expected", "status", "pattern", "correct", "rank", "validated"}};
  for (const json& bug : report.at("bugs")) {
    const json& patch = bug.at("plausible_patch");
    rows.push_back({Cell(bug.at("id")), Cell(bug.at("expected_pattern")),
                    Cell(bug.at("status")),
                    patch.is_null() ? "-" : Cell(patch.at("pattern")),
                    patch.is_null() ? "-" : Cell(bug.at("correct")),
                    Cell(bug.at("buggy_rank")), Cell(bug.at("candidates_validated"))});
  }
  out << Table(rows) << '\n';

  const json& agg = report.at("aggregates");
  const json& fully = agg.at("fully_fixed");
  out << "bugs: " << Cell(agg.at("bugs")) << '\n'
      << "fully fixed (correct/plausible): " << Cell(fully.at("correct")) << "/"
      << Cell(fully.at("plausible")) << '\n'
      << "partially fixed: " << Cell(agg.at("partially_fixed")) << '\n'
      << "unfixed: " << Cell(agg.at("unfixed")) << '\n'
      << "average buggy-statement rank: fully fixed "
      << Cell(agg.at("average_rank").at("fully_fixed")) << ", not fully fixed "
      << Cell(agg.at("average_rank").at("not_fully_fixed")) << "\n";

  const json& per_pattern = agg.at("per_pattern");
  if (!per_pattern.empty()) {
    out << '\n';
    std::vector<std::vector<std::string>> prows = {
        {"pattern", "correct/plausible", "avg position"}};
    for (const auto& [id, tally] : per_pattern.items()) {
      prows.push_back({id, Cell(tally.at("correct")) + "/" + Cell(tally.at("plausible")),
                       Cell(tally.at("average_position"))});
    }
    out << Table(prows);
  }
  return out.str();
}

}  // namespace templar
