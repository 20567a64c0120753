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

#ifndef TEMPLAR_REPORT_H_
#define TEMPLAR_REPORT_H_

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "templar/corpus.h"
#include "templar/repair_driver.h"

namespace templar {

inline constexpr int kReportSchemaVersion = 1;

// Repairs every bug in order. `progress` runs after each bug.
std::vector<RepairOutcome> RunSuite(
    const std::vector<BugCase>& bugs, const RepairOptions& options,
    const std::function<void(const BugCase&, const RepairOutcome&)>& progress = {});

// Machine-readable report. Wall-clock times are left out so that two runs
// without a budget give the same bytes. `outcomes` pairs with `bugs`.
nlohmann::json BuildReport(const std::vector<BugCase>& bugs,
                           const std::vector<RepairOutcome>& outcomes,
                           const RepairOptions& options);

// Serialized form written by --report: two-space indent, trailing newline.
std::string SerializeReport(const nlohmann::json& report);

// Plain-text tables computed only from a report built by BuildReport.
std::string RenderHumanReport(const nlohmann::json& report);

// 1-based source line of a statement of `program`.
int StatementLine(const CheckedProgram& program, const StatementId& id);

}  // namespace templar

#endif  // TEMPLAR_REPORT_H_
