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

#ifndef TEMPLAR_FAULT_LOCALIZATION_H_
#define TEMPLAR_FAULT_LOCALIZATION_H_

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "templar/interpreter.h"

namespace templar {

struct SpectrumCounts {
  int e_f = 0;  // failing tests executing the statement
  int e_p = 0;  // passing tests executing it
  int n_f = 0;  // failing tests not executing it
  int n_p = 0;  // passing tests not executing it

  bool operator==(const SpectrumCounts&) const = default;
};

struct TestSpectrum {
  int failed = 0;
  int passed = 0;
  std::map<StatementId, SpectrumCounts> counts;
};

class NoFailingTest : public std::invalid_argument {
 public:
  NoFailingTest() : std::invalid_argument("no failing test") {}
};

// Crashed and timed-out runs count as failing. `universe` adds statements
// that no test executed. Throws NoFailingTest.
TestSpectrum BuildSpectrum(const std::vector<CoverageTrace>& traces,
                           const std::vector<StatementId>& universe = {});

// e_f / sqrt((e_f + n_f) * (e_f + e_p)), or 0 when the denominator is 0.
double Ochiai(int e_f, int e_p, int n_f);

struct Suspicious {
  StatementId id;
  double score = 0;
};

using SuspiciousList = std::vector<Suspicious>;

// Non-zero scores, highest first; ties go to the earlier statement. For
// statements, preorder follows start offset, so (file, preorder) is the
// source position.
SuspiciousList Rank(const TestSpectrum& spectrum);

// The given buggy statements with score 1.0, in source order. Throws
// std::invalid_argument when `buggy` is empty.
SuspiciousList PerfectLocalization(std::vector<StatementId> buggy);

// 1-based position of `id` in `list`, or nullopt.
std::optional<int> PositionOf(const SuspiciousList& list,
                              const StatementId& id);

// First statement (in preorder) whose span starts on `line`. Blocks and
// for-loop init/update clauses are not counted as statements here, matching
// what the interpreter records.
std::optional<StatementId> StatementAtLine(const SourceFile& file, int line);

// Every recordable statement of a file, in preorder.
std::vector<StatementId> StatementsOf(const SourceFile& file);

}  // namespace templar

#endif  // TEMPLAR_FAULT_LOCALIZATION_H_
