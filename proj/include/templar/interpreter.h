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

#ifndef TEMPLAR_INTERPRETER_H_
#define TEMPLAR_INTERPRETER_H_

#include <chrono>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "templar/program.h"

namespace templar {

enum class Verdict { kPassed, kFailed, kCrashed, kTimedOut };

std::string_view VerdictName(Verdict verdict);

// A statement is identified by its file and its preorder index there.
struct StatementId {
  std::string file;
  int preorder = -1;

  std::string ToString() const {
    return file + "#" + std::to_string(preorder);
  }
  auto operator<=>(const StatementId&) const = default;
};

// A `test_*` method of a class declared in the suite file.
struct TestCase {
  std::string name;
  std::string class_name;
  const Node* body = nullptr;
};

struct CoverageTrace {
  std::string test;
  Verdict verdict = Verdict::kPassed;
  // Executed statements only; blocks are containers and are not recorded.
  std::map<StatementId, int64_t> counts;
  std::string detail;  // crash or failure description
};

struct RunOptions {
  std::chrono::milliseconds timeout{100};
  // Statement budget per test. Hitting it is reported as a timeout, which
  // keeps runaway loops deterministic regardless of machine speed.
  int64_t max_steps = 1'000'000;
  int max_depth = 400;
  bool record_coverage = true;
};

// Tests in source order. Throws std::invalid_argument if `suite_path` is not
// part of the program or two tests share a name.
std::vector<TestCase> DiscoverTests(const CheckedProgram& program,
                                    std::string_view suite_path);

// Runs one test on a fresh heap: the test class is instantiated with its
// zero-argument constructor and the method invoked. Never throws for
// problems in the program under test; they become verdicts.
CoverageTrace RunTest(const CheckedProgram& program, const TestCase& test,
                      const RunOptions& options = {});

std::vector<CoverageTrace> RunTests(const CheckedProgram& program,
                                    const std::vector<TestCase>& tests,
                                    const RunOptions& options = {});

}  // namespace templar

#endif  // TEMPLAR_INTERPRETER_H_
