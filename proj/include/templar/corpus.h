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

#ifndef TEMPLAR_CORPUS_H_
#define TEMPLAR_CORPUS_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "templar/interpreter.h"
#include "templar/program.h"
#include "templar/repair_driver.h"

namespace templar {

// One bug directory:
//   <id>/src/*.mj         code under repair
//   <id>/tests/suite.mj   test suite
//   <id>/fix.patch        developer fix, unified diff against src/
//   <id>/bug.toml         id, buggy_files, buggy_lines, expected_pattern
struct BugCase {
  std::string id;
  std::filesystem::path dir;
  std::vector<std::string> buggy_files;             // "src/X.mj"
  std::vector<std::pair<std::string, int>> buggy_lines;
  std::optional<std::string> expected_pattern;
  std::string fix_patch;

  std::shared_ptr<const CheckedProgram> program;  // buggy
  std::shared_ptr<const CheckedProgram> fixed;    // with fix.patch applied
  std::vector<StatementId> buggy_statements;      // from buggy_lines
  std::vector<std::string> failing_tests;         // of the buggy program
};

inline constexpr char kSuitePath[] = "tests/suite.mj";

class CorpusError : public std::runtime_error {
 public:
  CorpusError(std::string bug_id, const std::string& message)
      : std::runtime_error(bug_id.empty() ? message : bug_id + ": " + message),
        bug_id_(std::move(bug_id)) {}
  const std::string& bug_id() const { return bug_id_; }

 private:
  std::string bug_id_;
};

// Loads one bug and checks its invariants: the buggy program type-checks and
// fails at least one test, the fix applies, type-checks and passes every
// test, and every buggy line holds a statement. Throws CorpusError.
BugCase LoadBug(const std::filesystem::path& dir, const RunOptions& run = {});

// Every subdirectory of `root` holding a bug.toml, sorted by id.
std::vector<BugCase> LoadCorpus(const std::filesystem::path& root,
                                const RunOptions& run = {});

BugInput ToInput(const BugCase& bug);

}  // namespace templar

#endif  // TEMPLAR_CORPUS_H_
