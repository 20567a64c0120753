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

#include "templar/corpus.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "templar/toml.h"
#include "templar/unified_diff.h"

namespace templar {
namespace fs = std::filesystem;

namespace {

std::string ReadFile(const std::string& id, const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError(id, "cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

const TomlValue* Lookup(const TomlTable& table, std::string_view key) {
  auto it = table.find(key);
  return it == table.end() ? nullptr : &it->second;
}

std::string ExpectString(const std::string& id, const TomlValue& v, const std::string& what) {
  if (v.kind != TomlValue::Kind::kString) throw CorpusError(id, what + " must be a string");
  return v.string;
}

const std::vector<TomlValue>& ExpectArray(const std::string& id, const TomlValue& v,
                                          const std::string& what) {
  if (v.kind != TomlValue::Kind::kArray) throw CorpusError(id, what + " must be an array");
  return v.array;
}

std::string Describe(const std::vector<TypeError>& errors) {
  std::string out;
  for (size_t i = 0; i < errors.size() && i < 3; ++i) {
    if (i > 0) out += "; ";
    out += errors[i].ToString();
  }
  return out;
}

std::shared_ptr<const CheckedProgram> Check(const std::string& id, Program program,
                                            const std::string& what) {
  CheckResult result = TypeCheck(std::move(program));
  if (!result.ok()) {
    throw CorpusError(id, what + " does not type-check: " + Describe(result.errors));
  }
  return result.program;
}

SourceFile Parse(const std::string& id, const std::string& path, std::string text) {
  try {
    return ParseSourceFile(path, std::move(text));
  } catch (const SyntaxError& e) {
    throw CorpusError(id, path + ":" + e.what());
  }
}

}  // namespace

BugCase LoadBug(const fs::path& dir, const RunOptions& run) {
  BugCase bug;
  bug.dir = dir;
  std::string dir_name = dir.filename().string();
  if (dir_name.empty()) dir_name = dir.parent_path().filename().string();

  TomlTable toml;
  try {
    toml = ParseToml(ReadFile(dir_name, dir / "bug.toml"));
  } catch (const TomlError& e) {
    throw CorpusError(dir_name, std::string("bug.toml: ") + e.what());
  }
  const TomlValue* id = Lookup(toml, "id");
  if (id == nullptr) throw CorpusError(dir_name, "bug.toml lacks 'id'");
  bug.id = ExpectString(dir_name, *id, "id");
  if (bug.id != dir_name) {
    throw CorpusError(dir_name, "bug.toml id '" + bug.id + "' differs from the directory name");
  }
  for (const auto& [key, value] : toml) {
    (void)value;
    if (key != "id" && key != "buggy_files" && key != "buggy_lines" &&
        key != "expected_pattern") {
      throw CorpusError(bug.id, "unknown bug.toml key '" + key + "'");
    }
  }
  if (const TomlValue* files = Lookup(toml, "buggy_files")) {
    for (const TomlValue& f : ExpectArray(bug.id, *files, "buggy_files")) {
      bug.buggy_files.push_back(ExpectString(bug.id, f, "buggy_files entry"));
    }
  } else {
    throw CorpusError(bug.id, "bug.toml lacks 'buggy_files'");
  }
  const TomlValue* lines = Lookup(toml, "buggy_lines");
  if (lines == nullptr) throw CorpusError(bug.id, "bug.toml lacks 'buggy_lines'");
  for (const TomlValue& entry : ExpectArray(bug.id, *lines, "buggy_lines")) {
    const auto& pair = ExpectArray(bug.id, entry, "buggy_lines entry");
    if (pair.size() != 2 || pair[0].kind != TomlValue::Kind::kString ||
        pair[1].kind != TomlValue::Kind::kInteger) {
      throw CorpusError(bug.id, "buggy_lines entries must be [file, line]");
    }
    bug.buggy_lines.emplace_back(pair[0].string, static_cast<int>(pair[1].integer));
  }
  if (bug.buggy_lines.empty()) throw CorpusError(bug.id, "buggy_lines is empty");
  if (const TomlValue* pattern = Lookup(toml, "expected_pattern")) {
    bug.expected_pattern = ExpectString(bug.id, *pattern, "expected_pattern");
    if (FindPattern(*bug.expected_pattern) == nullptr) {
      throw CorpusError(bug.id, "unknown expected_pattern " + *bug.expected_pattern);
    }
  }

  // Sources, sorted by path for a stable file order.
  Program buggy;
  std::error_code ec;
  if (!fs::is_directory(dir / "src", ec)) throw CorpusError(bug.id, "missing src/");
  std::vector<std::string> sources;
  for (const auto& entry : fs::directory_iterator(dir / "src")) {
    if (entry.is_regular_file() && entry.path().extension() == ".mj") {
      sources.push_back("src/" + entry.path().filename().string());
    }
  }
  std::sort(sources.begin(), sources.end());
  if (sources.empty()) throw CorpusError(bug.id, "src/ holds no .mj file");
  if (!fs::is_regular_file(dir / kSuitePath, ec)) {
    throw CorpusError(bug.id, std::string("missing ") + kSuitePath);
  }
  sources.push_back(kSuitePath);
  for (const std::string& path : sources) {
    buggy.files.push_back(Parse(bug.id, path, ReadFile(bug.id, dir / path)));
  }
  for (const std::string& f : bug.buggy_files) {
    if (f == kSuitePath || buggy.FileIndex(f) < 0) {
      throw CorpusError(bug.id, "buggy file " + f + " is not a source file");
    }
  }

  // Developer fix.
  bug.fix_patch = ReadFile(bug.id, dir / "fix.patch");
  Program fixed = buggy;
  try {
    for (const FileDiff& diff : ParseUnifiedDiff(bug.fix_patch)) {
      int index = fixed.FileIndex(diff.new_path);
      if (index < 0 || diff.new_path == kSuitePath) {
        throw CorpusError(bug.id, "fix.patch touches unknown file " + diff.new_path);
      }
      std::string text = ApplyFileDiff(fixed.files[index].text, diff);
      fixed.files[index] = Parse(bug.id, diff.new_path, std::move(text));
    }
  } catch (const PatchError& e) {
    throw CorpusError(bug.id, std::string("fix.patch: ") + e.what());
  }

  bug.program = Check(bug.id, std::move(buggy), "buggy program");
  bug.fixed = Check(bug.id, std::move(fixed), "fixed program");

  std::vector<TestCase> tests = DiscoverTests(*bug.program, kSuitePath);
  if (tests.empty()) throw CorpusError(bug.id, "the suite holds no test");
  for (const CoverageTrace& t : RunTests(*bug.program, tests, run)) {
    if (t.verdict != Verdict::kPassed) bug.failing_tests.push_back(t.test);
  }
  if (bug.failing_tests.empty()) {
    throw CorpusError(bug.id, "the buggy program passes every test");
  }
  RunOptions quiet = run;
  quiet.record_coverage = false;
  for (const CoverageTrace& t :
       RunTests(*bug.fixed, DiscoverTests(*bug.fixed, kSuitePath), quiet)) {
    if (t.verdict != Verdict::kPassed) {
      throw CorpusError(bug.id, "the fixed program fails test " + t.test);
    }
  }

  std::set<StatementId> seen;
  for (const auto& [file, line] : bug.buggy_lines) {
    int index = bug.program->program().FileIndex(file);
    if (index < 0 || file == kSuitePath) {
      throw CorpusError(bug.id, "buggy line names unknown file " + file);
    }
    auto id = StatementAtLine(bug.program->file(index), line);
    if (!id) {
      throw CorpusError(bug.id, "no statement at " + file + ":" + std::to_string(line));
    }
    if (seen.insert(*id).second) bug.buggy_statements.push_back(*id);
  }
  return bug;
}

std::vector<BugCase> LoadCorpus(const fs::path& root, const RunOptions& run) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw CorpusError("", "corpus root " + root.string() + " is not a directory");
  }
  std::vector<fs::path> dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory() && fs::is_regular_file(entry.path() / "bug.toml")) {
      dirs.push_back(entry.path());
    }
  }
  std::sort(dirs.begin(), dirs.end());
  std::vector<BugCase> bugs;
  for (const fs::path& dir : dirs) bugs.push_back(LoadBug(dir, run));
  std::sort(bugs.begin(), bugs.end(),
            [](const BugCase& a, const BugCase& b) { return a.id < b.id; });
  return bugs;
}

BugInput ToInput(const BugCase& bug) {
  BugInput input;
  input.id = bug.id;
  input.program = bug.program;
  input.suite_path = kSuitePath;
  input.buggy_statements = bug.buggy_statements;
  input.fixed = bug.fixed;
  return input;
}

}  // namespace templar
