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

#include "templar/unified_diff.h"

#include <gtest/gtest.h>

#include <random>

namespace templar {
namespace {

// Output of `diff -u` for a one-line change, labels as written by the corpus.
const char* kGnuDiff = R"(--- a/src/A.mj
+++ b/src/A.mj
@@ -1,5 +1,5 @@
 class A {
     int f(int x) {
-        return x - 1;
+        return x + 1;
     }
 }
)";

const char* kBefore = "class A {\n    int f(int x) {\n        return x - 1;\n    }\n}\n";
const char* kAfter = "class A {\n    int f(int x) {\n        return x + 1;\n    }\n}\n";

TEST(UnifiedDiffTest, ParsesAndApplies) {
  auto files = ParseUnifiedDiff(kGnuDiff);
  ASSERT_EQ(files.size(), 1u);
  EXPECT_EQ(files[0].old_path, "src/A.mj");
  EXPECT_EQ(files[0].new_path, "src/A.mj");
  ASSERT_EQ(files[0].hunks.size(), 1u);
  EXPECT_EQ(files[0].hunks[0].old_start, 1);
  EXPECT_EQ(files[0].hunks[0].new_count, 5);
  EXPECT_EQ(ApplyFileDiff(kBefore, files[0]), kAfter);
}

TEST(UnifiedDiffTest, MatchesGnuOutput) {
  EXPECT_EQ(MakeUnifiedDiff("src/A.mj", kBefore, kAfter), kGnuDiff);
  EXPECT_EQ(MakeUnifiedDiff("src/A.mj", kBefore, kBefore), "");
}

TEST(UnifiedDiffTest, MismatchIsAnError) {
  auto files = ParseUnifiedDiff(kGnuDiff);
  EXPECT_THROW(ApplyFileDiff(kAfter, files[0]), PatchError);
  EXPECT_THROW(ParseUnifiedDiff("nothing here\n"), PatchError);
  EXPECT_THROW(ParseUnifiedDiff("--- a/x\n+++ b/x\n@@ -1,2 +1,2 @@\n a\n"), PatchError);
  EXPECT_THROW(ParseUnifiedDiff("--- a/x\n+++ b/x\n@@ -1 +1 @@\n?a\n"), PatchError);
}

TEST(UnifiedDiffTest, InsertionIntoEmptyFile) {
  std::string diff = MakeUnifiedDiff("f", "", "one\ntwo\n");
  EXPECT_EQ(diff, "--- a/f\n+++ b/f\n@@ -0,0 +1,2 @@\n+one\n+two\n");
  EXPECT_EQ(ApplyFileDiff("", ParseUnifiedDiff(diff)[0]), "one\ntwo\n");
}

// Random line edits: the produced diff applies back to the edited text.
TEST(UnifiedDiffTest, RoundTripProperty) {
  std::mt19937 rng(7);
  const std::vector<std::string> vocabulary = {"a", "b", "c", "{", "}", "x = 1;", ""};
  for (int round = 0; round < 300; ++round) {
    std::vector<std::string> lines(rng() % 40);
    for (auto& l : lines) l = vocabulary[rng() % vocabulary.size()];
    std::vector<std::string> edited = lines;
    int edits = 1 + static_cast<int>(rng() % 5);
    for (int e = 0; e < edits; ++e) {
      size_t at = edited.empty() ? 0 : rng() % (edited.size() + 1);
      switch (rng() % 3) {
        case 0:
          edited.insert(edited.begin() + at, vocabulary[rng() % vocabulary.size()]);
          break;
        case 1:
          if (at < edited.size()) edited.erase(edited.begin() + at);
          break;
        default:
          if (at < edited.size()) edited[at] = "changed" + std::to_string(e);
      }
    }
    auto join = [](const std::vector<std::string>& v) {
      std::string s;
      for (const auto& l : v) s += l + "\n";
      return s;
    };
    std::string before = join(lines);
    std::string after = join(edited);
    std::string diff = MakeUnifiedDiff("f", before, after, 1 + round % 4);
    if (before == after) {
      EXPECT_EQ(diff, "");
      continue;
    }
    auto files = ParseUnifiedDiff(diff);
    ASSERT_EQ(files.size(), 1u) << diff;
    EXPECT_EQ(ApplyFileDiff(before, files[0]), after) << diff;
  }
}

}  // namespace
}  // namespace templar
