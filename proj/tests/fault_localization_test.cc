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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "templar/fault_localization.h"

namespace templar {
namespace {

StatementId S(int n) { return {"a.mj", n}; }

CoverageTrace Trace(Verdict verdict, std::vector<int> statements) {
  CoverageTrace trace;
  trace.verdict = verdict;
  for (int s : statements) trace.counts[S(s)] = 1;
  return trace;
}

TEST(SpectrumTest, HandCount) {
  TestSpectrum spectrum = BuildSpectrum(
      {Trace(Verdict::kFailed, {1, 2}), Trace(Verdict::kPassed, {2})});
  EXPECT_EQ(spectrum.failed, 1);
  EXPECT_EQ(spectrum.passed, 1);
  EXPECT_EQ(spectrum.counts.at(S(1)), (SpectrumCounts{1, 0, 0, 1}));
  EXPECT_EQ(spectrum.counts.at(S(2)), (SpectrumCounts{1, 1, 0, 0}));
}

TEST(SpectrumTest, AllPassingIsAnError) {
  EXPECT_THROW(BuildSpectrum({Trace(Verdict::kPassed, {1})}), NoFailingTest);
}

TEST(SpectrumTest, UncoveredStatement) {
  TestSpectrum spectrum =
      BuildSpectrum({Trace(Verdict::kCrashed, {1}), Trace(Verdict::kPassed, {1}),
                     Trace(Verdict::kTimedOut, {})},
                    {S(9)});
  EXPECT_EQ(spectrum.counts.at(S(9)), (SpectrumCounts{0, 0, 2, 1}));
}

TEST(OchiaiTest, Examples) {
  EXPECT_DOUBLE_EQ(Ochiai(1, 0, 0), 1.0);
  EXPECT_DOUBLE_EQ(Ochiai(0, 3, 2), 0.0);
  EXPECT_NEAR(Ochiai(2, 2, 1), 0.5773502691896258, 1e-12);
  EXPECT_EQ(Ochiai(0, 0, 0), 0.0);
}

TEST(OchiaiTest, MonotoneInFailingExecutions) {
  for (int e_p = 0; e_p < 6; ++e_p) {
    for (int n_f = 0; n_f < 6; ++n_f) {
      for (int e_f = 0; e_f < 6; ++e_f) {
        double a = Ochiai(e_f, e_p, n_f);
        double b = Ochiai(e_f + 1, e_p, n_f);
        EXPECT_LE(a, b + 1e-15);
        EXPECT_GE(a, 0.0);
        EXPECT_LE(b, 1.0);
      }
    }
  }
}

TEST(RankTest, OrderAndTies) {
  TestSpectrum spectrum;
  spectrum.failed = 2;
  spectrum.passed = 2;
  spectrum.counts[S(5)] = {1, 0, 1, 2};  // 0.707
  spectrum.counts[S(3)] = {2, 0, 0, 2};  // 1.0
  spectrum.counts[S(1)] = {1, 0, 1, 2};  // tie with S(5)
  spectrum.counts[S(2)] = {0, 2, 2, 0};  // excluded
  SuspiciousList list = Rank(spectrum);
  ASSERT_EQ(list.size(), 3u);
  EXPECT_EQ(list[0].id, S(3));
  EXPECT_EQ(list[1].id, S(1));
  EXPECT_EQ(list[2].id, S(5));
  EXPECT_EQ(PositionOf(list, S(5)), 3);
  EXPECT_FALSE(PositionOf(list, S(2)).has_value());
}

TEST(RankTest, RandomizedAgainstSortOracle) {
  std::mt19937 rng(7);
  for (int round = 0; round < 200; ++round) {
    TestSpectrum spectrum;
    spectrum.failed = 1 + rng() % 4;
    spectrum.passed = rng() % 5;
    std::vector<std::tuple<double, std::string, int>> oracle;
    int n = 1 + rng() % 30;
    for (int i = 0; i < n; ++i) {
      StatementId id{rng() % 2 ? "a.mj" : "b.mj", static_cast<int>(rng() % 50)};
      SpectrumCounts c;
      c.e_f = rng() % (spectrum.failed + 1);
      c.e_p = rng() % (spectrum.passed + 1);
      c.n_f = spectrum.failed - c.e_f;
      c.n_p = spectrum.passed - c.e_p;
      spectrum.counts[id] = c;
    }
    for (const auto& [id, c] : spectrum.counts) {
      double score =
          c.e_f == 0 ? 0 : c.e_f / std::sqrt(1.0 * spectrum.failed * (c.e_f + c.e_p));
      if (score > 0) oracle.emplace_back(-score, id.file, id.preorder);
    }
    std::sort(oracle.begin(), oracle.end());
    SuspiciousList list = Rank(spectrum);
    ASSERT_EQ(list.size(), oracle.size());
    for (size_t i = 0; i < list.size(); ++i) {
      EXPECT_NEAR(list[i].score, -std::get<0>(oracle[i]), 1e-12);
      EXPECT_EQ(list[i].id.file, std::get<1>(oracle[i]));
      EXPECT_EQ(list[i].id.preorder, std::get<2>(oracle[i]));
    }
  }
}

TEST(PerfectLocalizationTest, SourceOrder) {
  SuspiciousList one = PerfectLocalization({S(4)});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].score, 1.0);
  SuspiciousList three = PerfectLocalization({S(9), S(2), S(5)});
  ASSERT_EQ(three.size(), 3u);
  EXPECT_EQ(three[0].id, S(2));
  EXPECT_EQ(three[2].id, S(9));
  EXPECT_THROW(PerfectLocalization({}), std::invalid_argument);
}

TEST(StatementLinesTest, FirstStatementOnLine) {
  SourceFile file = ParseSourceFile("a.mj", R"(class A {
  int m(int x) {
    if (x > 0) { return 1; }
    for (int i = 0; i < x; i += 1) { x = x - 1; }
    return x;
  }
})");
  auto at3 = StatementAtLine(file, 3);
  ASSERT_TRUE(at3.has_value());
  const Node& body = file.ast.children[0].children[0].children.back();
  EXPECT_EQ(at3->preorder, body.children[0].preorder);
  auto at4 = StatementAtLine(file, 4);
  ASSERT_TRUE(at4.has_value());
  EXPECT_EQ(at4->preorder, body.children[1].preorder);
  EXPECT_FALSE(StatementAtLine(file, 1).has_value());
  // if, return, for, body assignment, return.
  EXPECT_EQ(StatementsOf(file).size(), 5u);
}

}  // namespace
}  // namespace templar
