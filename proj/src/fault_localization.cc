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

#include "templar/fault_localization.h"

#include <algorithm>
#include <cmath>
#include <set>

namespace templar {

namespace {

bool IsFailing(Verdict verdict) { return verdict != Verdict::kPassed; }

// Statements the interpreter records: no blocks, and no for-loop init or
// update clauses, which execute as part of their loop.
template <typename Fn>
void ForEachStatement(const Node& node, Fn&& fn) {
  if (node.IsStatement() && node.kind != NodeKind::kBlock) fn(node);
  for (size_t i = 0; i < node.children.size(); ++i) {
    if (node.kind == NodeKind::kFor && (i == 0 || i == 2)) continue;
    ForEachStatement(node.children[i], fn);
  }
}

}  // namespace

TestSpectrum BuildSpectrum(const std::vector<CoverageTrace>& traces,
                           const std::vector<StatementId>& universe) {
  TestSpectrum spectrum;
  for (const CoverageTrace& trace : traces) {
    (IsFailing(trace.verdict) ? spectrum.failed : spectrum.passed) += 1;
  }
  if (spectrum.failed == 0) throw NoFailingTest();
  for (const StatementId& id : universe) spectrum.counts[id];
  for (const CoverageTrace& trace : traces) {
    bool failing = IsFailing(trace.verdict);
    for (const auto& [id, count] : trace.counts) {
      if (count <= 0) continue;
      SpectrumCounts& c = spectrum.counts[id];
      (failing ? c.e_f : c.e_p) += 1;
    }
  }
  for (auto& [id, c] : spectrum.counts) {
    c.n_f = spectrum.failed - c.e_f;
    c.n_p = spectrum.passed - c.e_p;
  }
  return spectrum;
}

double Ochiai(int e_f, int e_p, int n_f) {
  double denominator =
      std::sqrt(static_cast<double>(e_f + n_f) * static_cast<double>(e_f + e_p));
  if (denominator == 0) return 0;
  return e_f / denominator;
}

SuspiciousList Rank(const TestSpectrum& spectrum) {
  SuspiciousList list;
  for (const auto& [id, c] : spectrum.counts) {
    double score = Ochiai(c.e_f, c.e_p, c.n_f);
    if (score > 0) list.push_back({id, score});
  }
  // The map is already in (file, preorder) order, so a stable sort on the
  // score alone keeps ties in source order.
  std::stable_sort(list.begin(), list.end(),
                   [](const Suspicious& a, const Suspicious& b) {
                     return a.score > b.score;
                   });
  return list;
}

SuspiciousList PerfectLocalization(std::vector<StatementId> buggy) {
  if (buggy.empty()) {
    throw std::invalid_argument("missing ground-truth buggy locations");
  }
  std::sort(buggy.begin(), buggy.end());
  buggy.erase(std::unique(buggy.begin(), buggy.end()), buggy.end());
  SuspiciousList list;
  for (StatementId& id : buggy) list.push_back({std::move(id), 1.0});
  return list;
}

std::optional<int> PositionOf(const SuspiciousList& list,
                              const StatementId& id) {
  for (size_t i = 0; i < list.size(); ++i) {
    if (list[i].id == id) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

std::optional<StatementId> StatementAtLine(const SourceFile& file, int line) {
  std::optional<StatementId> found;
  ForEachStatement(file.ast, [&](const Node& node) {
    if (!found && file.LineOf(node.span.begin) == line) {
      found = StatementId{file.path, node.preorder};
    }
  });
  return found;
}

std::vector<StatementId> StatementsOf(const SourceFile& file) {
  std::vector<StatementId> ids;
  ForEachStatement(file.ast, [&](const Node& node) {
    ids.push_back({file.path, node.preorder});
  });
  return ids;
}

}  // namespace templar
