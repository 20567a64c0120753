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

#ifndef TEMPLAR_DONOR_SEARCH_H_
#define TEMPLAR_DONOR_SEARCH_H_

#include <optional>
#include <vector>

#include "templar/ast_distance.h"
#include "templar/program.h"

namespace templar {

// One fix ingredient. `code` is what gets spliced into a patch; `origin` is
// the node it was harvested from (the declaration, for variables).
struct DonorEntry {
  Node code;
  const Node* origin = nullptr;
  LangType type;
  int distance = 0;
  int position = 0;  // preorder of `origin`
};

struct MethodDonor {
  const MethodInfo* method = nullptr;
  int distance = 0;
  // Preorder of the declaration; methods inherited from another file are
  // signature-only and use the current class declaration instead.
  int position = 0;
};

// Ingredients from the buggy file, each pool sorted by (distance, position).
struct DonorSet {
  std::vector<DonorEntry> expressions;  // compound expressions
  std::vector<DonorEntry> variables;    // locals in scope and fields
  std::vector<DonorEntry> literals;
  std::vector<DonorEntry> conditions;   // boolean expressions and variables
  std::vector<MethodDonor> methods;

  const MethodDonor* FindMethod(const MethodInfo* method) const;
};

// Whether a value of type `entry` can stand where `required` is expected:
// same type, int to float, subclass to superclass, or null to a reference.
bool Compatible(const ClassTable& classes, const LangType& entry,
                const LangType& required);

// Parameters, locals and catch variables in scope just before `at`.
std::vector<const Node*> VisibleLocals(const TreeIndex& index, const Node& at);

// Harvests donors for `buggy`, a statement of file `file`. Entries are kept
// only if their type is relevant to the enclosing method; variables must be
// in scope at `buggy`, and compound donors may only mention locals that are.
DonorSet CollectDonors(const CheckedProgram& program, int file,
                       const Node& buggy,
                       DistanceMetric metric = DistanceMetric::kTreePath);

}  // namespace templar

#endif  // TEMPLAR_DONOR_SEARCH_H_
