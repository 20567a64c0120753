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

#ifndef TEMPLAR_NORMALIZE_H_
#define TEMPLAR_NORMALIZE_H_

#include "templar/ast.h"

namespace templar {

// Canonical form used to judge patch correctness:
//   - `!(a == b)` becomes `a != b` and `!(a != b)` becomes `a == b`;
//   - operands of `==`, `!=` and integer `+` are put in a fixed order.
// `&&` and `||` keep their operand order (short-circuiting is observable).
// Parentheses are not represented in the tree, so redundant ones vanish
// at parse time. Integer `+` is recognised from type annotations, so
// un-annotated trees only get the operator-independent rewrites.
Node Normalize(const Node& node);

bool NormalizeEqual(const Node& a, const Node& b);

}  // namespace templar

#endif  // TEMPLAR_NORMALIZE_H_
