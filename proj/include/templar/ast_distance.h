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

#ifndef TEMPLAR_AST_DISTANCE_H_
#define TEMPLAR_AST_DISTANCE_H_

#include "templar/ast.h"

namespace templar {

// kTreePath counts edges on the path through the lowest common ancestor.
// kPreorderGap is |preorder(a) - preorder(b)|, kept for experiments.
enum class DistanceMetric { kTreePath, kPreorderGap };

// Distance between two nodes of the tree indexed by `index`. Throws
// std::invalid_argument if either node belongs to another tree.
int AstDistance(const TreeIndex& index, const Node& a, const Node& b,
                DistanceMetric metric = DistanceMetric::kTreePath);

}  // namespace templar

#endif  // TEMPLAR_AST_DISTANCE_H_
