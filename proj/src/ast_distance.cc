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

#include "templar/ast_distance.h"

#include <cstdlib>
#include <stdexcept>

namespace templar {

int AstDistance(const TreeIndex& index, const Node& a, const Node& b,
                DistanceMetric metric) {
  if (!index.Contains(a) || !index.Contains(b)) {
    throw std::invalid_argument("ast distance between different trees");
  }
  if (metric == DistanceMetric::kPreorderGap) {
    return std::abs(index.PreorderOf(a) - index.PreorderOf(b));
  }
  const Node* x = &a;
  const Node* y = &b;
  int depth_x = index.Depth(*x);
  int depth_y = index.Depth(*y);
  int distance = 0;
  while (depth_x > depth_y) {
    x = index.Parent(*x);
    --depth_x;
    ++distance;
  }
  while (depth_y > depth_x) {
    y = index.Parent(*y);
    --depth_y;
    ++distance;
  }
  while (x != y) {
    x = index.Parent(*x);
    y = index.Parent(*y);
    distance += 2;
  }
  return distance;
}

}  // namespace templar
