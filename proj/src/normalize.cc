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

#include "templar/normalize.h"

#include "templar/printer.h"

namespace templar {
namespace {

bool IsCommutative(const Node& node) {
  if (node.kind != NodeKind::kInfix) return false;
  if (node.text == "==" || node.text == "!=") return true;
  return node.text == "+" && node.children[0].type.IsInt() &&
         node.children[1].type.IsInt();
}

// Total order on normalized subtrees: kind, then printed form.
bool CanonicallyLess(const Node& a, const Node& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  return PrettyPrint(a) < PrettyPrint(b);
}

void NormalizeInPlace(Node& node) {
  for (Node& child : node.children) NormalizeInPlace(child);
  if (node.kind == NodeKind::kPrefix && node.text == "!" &&
      node.children[0].kind == NodeKind::kInfix &&
      (node.children[0].text == "==" || node.children[0].text == "!=")) {
    Node inner = std::move(node.children[0]);
    inner.text = inner.text == "==" ? "!=" : "==";
    node = std::move(inner);
  }
  if (IsCommutative(node) &&
      CanonicallyLess(node.children[1], node.children[0])) {
    std::swap(node.children[0], node.children[1]);
  }
}

}  // namespace

Node Normalize(const Node& node) {
  Node copy = node;
  NormalizeInPlace(copy);
  return copy;
}

bool NormalizeEqual(const Node& a, const Node& b) {
  return StructurallyEqual(Normalize(a), Normalize(b));
}

}  // namespace templar
