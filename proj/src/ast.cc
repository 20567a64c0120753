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

#include "templar/ast.h"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cmath>

namespace templar {

std::string LangType::ToString() const {
  std::string result;
  switch (base) {
    case Base::kUnknown:
      result = "<unknown>";
      break;
    case Base::kBoolean:
      result = "boolean";
      break;
    case Base::kInt:
      result = "int";
      break;
    case Base::kFloat:
      result = "float";
      break;
    case Base::kString:
      result = "String";
      break;
    case Base::kVoid:
      result = "void";
      break;
    case Base::kClass:
      result = class_name;
      break;
    case Base::kNull:
      result = "null";
      break;
  }
  for (int i = 0; i < dims; ++i) result += "[]";
  return result;
}

LangType LangType::FromName(const std::string& name) {
  std::string base_name = name;
  int dims = 0;
  while (base_name.size() >= 2 &&
         base_name.compare(base_name.size() - 2, 2, "[]") == 0) {
    base_name.resize(base_name.size() - 2);
    ++dims;
  }
  LangType result;
  if (base_name == "boolean") {
    result = Boolean();
  } else if (base_name == "int") {
    result = Int();
  } else if (base_name == "float") {
    result = Float();
  } else if (base_name == "String") {
    result = String();
  } else if (base_name == "void") {
    result = Void();
  } else {
    result = Class(base_name);
  }
  result.dims = dims;
  return result;
}

std::string_view KindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kCompilationUnit: return "compilation-unit";
    case NodeKind::kClassDecl: return "class-decl";
    case NodeKind::kFieldDecl: return "field-decl";
    case NodeKind::kMethodDecl: return "method-decl";
    case NodeKind::kConstructorDecl: return "constructor-decl";
    case NodeKind::kParam: return "param";
    case NodeKind::kType: return "type";
    case NodeKind::kBlock: return "block";
    case NodeKind::kVarDecl: return "variable-declaration";
    case NodeKind::kExprStmt: return "expression-statement";
    case NodeKind::kIf: return "if";
    case NodeKind::kWhile: return "while";
    case NodeKind::kFor: return "for";
    case NodeKind::kReturn: return "return";
    case NodeKind::kBreak: return "break";
    case NodeKind::kContinue: return "continue";
    case NodeKind::kThrow: return "throw";
    case NodeKind::kTry: return "try";
    case NodeKind::kCatch: return "catch";
    case NodeKind::kAssert: return "assert";
    case NodeKind::kAssign: return "assignment";
    case NodeKind::kConditional: return "conditional-expr";
    case NodeKind::kInfix: return "infix";
    case NodeKind::kPrefix: return "prefix";
    case NodeKind::kCast: return "cast";
    case NodeKind::kInstanceOf: return "instanceof";
    case NodeKind::kCall: return "method-invocation";
    case NodeKind::kNew: return "class-instance-creation";
    case NodeKind::kNewArray: return "array-creation";
    case NodeKind::kArrayLiteral: return "array-literal";
    case NodeKind::kFieldAccess: return "field-access";
    case NodeKind::kArrayAccess: return "array-access";
    case NodeKind::kName: return "variable-ref";
    case NodeKind::kThis: return "this";
    case NodeKind::kSuper: return "super";
    case NodeKind::kIntLiteral: return "int-literal";
    case NodeKind::kFloatLiteral: return "float-literal";
    case NodeKind::kStringLiteral: return "string-literal";
    case NodeKind::kBooleanLiteral: return "boolean-literal";
    case NodeKind::kNullLiteral: return "null-literal";
    case NodeKind::kEmpty: return "empty";
    case NodeKind::kHole: return "hole";
  }
  return "?";
}

bool IsStatementKind(NodeKind kind) {
  return kind >= NodeKind::kBlock && kind <= NodeKind::kAssert &&
         kind != NodeKind::kCatch;
}

bool IsExpressionKind(NodeKind kind) {
  return kind >= NodeKind::kAssign && kind <= NodeKind::kNullLiteral;
}

bool IsLiteralKind(NodeKind kind) {
  return kind >= NodeKind::kIntLiteral && kind <= NodeKind::kNullLiteral;
}

bool IsLiteralValue(const Node& node) {
  if (node.kind == NodeKind::kPrefix && node.text == "-" &&
      node.children.size() == 1) {
    NodeKind inner = node.children[0].kind;
    return inner == NodeKind::kIntLiteral || inner == NodeKind::kFloatLiteral;
  }
  return IsLiteralKind(node.kind) && node.kind != NodeKind::kNullLiteral;
}

bool StructurallyEqual(const Node& a, const Node& b) {
  if (a.kind != b.kind || a.text != b.text || a.aux != b.aux ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (size_t i = 0; i < a.children.size(); ++i) {
    if (!StructurallyEqual(a.children[i], b.children[i])) return false;
  }
  return true;
}

int CountNodes(const Node& root) {
  int count = 0;
  VisitPreorder(root, [&count](const Node&) { ++count; });
  return count;
}

void IndexTree(Node& root, NodeId next_id) {
  if (next_id == 0) {
    NodeId max_id = 0;
    VisitPreorder(root, [&max_id](const Node& n) {
      max_id = std::max(max_id, n.id);
    });
    next_id = max_id + 1;
  }
  int32_t preorder = 0;
  VisitPreorder(root, [&](Node& n) {
    n.preorder = preorder++;
    if (n.id == 0) n.id = next_id++;
  });
}

void ClearIds(Node& root) {
  VisitPreorder(root, [](Node& n) { n.id = 0; });
}

TreeIndex::TreeIndex(const Node& root) : root_(&root) {
  Build(root, -1, 0);
}

void TreeIndex::Build(const Node& node, int parent, int depth) {
  int position = static_cast<int>(nodes_.size());
  nodes_.push_back(&node);
  parent_.push_back(parent);
  depth_.push_back(depth);
  position_.emplace(&node, position);
  if (node.id != 0) by_id_.emplace(node.id, position);
  for (const Node& child : node.children) Build(child, position, depth + 1);
}

const Node* TreeIndex::FindById(NodeId id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : nodes_[it->second];
}

int TreeIndex::PreorderOf(const Node& node) const {
  auto it = position_.find(&node);
  assert(it != position_.end() && "node does not belong to this tree");
  return it->second;
}

bool TreeIndex::Contains(const Node& node) const {
  return position_.count(&node) != 0;
}

const Node* TreeIndex::Parent(const Node& node) const {
  int parent = parent_[PreorderOf(node)];
  return parent < 0 ? nullptr : nodes_[parent];
}

const Node* TreeIndex::EnclosingOfKind(const Node& node, NodeKind kind) const {
  for (const Node* p = Parent(node); p != nullptr; p = Parent(*p)) {
    if (p->kind == kind) return p;
  }
  return nullptr;
}

const Node* TreeIndex::EnclosingCallable(const Node& node) const {
  for (const Node* p = &node; p != nullptr; p = Parent(*p)) {
    if (p->kind == NodeKind::kMethodDecl ||
        p->kind == NodeKind::kConstructorDecl) {
      return p;
    }
  }
  return nullptr;
}

bool TreeIndex::IsAncestor(const Node& ancestor, const Node& node) const {
  for (const Node* p = Parent(node); p != nullptr; p = Parent(*p)) {
    if (p == &ancestor) return true;
  }
  return false;
}

Node MakeName(std::string name) {
  return Node(NodeKind::kName, std::move(name));
}

Node MakeType(const LangType& type) {
  return Node(NodeKind::kType, type.ToString());
}

Node MakeIntLiteral(int64_t value) {
  if (value < 0) {
    // Negative values only exist as prefix minus in source.
    uint64_t magnitude = 0 - static_cast<uint64_t>(value);
    return MakePrefix("-", Node(NodeKind::kIntLiteral,
                                std::to_string(magnitude)));
  }
  return Node(NodeKind::kIntLiteral, std::to_string(value));
}

std::string FormatFloatLiteral(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer),
                                 std::fabs(value));
  std::string text(buffer, end);
  if (text.find_first_of(".eEn") == std::string::npos) text += ".0";
  return text;
}

Node MakeFloatLiteral(double value) {
  Node literal(NodeKind::kFloatLiteral, FormatFloatLiteral(value));
  if (std::signbit(value)) return MakePrefix("-", std::move(literal));
  return literal;
}

Node MakeBooleanLiteral(bool value) {
  return Node(NodeKind::kBooleanLiteral, value ? "true" : "false");
}

Node MakeStringLiteral(std::string value) {
  return Node(NodeKind::kStringLiteral, std::move(value));
}

Node MakeNullLiteral() { return Node(NodeKind::kNullLiteral, "null"); }

Node MakeInfix(std::string op, Node lhs, Node rhs) {
  return Node(NodeKind::kInfix, std::move(op), {std::move(lhs), std::move(rhs)});
}

Node MakePrefix(std::string op, Node operand) {
  return Node(NodeKind::kPrefix, std::move(op), {std::move(operand)});
}

Node MakeBlock(std::vector<Node> statements) {
  return Node(NodeKind::kBlock, "", std::move(statements));
}

Node MakeIf(Node cond, Node then_branch) {
  return Node(NodeKind::kIf, "", {std::move(cond), std::move(then_branch)});
}

Node MakeReturn(std::vector<Node> value) {
  return Node(NodeKind::kReturn, "", std::move(value));
}

Node MakeExprStmt(Node expr) {
  return Node(NodeKind::kExprStmt, "", {std::move(expr)});
}

Node MakeCast(const LangType& type, Node expr) {
  return Node(NodeKind::kCast, "", {MakeType(type), std::move(expr)});
}

}  // namespace templar
