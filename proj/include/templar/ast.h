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

#ifndef TEMPLAR_AST_H_
#define TEMPLAR_AST_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "templar/lang_type.h"

namespace templar {

// Child layout per kind (fixed slots unless noted as a list):
//
//   kCompilationUnit  list of kClassDecl
//   kClassDecl        text=name, aux=superclass; list of members
//   kFieldDecl        text=name; [kType, init?]
//   kMethodDecl       text=name; [kType(return), kParam..., kBlock]
//   kConstructorDecl  text=class name; [kParam..., kBlock]
//   kParam            text=name; [kType]
//   kType             text=type spelling ("int[]", "Matrix")
//   kBlock            list of statements
//   kVarDecl          text=name; [kType, init?]
//   kExprStmt         [expr]
//   kIf               [cond, then, else?]
//   kWhile            [cond, body]
//   kFor              [init (kVarDecl|kExprStmt|kEmpty), cond|kEmpty,
//                      update|kEmpty, body]
//   kReturn           [expr?]
//   kBreak, kContinue []
//   kThrow            [expr]
//   kTry              [kBlock, kCatch]
//   kCatch            text=variable; [kType, kBlock]
//   kAssert           [expr]
//   kAssign           text=operator ("=", "+=", ...); [lhs, rhs]
//   kConditional      [cond, then, else]
//   kInfix            text=operator; [lhs, rhs]
//   kPrefix           text=operator ("!", "-"); [operand]
//   kCast             [kType, expr]
//   kInstanceOf       [expr, kType]
//   kCall             text=method; [receiver|kEmpty, args...]
//   kNew              text=class; [args...]
//   kNewArray         [kType(element), size]
//   kArrayLiteral     [kType(element), elements...]
//   kFieldAccess      text=field; [receiver]
//   kArrayAccess      [array, index]
//   kName             text=identifier
//   kThis, kSuper, kEmpty, kHole []
//   literals          text=lexeme (decoded value for strings)
enum class NodeKind : uint8_t {
  kCompilationUnit,
  kClassDecl,
  kFieldDecl,
  kMethodDecl,
  kConstructorDecl,
  kParam,
  kType,
  // Statements.
  kBlock,
  kVarDecl,
  kExprStmt,
  kIf,
  kWhile,
  kFor,
  kReturn,
  kBreak,
  kContinue,
  kThrow,
  kTry,
  kCatch,
  kAssert,
  // Expressions.
  kAssign,
  kConditional,
  kInfix,
  kPrefix,
  kCast,
  kInstanceOf,
  kCall,
  kNew,
  kNewArray,
  kArrayLiteral,
  kFieldAccess,
  kArrayAccess,
  kName,
  kThis,
  kSuper,
  kIntLiteral,
  kFloatLiteral,
  kStringLiteral,
  kBooleanLiteral,
  kNullLiteral,
  // Placeholders.
  kEmpty,
  kHole,
};

std::string_view KindName(NodeKind kind);
bool IsStatementKind(NodeKind kind);
bool IsExpressionKind(NodeKind kind);
bool IsLiteralKind(NodeKind kind);

// A literal value as written: a non-null literal, or unary minus applied to
// a numeric literal.
struct Node;
bool IsLiteralValue(const Node& node);

// Half-open byte range into the owning file's text.
struct Span {
  int32_t begin = 0;
  int32_t end = 0;
};

// Stable node identity: preserved by edits, fresh for inserted nodes. Zero
// means "not yet assigned".
using NodeId = uint32_t;

// How a kName resolved during type checking.
enum class NameBinding : uint8_t { kUnresolved, kLocal, kField };

struct Node {
  NodeKind kind = NodeKind::kEmpty;
  std::string text;
  std::string aux;
  std::vector<Node> children;

  Span span;
  NodeId id = 0;
  int32_t preorder = -1;

  // Annotations written by the type checker.
  LangType type;
  NameBinding binding = NameBinding::kUnresolved;
  // Local slot (kName/kVarDecl/kParam/kCatch), field index (kFieldAccess,
  // field-bound kName) or frame size (kMethodDecl/kConstructorDecl).
  int32_t slot = -1;

  Node() = default;
  Node(NodeKind k, std::string t = {}, std::vector<Node> c = {})
      : kind(k), text(std::move(t)), children(std::move(c)) {}

  bool IsStatement() const { return IsStatementKind(kind); }
  bool IsExpression() const { return IsExpressionKind(kind); }
};

// Equality of kind, text, aux and children; ignores spans, ids and
// annotations.
bool StructurallyEqual(const Node& a, const Node& b);

// Number of nodes in the subtree.
int CountNodes(const Node& root);

// Assigns preorder indices 0..N-1 and fresh ids to nodes whose id is zero.
// `next_id` is advanced past every id handed out; pass 0 to start from the
// largest id already present plus one.
void IndexTree(Node& root, NodeId next_id = 0);

// Resets ids in a subtree to zero, e.g. before splicing a copy of donor code.
void ClearIds(Node& root);

// Calls fn(node) for every node of the subtree in preorder.
template <typename Node_, typename Fn>
void VisitPreorder(Node_& root, Fn&& fn) {
  fn(root);
  for (auto& child : root.children) VisitPreorder(child, fn);
}

// Read-only lookup structure over one file's AST: parent links, depths and
// preorder positions. Invalidated by any change to the tree.
class TreeIndex {
 public:
  explicit TreeIndex(const Node& root);

  const Node& root() const { return *root_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const Node& at(int preorder) const { return *nodes_[preorder]; }
  const Node* FindById(NodeId id) const;
  // Preorder index of `node`, which must belong to this tree.
  int PreorderOf(const Node& node) const;
  const Node* Parent(const Node& node) const;
  int Depth(const Node& node) const { return depth_[PreorderOf(node)]; }
  bool Contains(const Node& node) const;
  // Nearest enclosing node of `kind` (excluding `node` itself).
  const Node* EnclosingOfKind(const Node& node, NodeKind kind) const;
  // Enclosing method or constructor declaration.
  const Node* EnclosingCallable(const Node& node) const;
  bool IsAncestor(const Node& ancestor, const Node& node) const;

 private:
  void Build(const Node& node, int parent, int depth);

  const Node* root_;
  std::vector<const Node*> nodes_;
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::unordered_map<const Node*, int> position_;
  std::unordered_map<NodeId, int> by_id_;
};

// Node construction helpers used by the parser and the fix patterns.
Node MakeName(std::string name);
Node MakeType(const LangType& type);
Node MakeIntLiteral(int64_t value);
Node MakeFloatLiteral(double value);
Node MakeBooleanLiteral(bool value);
Node MakeStringLiteral(std::string value);
Node MakeNullLiteral();
Node MakeInfix(std::string op, Node lhs, Node rhs);
Node MakePrefix(std::string op, Node operand);
Node MakeBlock(std::vector<Node> statements);
Node MakeIf(Node cond, Node then_branch);
Node MakeReturn(std::vector<Node> value);
Node MakeExprStmt(Node expr);
Node MakeCast(const LangType& type, Node expr);

// Canonical spelling of a float literal, always with a decimal point.
std::string FormatFloatLiteral(double value);

}  // namespace templar

#endif  // TEMPLAR_AST_H_
