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

#include "templar/ast_edit.h"

#include <algorithm>

#include "templar/printer.h"

namespace templar {

std::string_view EditActionName(EditAction action) {
  switch (action) {
    case EditAction::kUpdate: return "Update";
    case EditAction::kDelete: return "Delete";
    case EditAction::kInsertBefore: return "Insert-before";
    case EditAction::kInsertAfter: return "Insert-after";
    case EditAction::kWrap: return "Wrap";
    case EditAction::kMove: return "Move";
  }
  return "?";
}

AstEdit AstEdit::Update(NodeId target, Node payload) {
  AstEdit edit;
  edit.action = EditAction::kUpdate;
  edit.target = target;
  edit.payload = std::move(payload);
  return edit;
}

AstEdit AstEdit::Delete(NodeId target) {
  AstEdit edit;
  edit.action = EditAction::kDelete;
  edit.target = target;
  return edit;
}

AstEdit AstEdit::InsertBefore(NodeId target, Node payload) {
  AstEdit edit = Update(target, std::move(payload));
  edit.action = EditAction::kInsertBefore;
  return edit;
}

AstEdit AstEdit::InsertAfter(NodeId target, Node payload) {
  AstEdit edit = Update(target, std::move(payload));
  edit.action = EditAction::kInsertAfter;
  return edit;
}

AstEdit AstEdit::Wrap(NodeId target, Node payload, NodeId range_end) {
  AstEdit edit = Update(target, std::move(payload));
  edit.action = EditAction::kWrap;
  edit.range_end = range_end;
  return edit;
}

AstEdit AstEdit::Move(NodeId target, MovePosition destination) {
  AstEdit edit;
  edit.action = EditAction::kMove;
  edit.target = target;
  edit.destination = destination;
  return edit;
}

namespace {

struct Location {
  Node* parent = nullptr;
  size_t index = 0;
  Node* node = nullptr;
};

bool Find(Node& node, NodeId id, Node* parent, size_t index, Location& out) {
  if (node.id == id) {
    out = {parent, index, &node};
    return true;
  }
  for (size_t i = 0; i < node.children.size(); ++i) {
    if (Find(node.children[i], id, &node, i, out)) return true;
  }
  return false;
}

Location Locate(Node& root, NodeId id) {
  Location location;
  if (id == 0 || !Find(root, id, nullptr, 0, location)) {
    throw EditError("dangling edit target #" + std::to_string(id));
  }
  return location;
}

// Parents whose children (from `first`) form a homogeneous list.
bool IsListParent(const Node& parent, size_t index) {
  switch (parent.kind) {
    case NodeKind::kCompilationUnit:
    case NodeKind::kClassDecl:
    case NodeKind::kBlock:
    case NodeKind::kNew:
      return true;
    case NodeKind::kCall:
    case NodeKind::kArrayLiteral:
      return index >= 1;
    default:
      return false;
  }
}

// Statement slots that are not lists: if branches and loop bodies.
bool IsStatementSlot(const Node& parent, size_t index) {
  switch (parent.kind) {
    case NodeKind::kIf:
      return index >= 1;
    case NodeKind::kWhile:
      return index == 1;
    case NodeKind::kFor:
      return index == 3;
    default:
      return false;
  }
}

class Editor {
 public:
  explicit Editor(Node root) : root_(std::move(root)) {
    NodeId max_id = 0;
    VisitPreorder(root_, [&max_id](const Node& n) {
      max_id = std::max(max_id, n.id);
    });
    next_id_ = max_id + 1;
  }

  void Apply(const AstEdit& edit) {
    switch (edit.action) {
      case EditAction::kUpdate:
        Update(edit);
        break;
      case EditAction::kDelete:
        Delete(edit);
        break;
      case EditAction::kInsertBefore:
      case EditAction::kInsertAfter:
        Insert(edit);
        break;
      case EditAction::kWrap:
        Wrap(edit);
        break;
      case EditAction::kMove:
        MoveNode(edit);
        break;
    }
    AssignFreshIds();
  }

  Node Finish() {
    if (auto problem = CheckWellFormed(root_)) throw EditError(*problem);
    IndexTree(root_, next_id_);
    PrintAndRespan(root_);
    return std::move(root_);
  }

 private:
  Node Fresh(const AstEdit& edit) const {
    if (!edit.payload) {
      throw EditError(std::string(EditActionName(edit.action)) +
                      " edit without payload");
    }
    Node payload = *edit.payload;
    ClearIds(payload);
    return payload;
  }

  void AssignFreshIds() {
    VisitPreorder(root_, [this](Node& n) {
      if (n.id == 0) n.id = next_id_++;
    });
  }

  void Update(const AstEdit& edit) {
    Location at = Locate(root_, edit.target);
    *at.node = Fresh(edit);
  }

  void Delete(const AstEdit& edit) {
    Location at = Locate(root_, edit.target);
    if (at.parent == nullptr) throw EditError("cannot delete the root");
    if (IsListParent(*at.parent, at.index)) {
      at.parent->children.erase(at.parent->children.begin() + at.index);
      return;
    }
    if (IsStatementSlot(*at.parent, at.index)) {
      if (at.parent->kind == NodeKind::kIf && at.index == 2) {
        at.parent->children.pop_back();
      } else {
        *at.node = MakeBlock({});
      }
      return;
    }
    throw EditError("cannot delete " + std::string(KindName(at.node->kind)) +
                    " from " + std::string(KindName(at.parent->kind)));
  }

  void Insert(const AstEdit& edit) {
    Location at = Locate(root_, edit.target);
    Node payload = Fresh(edit);
    bool after = edit.action == EditAction::kInsertAfter;
    if (at.parent != nullptr && IsListParent(*at.parent, at.index)) {
      auto& siblings = at.parent->children;
      siblings.insert(siblings.begin() + at.index + (after ? 1 : 0),
                      std::move(payload));
      return;
    }
    if (at.parent != nullptr && IsStatementSlot(*at.parent, at.index)) {
      Node original = std::move(*at.node);
      std::vector<Node> statements;
      if (!after) statements.push_back(std::move(payload));
      statements.push_back(std::move(original));
      if (after) statements.push_back(std::move(payload));
      *at.node = MakeBlock(std::move(statements));
      return;
    }
    throw EditError("cannot insert next to " +
                    std::string(KindName(at.node->kind)));
  }

  static bool FillHole(Node& node, std::vector<Node>& run) {
    for (size_t i = 0; i < node.children.size(); ++i) {
      if (node.children[i].kind == NodeKind::kHole) {
        if (node.kind == NodeKind::kBlock) {
          node.children.erase(node.children.begin() + i);
          node.children.insert(node.children.begin() + i,
                               std::make_move_iterator(run.begin()),
                               std::make_move_iterator(run.end()));
        } else {
          if (run.size() != 1) {
            throw EditError("a multi-statement wrap needs a block hole");
          }
          node.children[i] = std::move(run.front());
        }
        return true;
      }
      if (FillHole(node.children[i], run)) return true;
    }
    return false;
  }

  void Wrap(const AstEdit& edit) {
    Location at = Locate(root_, edit.target);
    Node wrapper = Fresh(edit);
    std::vector<Node> run;
    size_t first = at.index;
    size_t last = at.index;
    if (edit.range_end != 0 && edit.range_end != edit.target) {
      if (at.parent == nullptr || at.parent->kind != NodeKind::kBlock) {
        throw EditError("range wrap outside a block");
      }
      auto& siblings = at.parent->children;
      auto it = std::find_if(siblings.begin() + first, siblings.end(),
                             [&](const Node& n) {
                               return n.id == edit.range_end;
                             });
      if (it == siblings.end()) {
        throw EditError("range end is not a later sibling of the target");
      }
      last = static_cast<size_t>(it - siblings.begin());
    }
    if (at.parent == nullptr) {
      run.push_back(std::move(*at.node));
      if (!FillHole(wrapper, run)) throw EditError("wrap payload has no hole");
      *at.node = std::move(wrapper);
      return;
    }
    auto& siblings = at.parent->children;
    for (size_t i = first; i <= last; ++i) run.push_back(std::move(siblings[i]));
    if (!FillHole(wrapper, run)) throw EditError("wrap payload has no hole");
    siblings.erase(siblings.begin() + first + 1, siblings.begin() + last + 1);
    siblings[first] = std::move(wrapper);
  }

  void MoveNode(const AstEdit& edit) {
    Location at = Locate(root_, edit.target);
    if (at.parent == nullptr || at.parent->kind != NodeKind::kBlock) {
      throw EditError("only block statements can be moved");
    }
    Node moved = std::move(*at.node);
    at.parent->children.erase(at.parent->children.begin() + at.index);
    Location block = Locate(root_, edit.destination.block);
    if (block.node->kind != NodeKind::kBlock) {
      throw EditError("move destination is not a block");
    }
    auto& siblings = block.node->children;
    auto position = siblings.end();
    if (edit.destination.before != 0) {
      position = std::find_if(siblings.begin(), siblings.end(),
                              [&](const Node& n) {
                                return n.id == edit.destination.before;
                              });
      if (position == siblings.end()) {
        throw EditError("move anchor is not in the destination block");
      }
    }
    siblings.insert(position, std::move(moved));
  }

  Node root_;
  NodeId next_id_;
};

bool IsExpr(const Node& n) { return n.IsExpression(); }
bool IsStmt(const Node& n) { return n.IsStatement(); }
bool IsKind(const Node& n, NodeKind kind) { return n.kind == kind; }

std::optional<std::string> Violation(const Node& node, const std::string& what) {
  return std::string(KindName(node.kind)) + ": " + what;
}

std::optional<std::string> CheckNode(const Node& n) {
  const auto& c = n.children;
  auto all = [&](size_t from, auto pred) {
    for (size_t i = from; i < c.size(); ++i) {
      if (!pred(c[i])) return false;
    }
    return true;
  };
  switch (n.kind) {
    case NodeKind::kCompilationUnit:
      if (!all(0, [](const Node& x) { return IsKind(x, NodeKind::kClassDecl); }))
        return Violation(n, "expected class declarations");
      break;
    case NodeKind::kClassDecl:
      if (n.text.empty()) return Violation(n, "missing name");
      if (!all(0, [](const Node& x) {
            return x.kind == NodeKind::kFieldDecl ||
                   x.kind == NodeKind::kMethodDecl ||
                   x.kind == NodeKind::kConstructorDecl;
          }))
        return Violation(n, "expected members");
      break;
    case NodeKind::kFieldDecl:
    case NodeKind::kVarDecl:
      if (c.empty() || c.size() > 2 || !IsKind(c[0], NodeKind::kType) ||
          (c.size() == 2 && !IsExpr(c[1])))
        return Violation(n, "expected type and optional initializer");
      break;
    case NodeKind::kMethodDecl:
      if (c.size() < 2 || !IsKind(c[0], NodeKind::kType) ||
          !IsKind(c.back(), NodeKind::kBlock))
        return Violation(n, "expected return type, parameters and body");
      for (size_t i = 1; i + 1 < c.size(); ++i) {
        if (!IsKind(c[i], NodeKind::kParam))
          return Violation(n, "expected parameter");
      }
      break;
    case NodeKind::kConstructorDecl:
      if (c.empty() || !IsKind(c.back(), NodeKind::kBlock))
        return Violation(n, "expected body");
      for (size_t i = 0; i + 1 < c.size(); ++i) {
        if (!IsKind(c[i], NodeKind::kParam))
          return Violation(n, "expected parameter");
      }
      break;
    case NodeKind::kParam:
      if (c.size() != 1 || !IsKind(c[0], NodeKind::kType))
        return Violation(n, "expected type");
      break;
    case NodeKind::kType:
      if (!c.empty() || n.text.empty()) return Violation(n, "malformed type");
      break;
    case NodeKind::kBlock:
      if (!all(0, IsStmt)) return Violation(n, "expected statements");
      break;
    case NodeKind::kExprStmt:
      if (c.size() != 1 || !IsExpr(c[0]))
        return Violation(n, "expected expression");
      break;
    case NodeKind::kIf:
      if (c.size() < 2 || c.size() > 3 || !IsExpr(c[0]) || !all(1, IsStmt))
        return Violation(n, "expected condition and branches");
      break;
    case NodeKind::kWhile:
      if (c.size() != 2 || !IsExpr(c[0]) || !IsStmt(c[1]))
        return Violation(n, "expected condition and body");
      break;
    case NodeKind::kFor:
      if (c.size() != 4 ||
          !(IsKind(c[0], NodeKind::kVarDecl) ||
            IsKind(c[0], NodeKind::kExprStmt) || IsKind(c[0], NodeKind::kEmpty)) ||
          !(IsExpr(c[1]) || IsKind(c[1], NodeKind::kEmpty)) ||
          !(IsKind(c[2], NodeKind::kExprStmt) || IsKind(c[2], NodeKind::kEmpty)) ||
          !IsStmt(c[3]))
        return Violation(n, "malformed for header");
      break;
    case NodeKind::kReturn:
      if (c.size() > 1 || !all(0, IsExpr))
        return Violation(n, "expected optional expression");
      break;
    case NodeKind::kBreak:
    case NodeKind::kContinue:
      if (!c.empty()) return Violation(n, "unexpected children");
      break;
    case NodeKind::kThrow:
    case NodeKind::kAssert:
    case NodeKind::kPrefix:
    case NodeKind::kFieldAccess:
      if (c.size() != 1 || !IsExpr(c[0]))
        return Violation(n, "expected one expression");
      break;
    case NodeKind::kTry:
      if (c.size() != 2 || !IsKind(c[0], NodeKind::kBlock) ||
          !IsKind(c[1], NodeKind::kCatch))
        return Violation(n, "expected block and catch");
      break;
    case NodeKind::kCatch:
      if (c.size() != 2 || !IsKind(c[0], NodeKind::kType) ||
          !IsKind(c[1], NodeKind::kBlock))
        return Violation(n, "expected type and block");
      break;
    case NodeKind::kAssign:
      if (c.size() != 2 || !IsExpr(c[1]) ||
          !(IsKind(c[0], NodeKind::kName) ||
            IsKind(c[0], NodeKind::kFieldAccess) ||
            IsKind(c[0], NodeKind::kArrayAccess)))
        return Violation(n, "expected assignable target and value");
      break;
    case NodeKind::kConditional:
      if (c.size() != 3 || !all(0, IsExpr))
        return Violation(n, "expected three operands");
      break;
    case NodeKind::kInfix:
    case NodeKind::kArrayAccess:
      if (c.size() != 2 || !all(0, IsExpr))
        return Violation(n, "expected two operands");
      break;
    case NodeKind::kCast:
      if (c.size() != 2 || !IsKind(c[0], NodeKind::kType) || !IsExpr(c[1]))
        return Violation(n, "expected type and operand");
      break;
    case NodeKind::kInstanceOf:
      if (c.size() != 2 || !IsExpr(c[0]) || !IsKind(c[1], NodeKind::kType))
        return Violation(n, "expected operand and type");
      break;
    case NodeKind::kCall:
      if (c.empty() ||
          !(IsExpr(c[0]) || IsKind(c[0], NodeKind::kEmpty) ||
            IsKind(c[0], NodeKind::kSuper)) ||
          !all(1, IsExpr))
        return Violation(n, "expected receiver and arguments");
      break;
    case NodeKind::kNew:
      if (!all(0, IsExpr)) return Violation(n, "expected arguments");
      break;
    case NodeKind::kNewArray:
      if (c.size() != 2 || !IsKind(c[0], NodeKind::kType) || !IsExpr(c[1]))
        return Violation(n, "expected element type and size");
      break;
    case NodeKind::kArrayLiteral:
      if (c.empty() || !IsKind(c[0], NodeKind::kType) || !all(1, IsExpr))
        return Violation(n, "expected element type and elements");
      break;
    case NodeKind::kHole:
      return Violation(n, "unfilled hole");
    default:
      if (!c.empty()) return Violation(n, "unexpected children");
  }
  return std::nullopt;
}

}  // namespace

Node ApplyEdits(const Node& ast, const std::vector<AstEdit>& edits) {
  Editor editor(ast);
  for (const AstEdit& edit : edits) editor.Apply(edit);
  return editor.Finish();
}

std::optional<std::string> CheckWellFormed(const Node& root) {
  std::optional<std::string> problem;
  VisitPreorder(root, [&problem](const Node& n) {
    if (!problem) problem = CheckNode(n);
  });
  return problem;
}

}  // namespace templar
