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

#ifndef TEMPLAR_AST_EDIT_H_
#define TEMPLAR_AST_EDIT_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "templar/ast.h"

namespace templar {

enum class EditAction { kUpdate, kDelete, kInsertBefore, kInsertAfter, kWrap,
                        kMove };

std::string_view EditActionName(EditAction action);

// Destination of a Move: before `before` inside `block`, or at the end of
// `block` when `before` is zero.
struct MovePosition {
  NodeId block = 0;
  NodeId before = 0;
};

// One structural change addressed by stable node id.
//
//   Update        replace `target` with `payload`
//   Delete        remove `target` from its list parent; a statement in a
//                 fixed slot becomes an empty block
//   Insert*       add `payload` as a sibling of `target`
//   Wrap          replace the sibling run target..range_end (or just target)
//                 with `payload`, whose single kHole receives the run
//   Move          relocate `target` to `destination`
struct AstEdit {
  EditAction action = EditAction::kUpdate;
  NodeId target = 0;
  std::optional<Node> payload;
  NodeId range_end = 0;
  MovePosition destination;

  static AstEdit Update(NodeId target, Node payload);
  static AstEdit Delete(NodeId target);
  static AstEdit InsertBefore(NodeId target, Node payload);
  static AstEdit InsertAfter(NodeId target, Node payload);
  static AstEdit Wrap(NodeId target, Node payload, NodeId range_end = 0);
  static AstEdit Move(NodeId target, MovePosition destination);
};

// A patch: edits applied in order to one file.
struct Patch {
  std::string file;
  std::vector<AstEdit> edits;
  std::string pattern_id;
  std::optional<int> donor_distance;
};

class EditError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Applies `edits` sequentially to a copy of `ast` and re-indexes it. Each
// edit sees the tree produced by the previous ones. Throws EditError on a
// dangling target or when the result violates a kind's child layout.
Node ApplyEdits(const Node& ast, const std::vector<AstEdit>& edits);

// Checks child arity/roles for every node in the subtree; returns a message
// describing the first violation, or nullopt.
std::optional<std::string> CheckWellFormed(const Node& root);

}  // namespace templar

#endif  // TEMPLAR_AST_EDIT_H_
