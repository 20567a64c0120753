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

#include <gtest/gtest.h>

#include <queue>
#include <random>

#include "templar/ast_distance.h"
#include "templar/ast_edit.h"
#include "templar/normalize.h"
#include "templar/parser.h"
#include "templar/printer.h"

namespace templar {
namespace {

Node Unit(const std::string& body) {
  return ParseUnit("class A {\n  int m(int x) {\n" + body + "\n  }\n}\n");
}

Node& Body(Node& unit) { return unit.children[0].children[0].children.back(); }

TEST(ApplyEditsTest, DeleteOnlyStatementLeavesEmptyBlock) {
  Node unit = Unit("return x;");
  NodeId target = Body(unit).children[0].id;
  Node edited = ApplyEdits(unit, {AstEdit::Delete(target)});
  EXPECT_TRUE(Body(edited).children.empty());
  EXPECT_FALSE(CheckWellFormed(edited).has_value());
  // The input is untouched.
  EXPECT_EQ(Body(unit).children.size(), 1u);
}

TEST(ApplyEditsTest, UpdateLiteralChangesOneLeaf) {
  Node unit = Unit("return 0;");
  const Node& literal = Body(unit).children[0].children[0];
  Node edited = ApplyEdits(unit, {AstEdit::Update(literal.id, MakeIntLiteral(1))});
  int differing = 0;
  std::vector<const Node*> a, b;
  VisitPreorder(unit, [&](const Node& n) { a.push_back(&n); });
  VisitPreorder(edited, [&](const Node& n) { b.push_back(&n); });
  ASSERT_EQ(a.size(), b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i]->kind != b[i]->kind || a[i]->text != b[i]->text) ++differing;
  }
  EXPECT_EQ(differing, 1);
  EXPECT_EQ(PrettyPrint(Body(edited).children[0]), "return 1;");
}

TEST(ApplyEditsTest, BatchEqualsSequentialApplication) {
  Node unit = Unit("x = 1;\nreturn x;");
  NodeId assign = Body(unit).children[0].id;
  NodeId ret_value = Body(unit).children[1].children[0].id;
  AstEdit insert = AstEdit::InsertBefore(assign, ParseStatement("x = x + 2;"));
  AstEdit update = AstEdit::Update(ret_value, ParseExpression("x * 3"));
  Node batch = ApplyEdits(unit, {insert, update});
  Node sequential = ApplyEdits(ApplyEdits(unit, {insert}), {update});
  EXPECT_TRUE(StructurallyEqual(batch, sequential));
  EXPECT_EQ(PrettyPrint(Body(batch)),
            "{\n    x = x + 2;\n    x = 1;\n    return x * 3;\n}");
}

TEST(ApplyEditsTest, PureAndReparsable) {
  Node unit = Unit("if (x > 0) return 1;\nreturn x;");
  NodeId then_branch = Body(unit).children[0].children[1].id;
  std::vector<AstEdit> edits = {
      AstEdit::InsertBefore(then_branch, ParseStatement("x = 2;"))};
  Node first = ApplyEdits(unit, edits);
  Node second = ApplyEdits(unit, edits);
  EXPECT_TRUE(StructurallyEqual(first, second));
  Node reparsed = ParseUnit(PrettyPrint(first));
  EXPECT_TRUE(StructurallyEqual(first, reparsed));
}

TEST(ApplyEditsTest, WrapRangeAndMove) {
  Node unit = Unit("int a = x;\nint b = a;\nreturn b;");
  Node& body = Body(unit);
  Node guard = MakeIf(ParseExpression("x > 0"), MakeBlock({Node(NodeKind::kHole)}));
  Node wrapped = ApplyEdits(
      unit, {AstEdit::Wrap(body.children[0].id, guard, body.children[1].id)});
  EXPECT_EQ(Body(wrapped).children.size(), 2u);
  EXPECT_EQ(Body(wrapped).children[0].children[1].children.size(), 2u);

  Node moved = ApplyEdits(
      unit, {AstEdit::Move(body.children[2].id, {body.id, body.children[0].id})});
  EXPECT_EQ(Body(moved).children[0].kind, NodeKind::kReturn);
}

TEST(ApplyEditsTest, Errors) {
  Node unit = Unit("return x;");
  EXPECT_THROW(ApplyEdits(unit, {AstEdit::Delete(9999)}), EditError);
  const Node& value = Body(unit).children[0].children[0];
  // A statement where an expression is required violates the layout.
  EXPECT_THROW(ApplyEdits(unit, {AstEdit::Update(value.id, ParseStatement("x = 1;"))}),
               EditError);
}

// Random trees of nested blocks for the distance properties.
Node RandomTree(std::mt19937& rng, int size) {
  std::vector<Node> nodes(size, Node(NodeKind::kBlock));
  // Attach each node i > 0 to a random earlier node, building bottom-up.
  std::vector<int> parent(size, -1);
  for (int i = 1; i < size; ++i) parent[i] = rng() % i;
  for (int i = size - 1; i > 0; --i) {
    nodes[parent[i]].children.insert(nodes[parent[i]].children.begin(),
                                     std::move(nodes[i]));
  }
  Node root = std::move(nodes[0]);
  IndexTree(root, 1);
  return root;
}

std::vector<std::vector<int>> BfsDistances(const TreeIndex& index) {
  int n = index.size();
  std::vector<std::vector<int>> adjacent(n);
  for (int i = 1; i < n; ++i) {
    int p = index.PreorderOf(*index.Parent(index.at(i)));
    adjacent[i].push_back(p);
    adjacent[p].push_back(i);
  }
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> queue;
    queue.push(s);
    dist[s][s] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop();
      for (int v : adjacent[u]) {
        if (dist[s][v] < 0) {
          dist[s][v] = dist[s][u] + 1;
          queue.push(v);
        }
      }
    }
  }
  return dist;
}

TEST(AstDistanceTest, MatchesBfsAndIsAMetric) {
  std::mt19937 rng(11);
  for (int round = 0; round < 40; ++round) {
    Node root = RandomTree(rng, 1 + rng() % 50);
    TreeIndex index(root);
    auto oracle = BfsDistances(index);
    int n = index.size();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        int d = AstDistance(index, index.at(i), index.at(j));
        ASSERT_EQ(d, oracle[i][j]);
        EXPECT_EQ(d == 0, i == j);
        EXPECT_EQ(d, AstDistance(index, index.at(j), index.at(i)));
      }
    }
    for (int k = 0; k < 30 && n > 0; ++k) {
      const Node& a = index.at(rng() % n);
      const Node& b = index.at(rng() % n);
      const Node& c = index.at(rng() % n);
      EXPECT_LE(AstDistance(index, a, c),
                AstDistance(index, a, b) + AstDistance(index, b, c));
    }
  }
}

TEST(AstDistanceTest, SimpleCasesAndErrors) {
  Node unit = Unit("return x;");
  TreeIndex index(unit);
  const Node& ret = Body(unit).children[0];
  EXPECT_EQ(AstDistance(index, ret, ret), 0);
  EXPECT_EQ(AstDistance(index, ret.children[0], ret), 1);
  EXPECT_EQ(AstDistance(index, ret, ret.children[0], DistanceMetric::kPreorderGap), 1);
  Node other = Unit("return x;");
  EXPECT_THROW(AstDistance(index, ret, Body(other)), std::invalid_argument);
}

TEST(NormalizeTest, Examples) {
  EXPECT_TRUE(NormalizeEqual(ParseExpression("x != null"),
                             ParseExpression("!(x == null)")));
  EXPECT_TRUE(NormalizeEqual(ParseExpression("(x)"), ParseExpression("x")));
  EXPECT_FALSE(NormalizeEqual(ParseExpression("a && b"), ParseExpression("b && a")));
  EXPECT_TRUE(NormalizeEqual(ParseExpression("null == x"), ParseExpression("x == null")));
  EXPECT_FALSE(NormalizeEqual(ParseExpression("a < b"), ParseExpression("b < a")));
}

TEST(NormalizeTest, EnumeratedTwoOperandForms) {
  // Oracle: the forms of one equality test over {x, null} in both operand
  // orders, negated or not, fall into exactly two classes.
  std::vector<std::pair<std::string, bool>> forms;  // text, means "equal"
  for (std::string op : {"==", "!="}) {
    for (bool swap : {false, true}) {
      for (bool negate : {false, true}) {
        std::string core = swap ? "null " + op + " x" : "x " + op + " null";
        bool equal = (op == "==") != negate;
        forms.emplace_back(negate ? "!(" + core + ")" : core, equal);
      }
    }
  }
  for (const auto& [a, ea] : forms) {
    for (const auto& [b, eb] : forms) {
      EXPECT_EQ(NormalizeEqual(ParseExpression(a), ParseExpression(b)), ea == eb)
          << a << " vs " << b;
    }
  }
}

TEST(NormalizeTest, EquivalenceRelation) {
  std::vector<std::string> texts = {"a == b", "b == a", "!(a != b)", "a != b",
                                    "!(b == a)", "a && b", "b && a", "a",
                                    "!(a == b) && c", "c", "b != a && c"};
  std::vector<Node> nodes;
  for (const auto& t : texts) nodes.push_back(ParseExpression(t));
  for (auto& a : nodes) {
    EXPECT_TRUE(NormalizeEqual(a, a));
    for (auto& b : nodes) {
      EXPECT_EQ(NormalizeEqual(a, b), NormalizeEqual(b, a));
      for (auto& c : nodes) {
        if (NormalizeEqual(a, b) && NormalizeEqual(b, c)) {
          EXPECT_TRUE(NormalizeEqual(a, c));
        }
      }
    }
  }
}

}  // namespace
}  // namespace templar
