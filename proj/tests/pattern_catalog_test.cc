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

#include <algorithm>
#include <regex>

#include "templar/fault_localization.h"
#include "templar/normalize.h"
#include "templar/pattern_catalog.h"
#include "templar/printer.h"

namespace templar {
namespace {

std::string Squash(const std::string& text) {
  return std::regex_replace(text, std::regex("\\s+"), " ");
}

int LineOf(const std::string& src, const std::string& needle) {
  size_t at = src.find(needle);
  EXPECT_NE(at, std::string::npos) << needle;
  return 1 + static_cast<int>(std::count(src.begin(), src.begin() + at, '\n'));
}

struct Fixture {
  std::shared_ptr<const CheckedProgram> program;
  std::unique_ptr<RepairSite> site;
};

Fixture At(const std::string& src, const std::string& needle) {
  CheckResult checked = TypeCheckSource(src);
  for (const TypeError& e : checked.errors) ADD_FAILURE() << e.ToString();
  Fixture f;
  f.program = checked.program;
  auto id = StatementAtLine(f.program->file(0), LineOf(src, needle));
  EXPECT_TRUE(id.has_value());
  f.site = std::make_unique<RepairSite>(f.program, *id);
  return f;
}

// Squashed patched files of every verified candidate of `pattern` at the
// statement on the line containing `needle`.
std::vector<std::string> Fixes(const std::string& src, const std::string& needle,
                               const std::string& pattern) {
  Fixture f = At(src, needle);
  std::vector<std::string> out;
  for (const PatternMatch& m : MatchStatement(*f.site, PatternFilter({pattern}))) {
    for (const Candidate& c : ApplyPattern(m, *f.site)) {
      out.push_back(Squash(c.patched_text));
    }
  }
  return out;
}

bool AnyContains(const std::vector<std::string>& fixes, const std::string& part) {
  return std::any_of(fixes.begin(), fixes.end(), [&](const std::string& s) {
    return s.find(part) != std::string::npos;
  });
}

int MatchCount(const std::string& src, const std::string& needle,
               const std::string& pattern) {
  Fixture f = At(src, needle);
  return static_cast<int>(MatchStatement(*f.site, PatternFilter({pattern})).size());
}

TEST(CatalogTest, CountsPerChangeProperty) {
  const auto& catalog = Catalog();
  ASSERT_EQ(catalog.size(), 35u);
  std::map<ChangeAction, int> actions;
  std::map<Granularity, int> granularity;
  std::map<Spread, int> spread;
  std::set<std::string> ids;
  for (const PatternDescriptor& d : catalog) {
    ids.insert(d.id);
    ++actions[d.action];
    for (Granularity g : d.granularity) ++granularity[g];
    for (Spread s : d.spread) ++spread[s];
  }
  EXPECT_EQ(ids.size(), 35u);
  EXPECT_EQ(actions[ChangeAction::kUpdate], 17);
  EXPECT_EQ(actions[ChangeAction::kDelete], 4);
  EXPECT_EQ(actions[ChangeAction::kInsert], 13);
  EXPECT_EQ(actions[ChangeAction::kMove], 1);
  EXPECT_EQ(granularity[Granularity::kExpression], 21);
  EXPECT_EQ(granularity[Granularity::kStatement], 17);
  EXPECT_EQ(granularity[Granularity::kMethod], 1);
  EXPECT_EQ(spread[Spread::kSingle], 30);
  EXPECT_EQ(spread[Spread::kMultiple], 7);
}

TEST(CatalogTest, RowsAndLookup) {
  EXPECT_EQ(FindPattern("FP14")->action, ChangeAction::kMove);
  EXPECT_EQ(FindPattern("FP15.2")->granularity, std::vector<Granularity>{Granularity::kMethod});
  EXPECT_EQ(FindPattern("FP6.2")->action, ChangeAction::kDelete);
  EXPECT_EQ(FindPattern("FP10.4")->action, ChangeAction::kInsert);
  EXPECT_EQ(FindPattern("FP16"), nullptr);
  for (size_t i = 0; i < Catalog().size(); ++i) EXPECT_EQ(Catalog()[i].index, static_cast<int>(i));
}

TEST(CatalogTest, Filter) {
  PatternFilter family({"FP2"});
  int selected = 0;
  for (const PatternDescriptor& d : Catalog()) selected += family.Allows(d.id);
  EXPECT_EQ(selected, 5);
  EXPECT_FALSE(family.Allows("FP1"));
  PatternFilter mixed({"FP2.1", "FP11"});
  EXPECT_TRUE(mixed.Allows("FP11.3"));
  EXPECT_FALSE(mixed.Allows("FP2.2"));
  EXPECT_TRUE(PatternFilter().Allows("FP7.1"));
  EXPECT_THROW(PatternFilter({"FP99"}), std::invalid_argument);
  EXPECT_THROW(PatternFilter({"FP1.1"}), std::invalid_argument);
}

TEST(DefaultValueTest, ReturnTypeMapping) {
  EXPECT_EQ(PrettyPrint(DefaultValue(LangType::Boolean())), "false");
  EXPECT_EQ(PrettyPrint(DefaultValue(LangType::Int())), "0");
  EXPECT_EQ(PrettyPrint(DefaultValue(LangType::Float())), "0");
  EXPECT_EQ(PrettyPrint(DefaultValue(LangType::String())), "new String()");
  EXPECT_EQ(PrettyPrint(DefaultValue(LangType::Void())), "return;");
  EXPECT_EQ(PrettyPrint(DefaultValue(LangType::Class("C"))), "null");
  EXPECT_EQ(PrettyPrint(DefaultValue(LangType::ArrayOf(LangType::Int()))), "null");
  EXPECT_EQ(PrettyPrint(DefaultReturn(LangType::Int())), "return 0;");
}

const char* kShapes = R"(class Shape {
  int area() { return 0; }
}
class Rect extends Shape {
  int w;
  int area() { return w; }
}
class Use {
  int use(Rect r) { return r.w; }
  int m(Shape s) {
    Rect r = (Rect) s;
    int v = use(r);
    int z = 3;
    return z + v;
  }
  int guarded(Shape s) {
    if (s instanceof Rect) {
      Rect r = (Rect) s;
      return r.w;
    }
    return 0;
  }
  int plain(int a) {
    int b = a + 1;
    return b;
  }
}
)";

TEST(Fp1Test, WrapsCastAndDependents) {
  auto fixes = Fixes(kShapes, "Rect r = (Rect) s;\n    int v", "FP1");
  ASSERT_EQ(fixes.size(), 1u);
  EXPECT_TRUE(AnyContains(fixes,
      "if (s instanceof Rect) { Rect r = (Rect) s; int v = use(r); int z = 3; return z + v; }"))
      << fixes[0];
  EXPECT_EQ(MatchCount(kShapes, "int b = a + 1;", "FP1"), 0);
  EXPECT_EQ(MatchCount(kShapes, "Rect r = (Rect) s;\n      return", "FP1"), 0);
}

const char* kNulls = R"(class Node {
  int f;
  Node next;
}
class List {
  Node head;
  int count(Node x) {
    int n = 0;
    while (n < 10) {
      x.f = 1;
      n = n + 1;
    }
    return n;
  }
  void touch(Node y) {
    y.f = 2;
  }
  int prim(int a) {
    int b = a * 2;
    return b;
  }
}
)";

TEST(Fp2Test, Variants) {
  auto guard = Fixes(kNulls, "x.f = 1;", "FP2.1");
  EXPECT_TRUE(AnyContains(guard, "if (x != null) { x.f = 1; }"));
  auto loop = Fixes(kNulls, "x.f = 1;", "FP2.4");
  ASSERT_EQ(loop.size(), 1u);
  EXPECT_TRUE(AnyContains(loop, "if (x == null) { continue; } x.f = 1;"));
  auto early = Fixes(kNulls, "x.f = 1;", "FP2.2");
  EXPECT_TRUE(AnyContains(early, "if (x == null) { return 0; } x.f = 1;"));
  EXPECT_EQ(MatchCount(kNulls, "x.f = 1;", "FP2.3"), 0);
  auto void_return = Fixes(kNulls, "y.f = 2;", "FP2.3");
  EXPECT_TRUE(AnyContains(void_return, "if (y == null) { return; } y.f = 2;"));
  EXPECT_EQ(MatchCount(kNulls, "y.f = 2;", "FP2.4"), 0);
  auto substitute = Fixes(kNulls, "x.f = 1;", "FP2.5");
  EXPECT_TRUE(AnyContains(substitute, "if (x == null) { x = head; } x.f = 1;"));
  EXPECT_EQ(MatchCount(kNulls, "int b = a * 2;", "FP2"), 0);
}

TEST(Fp3Test, RangeChecker) {
  const char* src = R"(class A {
  int get(int[] a, int i) {
    int v = a[i];
    return v;
  }
  int first(int[] a) {
    if (a.length > 0) {
      return a[0];
    }
    return 0;
  }
  int none(int i) {
    return i;
  }
}
)";
  auto fixes = Fixes(src, "int v = a[i];", "FP3");
  EXPECT_TRUE(AnyContains(fixes, "if (i >= 0 && i < a.length) { int v = a[i]; return v; }"));
  EXPECT_EQ(MatchCount(src, "return a[0];", "FP3"), 0);
  EXPECT_EQ(MatchCount(src, "return i;", "FP3"), 0);
}

TEST(Fp4Test, InsertedStatements) {
  const char* src = R"(class Stream {
  int pending;
  void close() { pending = 0; }
}
class Writer {
  void flush(Stream s) { s.pending = 0; }
  boolean ready;
  void finish(Stream s) {
    s.close();
  }
  int g(Stream s, boolean b) {
    if (s != null && b) {
      return 1;
    }
    return 0;
  }
}
)";
  auto calls = Fixes(src, "s.close();", "FP4.1");
  EXPECT_TRUE(AnyContains(calls, "flush(s); s.close();"));
  auto tries = Fixes(src, "s.close();", "FP4.2");
  ASSERT_EQ(tries.size(), 1u);
  EXPECT_TRUE(AnyContains(tries, "try { s.close(); } catch (Exception e) { }") ||
              AnyContains(tries, "try { s.close(); } catch (Exception e) {}"))
      << tries[0];
  auto ifs = Fixes(src, "s.close();", "FP4.4");
  EXPECT_TRUE(AnyContains(ifs, "if (ready) { s.close(); }"));
  EXPECT_FALSE(AnyContains(ifs, "null) { s.close(); }"));
  auto returns = Fixes(src, "s.close();", "FP4.3");
  EXPECT_TRUE(AnyContains(returns, "return; s.close();"));
}

TEST(Fp5Test, CloneCreation) {
  const char* src = R"(class Other {
}
class Matrix {
  int n;
  Matrix clone() {
    return new Matrix();
  }
  Matrix copy() {
    return new Matrix();
  }
  Matrix clone2() {
    return null;
  }
}
class Grid {
  Other clone() {
    return new Other();
  }
}
)";
  auto fixes = Fixes(src, "return new Matrix();\n  }\n  Matrix copy", "FP5");
  ASSERT_EQ(fixes.size(), 1u);
  EXPECT_TRUE(AnyContains(fixes, "return (Matrix) super.clone();"));
  EXPECT_EQ(MatchCount(src, "return new Matrix();\n  }\n  Matrix clone2", "FP5"), 0);
  EXPECT_EQ(MatchCount(src, "return new Other();", "FP5"), 0);
}

const char* kConds = R"(class C {
  int f(boolean a, boolean b, int x, int y) {
    if (a && b) {
      return 1;
    }
    if (a) {
      return 2;
    }
    if (x < y) {
      return 3;
    }
    boolean c = y < x;
    return 0;
  }
}
)";

TEST(Fp6Test, ConditionalMutations) {
  auto removed = Fixes(kConds, "if (a && b)", "FP6.2");
  ASSERT_EQ(removed.size(), 2u);
  EXPECT_TRUE(AnyContains(removed, "if (a) { return 1; }"));
  EXPECT_TRUE(AnyContains(removed, "if (b) { return 1; }"));
  auto extended = Fixes(kConds, "if (a) {", "FP6.3");
  EXPECT_TRUE(AnyContains(extended, "if (a && b) { return 2; }"));
  EXPECT_TRUE(AnyContains(extended, "if (a || b) { return 2; }"));
  auto updated = Fixes(kConds, "if (x < y)", "FP6.1");
  EXPECT_TRUE(AnyContains(updated, "if (y < x) { return 3; }"));
  for (const char* swap : {"x <= y", "x > y", "x >= y", "x == y", "x != y"}) {
    EXPECT_FALSE(AnyContains(updated, std::string("if (") + swap + ")"));
  }
}

TEST(Fp7Test, DataTypes) {
  const char* src = R"(class Base {
}
class Derived extends Base {
}
class U {
  float f(int a, int b, Base e) {
    int x = a / b;
    Base d = (Base) e;
    return x;
  }
}
)";
  EXPECT_TRUE(AnyContains(Fixes(src, "int x = a / b;", "FP7.1"), "float x = a / b;"));
  EXPECT_TRUE(AnyContains(Fixes(src, "Base d = (Base) e;", "FP7.2"), "Base d = (Derived) e;"));
  const char* lonely = R"(class Only {
  int g() {
    Only o = null;
    return 0;
  }
}
)";
  EXPECT_TRUE(Fixes(lonely, "Only o = null;", "FP7").empty());
}

TEST(Fp8Test, IntegerDivision) {
  const char* src = R"(class D {
  float f(int a, int b, float c) {
    float x = 1 / 2;
    float y = a / b;
    float z = c / b;
    return x + y + z;
  }
}
)";
  EXPECT_TRUE(AnyContains(Fixes(src, "float x = 1 / 2;", "FP8"), "float x = 1.0 / 2;"));
  auto vars = Fixes(src, "float y = a / b;", "FP8");
  EXPECT_TRUE(AnyContains(vars, "float y = (float) a / b;"));
  EXPECT_TRUE(AnyContains(vars, "float y = a / (float) b;"));
  EXPECT_EQ(MatchCount(src, "float z = c / b;", "FP8"), 0);
}

TEST(Fp9Test, Literals) {
  const char* src = R"(class Html {
  String escape(String s) { return s; }
  boolean flag() {
    return true;
  }
  int limit(int n) {
    return n + 7;
  }
  String show(String name) {
    String t = escape(name);
    String r = name;
    return r;
  }
}
)";
  auto flips = Fixes(src, "return true;", "FP9.1");
  ASSERT_EQ(flips.size(), 1u);
  EXPECT_TRUE(AnyContains(flips, "return false;"));
  auto numbers = Fixes(src, "return n + 7;", "FP9.1");
  EXPECT_TRUE(AnyContains(numbers, "return n + 8;"));
  EXPECT_TRUE(AnyContains(numbers, "return n + 6;"));
  EXPECT_TRUE(AnyContains(numbers, "return n + 0;"));
  EXPECT_TRUE(AnyContains(numbers, "return n + -1;") || AnyContains(numbers, "return n + (-1);"));
  const char* html = R"(class Html {
  String escape(String s) { return s; }
  String show(String name) {
    String u = escape(name);
    String r = "<b>";
    return r;
  }
}
)";
  EXPECT_TRUE(AnyContains(Fixes(html, "String r = \"<b>\";", "FP9.2"),
                          "String r = escape(name);"));
}

const char* kCalls = R"(class M {
  int max(int a, int b) { return a; }
  int min(int a, int b) { return b; }
  int f(int a, int b) { return a; }
  int f(int a) { return a; }
  int g(int x) { return x; }
  int run(int a, int b, int x, int y) {
    int r = max(a, b);
    int s = f(a, b);
    int t = g(x);
    int u = g(x + 1);
    return r + s + t + u + y;
  }
}
)";

TEST(Fp10Test, MethodInvocations) {
  EXPECT_TRUE(AnyContains(Fixes(kCalls, "int r = max(a, b);", "FP10.1"), "int r = min(a, b);"));
  auto removed = Fixes(kCalls, "int s = f(a, b);", "FP10.3");
  ASSERT_EQ(removed.size(), 2u);
  EXPECT_TRUE(AnyContains(removed, "int s = f(a);"));
  EXPECT_TRUE(AnyContains(removed, "int s = f(b);"));
  EXPECT_EQ(MatchCount(kCalls, "int t = g(x);", "FP10.2"), 0);
  auto args = Fixes(kCalls, "int u = g(x + 1);", "FP10.2");
  for (const std::string& fix : args) {
    EXPECT_EQ(fix.find("int u = g(y);"), std::string::npos);
    EXPECT_EQ(fix.find("int u = g(1);"), std::string::npos);
  }
  auto inserted = Fixes(kCalls, "int t = g(x);", "FP10.4");
  EXPECT_EQ(inserted.size(), 0u);
  auto more = Fixes(kCalls, "int s = f(a, b);", "FP10.4");
  EXPECT_EQ(more.size(), 0u);
  const char* one = R"(class M {
  int f(int a, int b) { return a; }
  int f(int a) { return a; }
  int run(int a, int k) {
    int s = f(a);
    return s;
  }
}
)";
  EXPECT_TRUE(AnyContains(Fixes(one, "int s = f(a);", "FP10.4"), "int s = f(a, k);"));
}

TEST(Fp11Test, Operators) {
  const char* src = R"(class O {
  boolean lt(int a, int b) {
    return a < b;
  }
  int arith(int a, int b, int c) {
    return a + b * c;
  }
  boolean is(Object x) {
    return x instanceof O;
  }
}
)";
  auto swaps = Fixes(src, "return a < b;", "FP11.1");
  ASSERT_EQ(swaps.size(), 5u);
  for (const char* op : {"<=", ">", ">=", "==", "!="}) {
    EXPECT_TRUE(AnyContains(swaps, std::string("return a ") + op + " b;")) << op;
  }
  auto regrouped = Fixes(src, "return a + b * c;", "FP11.2");
  ASSERT_EQ(regrouped.size(), 1u);
  EXPECT_TRUE(AnyContains(regrouped, "return (a + b) * c;"));
  auto checks = Fixes(src, "return x instanceof O;", "FP11.3");
  EXPECT_TRUE(AnyContains(checks, "return x != null;"));
  EXPECT_TRUE(AnyContains(checks, "return x == null;"));
}

TEST(Fp12Test, ReturnedExpression) {
  const char* src = R"(class R {
  int f(int a) { return a; }
  int g(int a) { return a; }
  int run(int a, int x) {
    int k = g(a);
    return f(a);
  }
  int plainVar(int x) {
    return x;
  }
  int lit() {
    return 0;
  }
}
)";
  EXPECT_TRUE(AnyContains(Fixes(src, "return f(a);", "FP12"), "return g(a);"));
  EXPECT_EQ(MatchCount(src, "return x;", "FP12"), 0);
  EXPECT_EQ(MatchCount(src, "return 0;", "FP12"), 0);
}

TEST(Fp13Test, Variables) {
  const char* src = R"(class V {
  int sum(int n) {
    int sum = 0;
    int j = 2;
    for (int i = 0; i < n; i = i + 1) {
      sum = sum + i;
    }
    return sum;
  }
  boolean only(boolean flag) {
    return flag;
  }
}
)";
  auto fixes = Fixes(src, "sum = sum + i;", "FP13.1");
  EXPECT_TRUE(AnyContains(fixes, "sum = sum + j;"));
  for (const std::string& f : fixes) EXPECT_EQ(f.find("sum = sum + i;"), std::string::npos);
  EXPECT_TRUE(Fixes(src, "return flag;", "FP13").empty());
}

TEST(Fp14Test, MoveStatement) {
  const char* src = R"(class Mv {
  int a;
  int f() {
    a = 2;
    int b = a * 2;
    a = 5;
    return b;
  }
  int one() {
    return 1;
  }
  int g() {
    int x = 1;
    int y = x + 1;
    return y;
  }
}
)";
  auto moved = Fixes(src, "a = 5;", "FP14");
  ASSERT_FALSE(moved.empty());
  // The nearest legal slot comes first: just above the declaration.
  EXPECT_NE(moved[0].find("a = 2; a = 5; int b = a * 2; return b;"), std::string::npos)
      << moved[0];
  EXPECT_TRUE(Fixes(src, "return 1;", "FP14").empty());
  for (const std::string& f : Fixes(src, "int x = 1;", "FP14")) {
    EXPECT_EQ(f.find("int y = x + 1; int x = 1;"), std::string::npos);
  }
}

TEST(Fp15Test, Removal) {
  const char* src = R"(class Rm {
  int f(int x) {
    x = x;
    int used = x + 1;
    return used;
  }
}
)";
  auto deleted = Fixes(src, "x = x;", "FP15.1");
  ASSERT_EQ(deleted.size(), 1u);
  EXPECT_TRUE(AnyContains(deleted, "int f(int x) { int used = x + 1; return used; }"));
  EXPECT_TRUE(Fixes(src, "int used = x + 1;", "FP15.1").empty());
  auto body = Fixes(src, "x = x;", "FP15.2");
  ASSERT_EQ(body.size(), 1u);
  EXPECT_TRUE(AnyContains(body, "int f(int x) { return 0; }"));
}

TEST(MatchOrderTest, TraversalThenPriority) {
  Fixture f = At(kCalls, "int u = g(x + 1);");
  auto matches = MatchStatement(*f.site);
  ASSERT_FALSE(matches.empty());
  for (size_t i = 1; i < matches.size(); ++i) {
    auto key = [](const PatternMatch& m) {
      return std::make_tuple(m.traversal, ActionPriority(m.descriptor->action),
                             m.descriptor->index);
    };
    EXPECT_LE(key(matches[i - 1]), key(matches[i]));
  }
  EXPECT_EQ(matches.back().descriptor->id, "FP15.2");
}

TEST(DonorOrderTest, CandidatesSortedByDistance) {
  Fixture f = At(kCalls, "int u = g(x + 1);");
  for (const PatternMatch& m : MatchStatement(*f.site)) {
    auto candidates = ApplyPattern(m, *f.site, 1000);
    for (size_t i = 1; i < candidates.size(); ++i) {
      const auto& a = candidates[i - 1].patch.donor_distance;
      const auto& b = candidates[i].patch.donor_distance;
      if (a && b) {
        EXPECT_TRUE(std::tie(*a, candidates[i - 1].donor_position) <=
                    std::tie(*b, candidates[i].donor_position));
      }
      // Donor-free candidates come before donor ones.
      EXPECT_FALSE(a.has_value() && !b.has_value());
    }
  }
}

TEST(CapTest, AtMostTwentyVerified) {
  std::string src = "class Big {\n  int f(int q) {\n";
  for (int i = 0; i < 30; ++i) src += "    int v" + std::to_string(i) + " = q + " + std::to_string(i) + ";\n";
  src += "    int r = q;\n    return r;\n  }\n}\n";
  Fixture f = At(src, "int r = q;");
  for (const PatternMatch& m : MatchStatement(*f.site, PatternFilter({"FP13.1"}))) {
    auto all = ApplyPattern(m, *f.site, 1000);
    auto capped = ApplyPattern(m, *f.site);
    EXPECT_GT(all.size(), 20u);
    ASSERT_EQ(capped.size(), 20u);
    for (size_t i = 0; i < capped.size(); ++i) {
      EXPECT_EQ(capped[i].patched_text, all[i].patched_text);
    }
  }
}

}  // namespace
}  // namespace templar
