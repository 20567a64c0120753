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

// Matchers and candidate generators for the fix patterns.

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "templar/pattern_catalog.h"
#include "templar/printer.h"

namespace templar {
namespace {

using K = NodeKind;

std::string Text(const Node& node) { return PrettyPrint(node); }

Node Copy(const Node& node) {
  Node copy = node;
  ClearIds(copy);
  return copy;
}

Node Hole() { return Node(K::kHole); }

Node Guard(Node cond) { return MakeIf(std::move(cond), MakeBlock({Hole()})); }

Node NullTest(const Node& exp, const std::string& op) {
  return MakeInfix(op, Copy(exp), MakeNullLiteral());
}

bool AnyNode(const Node& root, const std::function<bool(const Node&)>& pred) {
  bool found = false;
  VisitPreorder(root, [&](const Node& n) { found = found || pred(n); });
  return found;
}

bool IsAndOr(const Node& n) {
  return n.kind == K::kInfix && (n.text == "&&" || n.text == "||");
}

bool IsNullComparison(const Node& n, const std::string& op) {
  return n.kind == K::kInfix && n.text == op &&
         (n.children[0].kind == K::kNullLiteral ||
          n.children[1].kind == K::kNullLiteral);
}

// Expression and type nodes belonging to `statement` itself, in preorder.
// Nested statements are skipped, except the init and update clauses of a
// for loop.
void CollectOwn(const Node& node, std::vector<const Node*>& out) {
  for (size_t i = 0; i < node.children.size(); ++i) {
    const Node& child = node.children[i];
    if (child.kind == K::kCatch || child.kind == K::kEmpty ||
        child.kind == K::kHole) {
      continue;
    }
    if (child.IsStatement()) {
      if (node.kind == K::kFor && (i == 0 || i == 2)) CollectOwn(child, out);
      continue;
    }
    if (child.IsExpression() || child.kind == K::kType) out.push_back(&child);
    CollectOwn(child, out);
  }
}

std::optional<int64_t> IntValue(const Node& n) {
  bool negative = n.kind == K::kPrefix;
  const Node& digits = negative ? n.children[0] : n;
  if (digits.kind != K::kIntLiteral) return std::nullopt;
  uint64_t magnitude = 0;
  const std::string& t = digits.text;
  auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), magnitude);
  if (ec != std::errc() || end != t.data() + t.size()) return std::nullopt;
  return static_cast<int64_t>(negative ? 0 - magnitude : magnitude);
}

std::optional<double> FloatValue(const Node& n) {
  bool negative = n.kind == K::kPrefix;
  const Node& digits = negative ? n.children[0] : n;
  if (digits.kind != K::kFloatLiteral) return std::nullopt;
  double value = std::strtod(digits.text.c_str(), nullptr);
  return negative ? -value : value;
}

bool IsArithmetic(const std::string& op) {
  return op == "+" || op == "-" || op == "*" || op == "/" || op == "%";
}

const std::vector<std::vector<std::string>>& OperatorClasses() {
  static const std::vector<std::vector<std::string>> classes = {
      {"<", "<=", ">", ">=", "==", "!="},
      {"+", "-", "*", "/", "%"},
      {"&&", "||"},
      {"+=", "-=", "*=", "/=", "%="},
  };
  return classes;
}

const std::vector<std::string>* OperatorClassOf(const std::string& op) {
  for (const auto& cls : OperatorClasses()) {
    if (std::find(cls.begin(), cls.end(), op) != cls.end()) return &cls;
  }
  return nullptr;
}

// Per-site facts shared by matchers and generators.
class SiteFacts {
 public:
  explicit SiteFacts(const RepairSite& site) : site_(site) {
    CollectOwn(site.statement(), own_);
    CollectGuards();
  }

  const std::vector<const Node*>& own() const { return own_; }

  const Node* Parent(const Node& n) const { return site_.index().Parent(n); }

  // Whether the statement only runs when `exp != null` holds.
  bool NullChecked(const std::string& exp) const {
    for (const auto& [cond, positive] : guards_) {
      std::string op = positive ? "!=" : "==";
      if (AnyNode(*cond, [&](const Node& n) {
            if (!IsNullComparison(n, op)) return false;
            const Node& other = n.children[0].kind == K::kNullLiteral
                                    ? n.children[1]
                                    : n.children[0];
            return Text(other) == exp;
          })) {
        return true;
      }
      if (positive && AnyNode(*cond, [&](const Node& n) {
            return n.kind == K::kInstanceOf && Text(n.children[0]) == exp;
          })) {
        return true;
      }
    }
    return false;
  }

  bool InstanceChecked(const std::string& exp, const std::string& type) const {
    for (const auto& [cond, positive] : guards_) {
      if (!positive) continue;
      if (AnyNode(*cond, [&](const Node& n) {
            return n.kind == K::kInstanceOf && Text(n.children[0]) == exp &&
                   n.children[1].text == type;
          })) {
        return true;
      }
    }
    return false;
  }

  bool RangeChecked(const std::string& array) const {
    for (const auto& [cond, positive] : guards_) {
      if (AnyNode(*cond, [&](const Node& n) {
            return n.kind == K::kFieldAccess && n.text == "length" &&
                   Text(n.children[0]) == array;
          })) {
        return true;
      }
    }
    return false;
  }

  bool InLoop() const {
    const Node* child = &site_.statement();
    for (const Node* p = Parent(*child); p != nullptr && p != &site_.method();
         child = p, p = Parent(*p)) {
      if ((p->kind == K::kWhile && child == &p->children[1]) ||
          (p->kind == K::kFor && child == &p->children[3])) {
        return true;
      }
    }
    return false;
  }

  // Last sibling that must move along when the statement is wrapped: later
  // statements of the same block using names it (transitively) declares.
  NodeId RangeEnd() const {
    const Node& s = site_.statement();
    const Node* block = Parent(s);
    if (block == nullptr || block->kind != K::kBlock) return 0;
    const auto& siblings = block->children;
    size_t first = 0;
    while (&siblings[first] != &s) ++first;
    std::set<std::string> names;
    if (s.kind == K::kVarDecl) names.insert(s.text);
    if (names.empty()) return 0;
    size_t end = first;
    for (size_t j = first + 1; j < siblings.size(); ++j) {
      bool uses = AnyNode(siblings[j], [&](const Node& n) {
        return n.kind == K::kName && n.binding == NameBinding::kLocal &&
               names.count(n.text) != 0;
      });
      if (!uses) continue;
      for (size_t k = end + 1; k <= j; ++k) {
        if (siblings[k].kind == K::kVarDecl) names.insert(siblings[k].text);
      }
      end = j;
    }
    return end == first ? 0 : siblings[end].id;
  }

  std::vector<const MethodInfo*> Visible(const std::string& class_name) const {
    auto it = visible_.find(class_name);
    if (it == visible_.end()) {
      it = visible_.emplace(class_name, site_.classes().VisibleMethods(class_name))
               .first;
    }
    return it->second;
  }

 private:
  void CollectGuards() {
    const Node& s = site_.statement();
    // Conditions of the statement itself guard its later operands.
    if (s.kind == K::kIf || s.kind == K::kWhile) guards_.push_back({&s.children[0], true});
    if (s.kind == K::kFor && s.children[1].kind != K::kEmpty) {
      guards_.push_back({&s.children[1], true});
    }
    for (const Node* n : own_) {
      if (n->kind == K::kConditional || IsAndOr(*n)) {
        guards_.push_back({&n->children[0], n->text != "||"});
      }
    }
    const Node* child = &s;
    for (const Node* p = Parent(s); p != nullptr && p != &site_.method();
         child = p, p = Parent(*p)) {
      if (p->kind == K::kIf && child != &p->children[0]) {
        guards_.push_back({&p->children[0], child == &p->children[1]});
      } else if (p->kind == K::kWhile && child == &p->children[1]) {
        guards_.push_back({&p->children[0], true});
      } else if (p->kind == K::kFor && child == &p->children[3] &&
                 p->children[1].kind != K::kEmpty) {
        guards_.push_back({&p->children[1], true});
      }
    }
  }

  const RepairSite& site_;
  std::vector<const Node*> own_;
  std::vector<std::pair<const Node*, bool>> guards_;
  mutable std::map<std::string, std::vector<const MethodInfo*>> visible_;
};

// Class whose methods a call or instance creation can reach.
const ClassInfo* CalleeClass(const RepairSite& site, const Node& n) {
  const ClassTable& classes = site.classes();
  if (n.kind == K::kNew) return classes.Find(n.text);
  const Node& receiver = n.children[0];
  switch (receiver.kind) {
    case K::kEmpty:
    case K::kThis:
      return &site.klass();
    case K::kSuper:
      return classes.Find(site.klass().parent);
    default:
      return receiver.type.IsClass() ? classes.Find(receiver.type.class_name)
                                     : nullptr;
  }
}

std::vector<const MethodInfo*> Overloads(const RepairSite& site, const Node& n) {
  const ClassInfo* cls = CalleeClass(site, n);
  std::vector<const MethodInfo*> result;
  if (cls == nullptr) return result;
  if (n.kind == K::kNew) {
    for (const MethodInfo& ctor : cls->constructors) result.push_back(&ctor);
    return result;
  }
  return site.classes().VisibleMethods(cls->name, n.text);
}

size_t FirstArg(const Node& n) { return n.kind == K::kCall ? 1 : 0; }

// Donor entries from several pools, merged by (distance, position).
std::vector<const DonorEntry*> Merge(
    std::initializer_list<const std::vector<DonorEntry>*> pools) {
  std::vector<const DonorEntry*> merged;
  for (const auto* pool : pools) {
    for (const DonorEntry& e : *pool) merged.push_back(&e);
  }
  std::stable_sort(merged.begin(), merged.end(),
                   [](const DonorEntry* a, const DonorEntry* b) {
                     return std::tie(a->distance, a->position) <
                            std::tie(b->distance, b->position);
                   });
  return merged;
}

// ---------------------------------------------------------------------------
// Matching.

class Matcher {
 public:
  Matcher(const RepairSite& site, const PatternFilter& filter)
      : site_(site), facts_(site), filter_(filter) {}

  std::vector<PatternMatch> Run() {
    const auto& own = facts_.own();
    for (size_t t = 0; t < own.size(); ++t) MatchExpression(*own[t], static_cast<int>(t));
    MatchStatementLevel(static_cast<int>(own.size()));
    Add("FP15.2", &site_.method(), static_cast<int>(own.size()) + 1);
    std::stable_sort(matches_.begin(), matches_.end(),
                     [](const PatternMatch& a, const PatternMatch& b) {
                       auto key = [](const PatternMatch& m) {
                         return std::make_tuple(m.traversal,
                                                ActionPriority(m.descriptor->action),
                                                m.descriptor->index);
                       };
                       return key(a) < key(b);
                     });
    return std::move(matches_);
  }

 private:
  void Add(const char* id, const Node* target, int traversal,
           MatchBindings bindings = {}) {
    if (!filter_.Allows(id)) return;
    PatternMatch m;
    m.descriptor = FindPattern(id);
    m.target = target;
    m.traversal = traversal;
    m.bindings = std::move(bindings);
    matches_.push_back(std::move(m));
  }

  static MatchBindings Bind(std::initializer_list<std::pair<const char*, const Node*>> nodes) {
    MatchBindings b;
    for (const auto& [name, node] : nodes) b.nodes[name] = node;
    return b;
  }

  bool IsConditionSlot(const Node& n, const Node* p) const {
    if (p == nullptr) return false;
    switch (p->kind) {
      case K::kIf:
      case K::kWhile:
      case K::kConditional:
        return &p->children[0] == &n;
      case K::kFor:
        return &p->children[1] == &n;
      default:
        return false;
    }
  }

  void MatchExpression(const Node& n, int t) {
    const Node* p = facts_.Parent(n);
    const ClassTable& classes = site_.classes();

    if (n.kind == K::kNew && n.text == site_.klass().name &&
        site_.method().kind == K::kMethodDecl && site_.method().text == "clone" &&
        site_.method().children.size() == 2) {
      const ClassInfo* parent = classes.Find(site_.klass().parent);
      if (parent != nullptr && parent->vtable.count("clone()") != 0) {
        Add("FP5", &n, t, Bind({{"exp", &n}}));
      }
    }

    if (n.IsExpression() && n.type.IsBoolean()) {
      bool root = IsConditionSlot(n, p) ||
                  (IsAndOr(n) && !(p != nullptr && IsAndOr(*p)));
      bool part = root || (p != nullptr && IsAndOr(*p));
      if (part) Add("FP6.1", &n, t, Bind({{"condExp1", &n}}));
      if (IsAndOr(n)) {
        Add("FP6.2", &n, t,
            Bind({{"condExp1", &n.children[0]}, {"condExp2", &n.children[1]}}));
      }
      if (root) Add("FP6.3", &n, t, Bind({{"condExp1", &n}}));
    }

    if (n.kind == K::kType && p != nullptr) {
      if (p->kind == K::kVarDecl) Add("FP7.1", &n, t, Bind({{"T1", &n}}));
      if (p->kind == K::kCast) {
        Add("FP7.2", &n, t, Bind({{"T1", &n}, {"exp", &p->children[1]}}));
      }
    }

    if (n.kind == K::kInfix && n.text == "/" && n.children[0].type.IsInt() &&
        n.children[1].type.IsInt()) {
      MatchBindings b = Bind({{"dividend", &n.children[0]}, {"divisor", &n.children[1]}});
      Add("FP8.1", &n, t, b);
      Add("FP8.2", &n, t, b);
      Add("FP8.3", &n, t, b);
    }

    if (IsLiteralValue(n) && !(p != nullptr && IsLiteralValue(*p))) {
      Add("FP9.1", &n, t, Bind({{"literal1", &n}}));
      Add("FP9.2", &n, t, Bind({{"literal1", &n}}));
    }

    if (n.kind == K::kCall || n.kind == K::kNew) {
      MatchBindings b = Bind({{"method1", &n}});
      if (n.kind == K::kCall) Add("FP10.1", &n, t, b);
      bool compound = false;
      for (size_t i = FirstArg(n); i < n.children.size(); ++i) {
        const Node& a = n.children[i];
        compound = compound || !(a.kind == K::kName || IsLiteralValue(a) ||
                                 a.kind == K::kNullLiteral || a.kind == K::kThis);
      }
      if (compound) Add("FP10.2", &n, t, b);
      if (n.children.size() > FirstArg(n)) Add("FP10.3", &n, t, b);
      Add("FP10.4", &n, t, b);
    }

    if ((n.kind == K::kInfix || (n.kind == K::kAssign && n.text != "=")) &&
        OperatorClassOf(n.text) != nullptr) {
      Add("FP11.1", &n, t, Bind({{"exp1", &n.children[0]}, {"exp2", &n.children[1]}}));
    }
    if (n.kind == K::kInfix && IsArithmetic(n.text) &&
        ((n.children[0].kind == K::kInfix && IsArithmetic(n.children[0].text)) ||
         (n.children[1].kind == K::kInfix && IsArithmetic(n.children[1].text)))) {
      Add("FP11.2", &n, t, Bind({{"exp", &n}}));
    }
    if (n.kind == K::kInstanceOf) {
      Add("FP11.3", &n, t, Bind({{"exp", &n.children[0]}, {"T", &n.children[1]}}));
    }

    if (p != nullptr && p->kind == K::kReturn && !IsLiteralValue(n) &&
        n.kind != K::kName && n.kind != K::kConditional &&
        n.kind != K::kNullLiteral && n.kind != K::kThis) {
      Add("FP12", &n, t, Bind({{"exp1", &n}}));
    }

    if (n.kind == K::kName && n.binding != NameBinding::kUnresolved) {
      Add("FP13.1", &n, t, Bind({{"var1", &n}}));
      bool lhs = p != nullptr && p->kind == K::kAssign && &p->children[0] == &n;
      if (!lhs) Add("FP13.2", &n, t, Bind({{"var1", &n}}));
    }
  }

  void MatchStatementLevel(int k) {
    const Node& s = site_.statement();
    const Node* parent = facts_.Parent(s);
    const auto& own = facts_.own();

    std::set<std::string> seen;
    for (const Node* n : own) {
      if (n->kind != K::kCast || !n->children[1].type.IsReference() ||
          !LangType::FromName(n->children[0].text).IsReference()) {
        continue;
      }
      std::string exp = Text(n->children[1]);
      if (facts_.InstanceChecked(exp, n->children[0].text)) continue;
      if (!seen.insert(exp + " instanceof " + n->children[0].text).second) continue;
      Add("FP1", &s, k, Bind({{"exp", &n->children[1]}, {"T", &n->children[0]}}));
    }

    seen.clear();
    LangType rt = site_.return_type();
    bool in_loop = facts_.InLoop();
    for (const Node* n : own) {
      const Node* exp = nullptr;
      if (n->kind == K::kFieldAccess || n->kind == K::kArrayAccess) exp = &n->children[0];
      if (n->kind == K::kCall) exp = &n->children[0];
      if (exp == nullptr || !exp->type.IsReference() || exp->type.IsNull()) continue;
      if (exp->kind == K::kThis || exp->kind == K::kSuper || exp->kind == K::kNew ||
          exp->kind == K::kEmpty || IsLiteralKind(exp->kind)) {
        continue;
      }
      std::string text = Text(*exp);
      if (facts_.NullChecked(text) || !seen.insert(text).second) continue;
      MatchBindings b = Bind({{"exp", exp}});
      Add("FP2.1", &s, k, b);
      if (!rt.IsVoid()) Add("FP2.2", &s, k, b);
      if (rt.IsVoid()) Add("FP2.3", &s, k, b);
      if (in_loop) Add("FP2.4", &s, k, b);
      Add("FP2.5", &s, k, b);
    }

    seen.clear();
    for (const Node* n : own) {
      if (n->kind != K::kArrayAccess) continue;
      std::string array = Text(n->children[0]);
      if (facts_.RangeChecked(array)) continue;
      if (!seen.insert(array + "[" + Text(n->children[1]) + "]").second) continue;
      Add("FP3", &s, k, Bind({{"exp", &n->children[0]}, {"index", &n->children[1]}}));
    }

    MatchBindings b = Bind({{"statement", &s}});
    Add("FP4.1", &s, k, b);
    Add("FP4.2", &s, k, b);
    Add("FP4.3", &s, k, b);
    Add("FP4.4", &s, k, b);
    if (parent != nullptr && parent->kind == K::kBlock) Add("FP14", &s, k, b);
    Add("FP15.1", &s, k, b);
  }

  const RepairSite& site_;
  SiteFacts facts_;
  const PatternFilter& filter_;
  std::vector<PatternMatch> matches_;
};

// ---------------------------------------------------------------------------
// Generation.

class Generator {
 public:
  Generator(const PatternMatch& match, const RepairSite& site)
      : match_(match), site_(site), facts_(site), target_(*match.target) {}

  std::vector<Candidate> Run() {
    static const std::map<std::string, void (Generator::*)()> table = {
        {"FP1", &Generator::Fp1},       {"FP2.1", &Generator::Fp2_1},
        {"FP2.2", &Generator::Fp2_2},   {"FP2.3", &Generator::Fp2_3},
        {"FP2.4", &Generator::Fp2_4},   {"FP2.5", &Generator::Fp2_5},
        {"FP3", &Generator::Fp3},       {"FP4.1", &Generator::Fp4_1},
        {"FP4.2", &Generator::Fp4_2},   {"FP4.3", &Generator::Fp4_3},
        {"FP4.4", &Generator::Fp4_4},   {"FP5", &Generator::Fp5},
        {"FP6.1", &Generator::Fp6_1},   {"FP6.2", &Generator::Fp6_2},
        {"FP6.3", &Generator::Fp6_3},   {"FP7.1", &Generator::Fp7},
        {"FP7.2", &Generator::Fp7},     {"FP8.1", &Generator::Fp8_1},
        {"FP8.2", &Generator::Fp8_2},   {"FP8.3", &Generator::Fp8_3},
        {"FP9.1", &Generator::Fp9_1},   {"FP9.2", &Generator::Fp9_2},
        {"FP10.1", &Generator::Fp10_1}, {"FP10.2", &Generator::Fp10_2},
        {"FP10.3", &Generator::Fp10_3}, {"FP10.4", &Generator::Fp10_4},
        {"FP11.1", &Generator::Fp11_1}, {"FP11.2", &Generator::Fp11_2},
        {"FP11.3", &Generator::Fp11_3}, {"FP12", &Generator::Fp12},
        {"FP13.1", &Generator::Fp13_1}, {"FP13.2", &Generator::Fp13_2},
        {"FP14", &Generator::Fp14},     {"FP15.1", &Generator::Fp15_1},
        {"FP15.2", &Generator::Fp15_2},
    };
    auto it = table.find(match_.descriptor->id);
    if (it != table.end()) (this->*(it->second))();
    return std::move(out_);
  }

 private:
  const Node& Bound(const char* name) const { return *match_.bindings.nodes.at(name); }
  const DonorSet& donors() const { return site_.donors(); }
  const ClassTable& classes() const { return site_.classes(); }
  const Node& stmt() const { return site_.statement(); }

  void Emit(std::vector<AstEdit> edits, int distance = -1, int position = -1) {
    Candidate c;
    c.patch.file = site_.source().path;
    c.patch.edits = std::move(edits);
    c.patch.pattern_id = match_.descriptor->id;
    if (distance >= 0) c.patch.donor_distance = distance;
    c.descriptor = match_.descriptor;
    c.target = target_.id;
    c.traversal = match_.traversal;
    c.donor_position = position;
    c.generation = static_cast<int>(out_.size());
    out_.push_back(std::move(c));
  }

  void EmitDonor(std::vector<AstEdit> edits, const DonorEntry& donor) {
    Emit(std::move(edits), donor.distance, donor.position);
  }

  void Replace(const Node& at, Node with) { Emit({AstEdit::Update(at.id, std::move(with))}); }

  void WrapStatement(Node wrapper, const DonorEntry* donor = nullptr) {
    AstEdit edit = AstEdit::Wrap(stmt().id, std::move(wrapper), facts_.RangeEnd());
    if (donor != nullptr) {
      EmitDonor({edit}, *donor);
    } else {
      Emit({edit});
    }
  }

  // FP1: guard the cast with an instanceof check.
  void Fp1() {
    Node check(K::kInstanceOf, "", {Copy(Bound("exp")), Copy(Bound("T"))});
    WrapStatement(Guard(std::move(check)));
  }

  // FP2.1 - FP2.5: null checks on a dereferenced expression.
  void Fp2_1() { WrapStatement(Guard(NullTest(Bound("exp"), "!="))); }

  void EarlyExit(Node exit) {
    Node check = MakeIf(NullTest(Bound("exp"), "=="), MakeBlock({std::move(exit)}));
    Emit({AstEdit::InsertBefore(stmt().id, std::move(check))});
  }

  void Fp2_2() { EarlyExit(DefaultReturn(site_.return_type())); }
  void Fp2_3() { EarlyExit(MakeReturn({})); }
  void Fp2_4() { EarlyExit(Node(K::kContinue)); }

  void Fp2_5() {
    const Node& exp = Bound("exp");
    std::string text = Text(exp);
    bool assignable = exp.kind == K::kName || exp.kind == K::kFieldAccess;
    for (const DonorEntry* d :
         Merge({&donors().variables, &donors().expressions, &donors().literals})) {
      if (!Compatible(classes(), d->type, exp.type) || Text(d->code) == text) continue;
      if (assignable) {
        Node assign(K::kAssign, "=", {Copy(exp), Copy(d->code)});
        Node check = MakeIf(NullTest(exp, "=="), MakeBlock({MakeExprStmt(std::move(assign))}));
        EmitDonor({AstEdit::InsertBefore(stmt().id, std::move(check))}, *d);
      } else {
        Node choice(K::kConditional, "",
                    {NullTest(exp, "=="), Copy(d->code), Copy(exp)});
        EmitDonor({AstEdit::Update(exp.id, std::move(choice))}, *d);
      }
    }
  }

  // FP3: bounds check on an array access.
  void Fp3() {
    const Node& array = Bound("exp");
    const Node& index = Bound("index");
    Node lower = MakeInfix(">=", Copy(index), MakeIntLiteral(0));
    Node length(K::kFieldAccess, "length", {Copy(array)});
    Node upper = MakeInfix("<", Copy(index), std::move(length));
    WrapStatement(Guard(MakeInfix("&&", std::move(lower), std::move(upper))));
  }

  // Expressions of the statement usable as receiver or argument.
  std::vector<const Node*> StatementExpressions() const {
    std::vector<const Node*> result;
    std::set<std::string> seen;
    for (const Node* n : facts_.own()) {
      if (!n->IsExpression() || IsLiteralValue(*n) || n->kind == K::kNullLiteral ||
          n->kind == K::kThis || n->kind == K::kSuper || n->kind == K::kAssign ||
          !n->type.IsKnown() || n->type.IsVoid() || n->type.IsNull()) {
        continue;
      }
      if (seen.insert(Text(*n)).second) result.push_back(n);
    }
    return result;
  }

  static bool IsJump(const Node& s) {
    return s.kind == K::kReturn || s.kind == K::kBreak || s.kind == K::kContinue ||
           s.kind == K::kThrow;
  }

  // FP4.1: a call of a donor method before or after the statement.
  void Fp4_1() {
    std::vector<const Node*> exps = StatementExpressions();
    const std::vector<const MethodInfo*> own_methods = facts_.Visible(site_.klass().name);
    for (const MethodDonor& md : donors().methods) {
      const MethodInfo* m = md.method;
      if (m->decl == &site_.method() || m->params.size() > 1) continue;
      std::vector<const Node*> receivers;
      if (std::find(own_methods.begin(), own_methods.end(), m) != own_methods.end()) {
        receivers.push_back(nullptr);
      }
      for (const Node* e : exps) {
        if (!e->type.IsClass()) continue;
        auto visible = facts_.Visible(e->type.class_name);
        if (std::find(visible.begin(), visible.end(), m) != visible.end()) {
          receivers.push_back(e);
        }
      }
      std::vector<const Node*> args;
      if (m->params.empty()) {
        args.push_back(nullptr);
      } else {
        for (const Node* e : exps) {
          if (Compatible(classes(), e->type, m->params[0])) args.push_back(e);
        }
      }
      for (const Node* receiver : receivers) {
        for (const Node* arg : args) {
          Node call(K::kCall, m->name, {receiver ? Copy(*receiver) : Node(K::kEmpty)});
          if (arg != nullptr) call.children.push_back(Copy(*arg));
          Node inserted = MakeExprStmt(std::move(call));
          Emit({AstEdit::InsertBefore(stmt().id, inserted)}, md.distance, md.position);
          if (!IsJump(stmt())) {
            Emit({AstEdit::InsertAfter(stmt().id, inserted)}, md.distance, md.position);
          }
        }
      }
    }
  }

  std::string FreshName(const std::string& base) const {
    std::set<std::string> used;
    VisitPreorder(site_.method(), [&](const Node& n) {
      if (n.kind == K::kName || n.kind == K::kVarDecl || n.kind == K::kParam ||
          n.kind == K::kCatch) {
        used.insert(n.text);
      }
    });
    for (const FieldInfo& f : site_.klass().fields) used.insert(f.name);
    std::string name = base;
    for (int i = 1; used.count(name) != 0; ++i) name = base + std::to_string(i);
    return name;
  }

  // FP4.2: surround with try-catch.
  void Fp4_2() {
    Node handler(K::kCatch, FreshName("e"),
                 {MakeType(LangType::Class("Exception")), MakeBlock({})});
    WrapStatement(Node(K::kTry, "", {MakeBlock({Hole()}), std::move(handler)}));
  }

  // FP4.3: a return before, or after, the statement.
  void Fp4_3() {
    LangType rt = site_.return_type();
    auto around = [&](const Node& ret, int distance, int position) {
      Emit({AstEdit::InsertBefore(stmt().id, ret)}, distance, position);
      if (!IsJump(stmt())) Emit({AstEdit::InsertAfter(stmt().id, ret)}, distance, position);
    };
    around(DefaultReturn(rt), -1, -1);
    if (rt.IsVoid()) return;
    for (const DonorEntry* d :
         Merge({&donors().variables, &donors().expressions, &donors().literals})) {
      if (!Compatible(classes(), d->type, rt)) continue;
      around(MakeReturn({Copy(d->code)}), d->distance, d->position);
    }
  }

  // FP4.4: surround with a donor condition. Checks that FP1, FP2 and FP3
  // would insert are left to those patterns.
  void Fp4_4() {
    for (const DonorEntry& d : donors().conditions) {
      bool excluded = AnyNode(d.code, [](const Node& n) {
        return n.kind == K::kInstanceOf || IsNullComparison(n, "==") ||
               IsNullComparison(n, "!=") ||
               (n.kind == K::kFieldAccess && n.text == "length");
      });
      if (excluded) continue;
      WrapStatement(Guard(Copy(d.code)), &d);
    }
  }

  // FP5: new T() becomes (T) super.clone().
  void Fp5() {
    Node call(K::kCall, "clone", {Node(K::kSuper, "super")});
    Replace(target_, MakeCast(LangType::Class(site_.klass().name), std::move(call)));
  }

  static bool BareOperatorSwap(const Node& a, const Node& b) {
    return a.kind == K::kInfix && b.kind == K::kInfix && a.text != b.text &&
           StructurallyEqual(a.children[0], b.children[0]) &&
           StructurallyEqual(a.children[1], b.children[1]);
  }

  // FP6.1: replace the condition with a donor one. Operands of the target
  // itself are skipped; dropping a clause is FP6.2.
  void Fp6_1() {
    std::string text = Text(target_);
    for (const DonorEntry& d : donors().conditions) {
      if (Text(d.code) == text || BareOperatorSwap(target_, d.code)) continue;
      bool own_part = AnyNode(target_, [&](const Node& n) {
        return &n != &target_ && StructurallyEqual(n, d.code);
      });
      if (own_part) continue;
      EmitDonor({AstEdit::Update(target_.id, Copy(d.code))}, d);
    }
  }

  void Fp6_2() {
    Replace(target_, Copy(target_.children[0]));
    Replace(target_, Copy(target_.children[1]));
  }

  // FP6.3: extend the condition with a donor clause not already in it.
  void Fp6_3() {
    for (const DonorEntry& d : donors().conditions) {
      bool present = AnyNode(target_, [&](const Node& n) { return StructurallyEqual(n, d.code); });
      if (present) continue;
      for (const char* op : {"&&", "||"}) {
        EmitDonor({AstEdit::Update(target_.id,
                                   MakeInfix(op, Copy(target_), Copy(d.code)))},
                  d);
      }
    }
  }

  // FP7: numeric widening/narrowing or a hierarchy-related class.
  void Fp7() {
    LangType t1 = LangType::FromName(target_.text);
    std::vector<LangType> alternatives;
    if (t1.base == LangType::Base::kInt || t1.base == LangType::Base::kFloat) {
      LangType t2 = t1;
      t2.base = t1.base == LangType::Base::kInt ? LangType::Base::kFloat
                                                : LangType::Base::kInt;
      alternatives.push_back(t2);
    } else if (t1.base == LangType::Base::kClass) {
      for (const std::string& name : classes().ClassNames()) {
        if (name == t1.class_name || name == "Object" || name == "Exception") continue;
        if (!classes().IsSubclassOf(name, t1.class_name) &&
            !classes().IsSubclassOf(t1.class_name, name)) {
          continue;
        }
        LangType t2 = LangType::Class(name);
        t2.dims = t1.dims;
        alternatives.push_back(t2);
      }
    }
    for (const LangType& t2 : alternatives) Replace(target_, MakeType(t2));
  }

  // FP8: make int / int a float division.
  void Fp8_1() { Replace(Bound("dividend"), MakeCast(LangType::Float(), Copy(Bound("dividend")))); }
  void Fp8_2() { Replace(Bound("divisor"), MakeCast(LangType::Float(), Copy(Bound("divisor")))); }

  void Fp8_3() {
    for (const char* side : {"dividend", "divisor"}) {
      if (auto v = IntValue(Bound(side))) {
        Replace(Bound(side), MakeFloatLiteral(static_cast<double>(*v)));
        return;
      }
    }
    Node scaled = MakeInfix("*", MakeFloatLiteral(1.0), Copy(Bound("dividend")));
    Replace(target_, MakeInfix("/", std::move(scaled), Copy(Bound("divisor"))));
  }

  // FP9.1: another literal of the same type.
  void Fp9_1() {
    std::set<std::string> emitted = {Text(target_)};
    auto emit = [&](Node literal, const DonorEntry* donor) {
      if (!emitted.insert(Text(literal)).second) return;
      if (donor != nullptr) {
        EmitDonor({AstEdit::Update(target_.id, std::move(literal))}, *donor);
      } else {
        Replace(target_, std::move(literal));
      }
    };
    const LangType& type = target_.type;
    if (type.IsBoolean()) {
      emit(MakeBooleanLiteral(target_.text != "true"), nullptr);
      return;
    }
    if (auto v = IntValue(target_)) {
      uint64_t u = static_cast<uint64_t>(*v);
      for (int64_t n : {int64_t{0}, int64_t{1}, int64_t{-1}, static_cast<int64_t>(u + 1),
                        static_cast<int64_t>(u - 1)}) {
        emit(MakeIntLiteral(n), nullptr);
      }
    } else if (auto f = FloatValue(target_)) {
      for (double n : {0.0, 1.0, -1.0, *f + 1, *f - 1}) emit(MakeFloatLiteral(n), nullptr);
    }
    for (const DonorEntry& d : donors().literals) {
      if (d.type == type) emit(Copy(d.code), &d);
    }
  }

  // FP9.2: a literal becomes a compatible expression.
  void Fp9_2() {
    for (const DonorEntry* d : Merge({&donors().variables, &donors().expressions})) {
      if (!Compatible(classes(), d->type, target_.type)) continue;
      EmitDonor({AstEdit::Update(target_.id, Copy(d->code))}, *d);
    }
  }

  const MethodInfo* Invoked() const {
    for (const MethodInfo* m : Overloads(site_, target_)) {
      if (m->Key() == target_.aux) return m;
    }
    return nullptr;
  }

  std::vector<LangType> ArgTypes(const Node& call, size_t skip = SIZE_MAX) const {
    std::vector<LangType> types;
    for (size_t i = FirstArg(call); i < call.children.size(); ++i) {
      if (i != skip) types.push_back(call.children[i].type);
    }
    return types;
  }

  // FP10.1: another method with the same parameters.
  void Fp10_1() {
    const MethodInfo* invoked = Invoked();
    const ClassInfo* cls = CalleeClass(site_, target_);
    if (invoked == nullptr || cls == nullptr) return;
    for (const MethodInfo* m : classes().VisibleMethods(cls->name)) {
      if (m->name == invoked->name || m->params != invoked->params) continue;
      bool fits = invoked->ret.IsVoid() ? m->ret.IsVoid()
                                        : Compatible(classes(), m->ret, invoked->ret);
      if (!fits) continue;
      Node renamed = Copy(target_);
      renamed.text = m->name;
      Replace(target_, std::move(renamed));
    }
  }

  // FP10.2: a compound argument becomes a donor expression.
  void Fp10_2() {
    for (size_t i = FirstArg(target_); i < target_.children.size(); ++i) {
      const Node& arg = target_.children[i];
      if (arg.kind == K::kName || IsLiteralValue(arg) || arg.kind == K::kNullLiteral ||
          arg.kind == K::kThis) {
        continue;
      }
      std::string text = Text(arg);
      for (const DonorEntry& d : donors().expressions) {
        if (!Compatible(classes(), d.type, arg.type) || Text(d.code) == text) continue;
        EmitDonor({AstEdit::Update(arg.id, Copy(d.code))}, d);
      }
    }
  }

  // FP10.3: drop an argument when an overload accepts the rest.
  void Fp10_3() {
    std::vector<const MethodInfo*> overloads = Overloads(site_, target_);
    size_t arity = target_.children.size() - FirstArg(target_);
    std::vector<const MethodInfo*> shorter;
    for (const MethodInfo* m : overloads) {
      if (m->params.size() + 1 == arity) shorter.push_back(m);
    }
    if (shorter.empty()) return;
    for (size_t i = FirstArg(target_); i < target_.children.size(); ++i) {
      bool ambiguous = false;
      if (classes().ResolveOverload(shorter, ArgTypes(target_, i), &ambiguous) == nullptr ||
          ambiguous) {
        continue;
      }
      Node reduced = Copy(target_);
      reduced.children.erase(reduced.children.begin() + i);
      Replace(target_, std::move(reduced));
    }
  }

  // FP10.4: add a donor argument when an overload takes one more.
  void Fp10_4() {
    std::vector<LangType> args = ArgTypes(target_);
    std::vector<const DonorEntry*> pool =
        Merge({&donors().variables, &donors().expressions, &donors().literals});
    for (const MethodInfo* m : Overloads(site_, target_)) {
      if (m->params.size() != args.size() + 1) continue;
      for (size_t j = 0; j <= args.size(); ++j) {
        bool fits = true;
        for (size_t a = 0, p = 0; a < args.size(); ++a, ++p) {
          if (p == j) ++p;
          fits = fits && classes().IsAssignable(args[a], m->params[p]);
        }
        if (!fits) continue;
        for (const DonorEntry* d : pool) {
          if (!Compatible(classes(), d->type, m->params[j])) continue;
          Node extended = Copy(target_);
          extended.children.insert(extended.children.begin() + FirstArg(target_) + j,
                                   Copy(d->code));
          EmitDonor({AstEdit::Update(target_.id, std::move(extended))}, *d);
        }
      }
    }
  }

  // FP11.1: another operator of the same class.
  void Fp11_1() {
    for (const std::string& op : *OperatorClassOf(target_.text)) {
      if (op == target_.text) continue;
      Node swapped = Copy(target_);
      swapped.text = op;
      Replace(target_, std::move(swapped));
    }
  }

  // FP11.2: regroup a two-operator arithmetic chain.
  void Fp11_2() {
    const Node& lhs = target_.children[0];
    const Node& rhs = target_.children[1];
    if (rhs.kind == K::kInfix && IsArithmetic(rhs.text)) {
      // a op1 (b op2 c) -> (a op1 b) op2 c
      Node inner = MakeInfix(target_.text, Copy(lhs), Copy(rhs.children[0]));
      Replace(target_, MakeInfix(rhs.text, std::move(inner), Copy(rhs.children[1])));
    }
    if (lhs.kind == K::kInfix && IsArithmetic(lhs.text)) {
      // (a op1 b) op2 c -> a op1 (b op2 c)
      Node inner = MakeInfix(target_.text, Copy(lhs.children[1]), Copy(rhs));
      Replace(target_, MakeInfix(lhs.text, Copy(lhs.children[0]), std::move(inner)));
    }
  }

  void Fp11_3() {
    Replace(target_, NullTest(Bound("exp"), "!="));
    Replace(target_, NullTest(Bound("exp"), "=="));
  }

  void Fp12() {
    std::string text = Text(target_);
    LangType rt = site_.return_type();
    for (const DonorEntry& d : donors().expressions) {
      if (!Compatible(classes(), d.type, rt) || Text(d.code) == text) continue;
      EmitDonor({AstEdit::Update(target_.id, Copy(d.code))}, d);
    }
  }

  bool IsAssignTarget() const {
    const Node* p = facts_.Parent(target_);
    return p != nullptr && p->kind == K::kAssign && &p->children[0] == &target_;
  }

  // FP13.1: another variable in scope.
  void Fp13_1() {
    bool lhs = IsAssignTarget();
    for (const DonorEntry& d : donors().variables) {
      if (d.code.text == target_.text) continue;
      bool fits = lhs ? d.type == target_.type
                      : Compatible(classes(), d.type, target_.type);
      if (fits) EmitDonor({AstEdit::Update(target_.id, Copy(d.code))}, d);
    }
  }

  // FP13.2: a variable read becomes an expression or literal.
  void Fp13_2() {
    for (const DonorEntry* d : Merge({&donors().expressions, &donors().literals})) {
      if (!Compatible(classes(), d->type, target_.type)) continue;
      EmitDonor({AstEdit::Update(target_.id, Copy(d->code))}, *d);
    }
  }

  // FP14: slots of the method body in textual order; the statement goes to
  // the nearest ones first.
  void Fp14() {
    struct Slot {
      NodeId block;
      NodeId before;
    };
    std::vector<Slot> slots;
    size_t origin = 0;
    std::function<void(const Node&)> walk = [&](const Node& n) {
      if (n.kind == K::kBlock) {
        for (const Node& c : n.children) {
          if (&c == &stmt()) origin = slots.size();
          slots.push_back({n.id, c.id});
          if (&c != &stmt()) walk(c);
        }
        slots.push_back({n.id, 0});
        return;
      }
      for (const Node& c : n.children) walk(c);
    };
    walk(site_.method().children.back());
    std::vector<size_t> order;
    for (size_t i = 0; i < slots.size(); ++i) {
      if (i != origin && i != origin + 1) order.push_back(i);
    }
    auto displacement = [&](size_t i) { return i < origin ? origin - i : i - origin - 1; };
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
      return displacement(a) < displacement(b);
    });
    for (size_t i : order) {
      Emit({AstEdit::Move(stmt().id, {slots[i].block, slots[i].before})});
    }
  }

  void Fp15_1() { Emit({AstEdit::Delete(stmt().id)}); }

  void Fp15_2() {
    LangType rt = site_.return_type();
    const Node& body = site_.method().children.back();
    Node replacement = rt.IsVoid() ? MakeBlock({}) : MakeBlock({DefaultReturn(rt)});
    Emit({AstEdit::Update(body.id, std::move(replacement))});
  }

  const PatternMatch& match_;
  const RepairSite& site_;
  SiteFacts facts_;
  const Node& target_;
  std::vector<Candidate> out_;
};

}  // namespace

std::vector<PatternMatch> MatchStatement(const RepairSite& site,
                                         const PatternFilter& filter) {
  return Matcher(site, filter).Run();
}

std::vector<Candidate> GenerateCandidates(const PatternMatch& match,
                                          const RepairSite& site) {
  return Generator(match, site).Run();
}

}  // namespace templar
