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

#include "templar/pattern_catalog.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "templar/normalize.h"
#include "templar/parser.h"
#include "templar/printer.h"

namespace templar {

std::string_view ChangeActionName(ChangeAction action) {
  switch (action) {
    case ChangeAction::kUpdate: return "Update";
    case ChangeAction::kDelete: return "Delete";
    case ChangeAction::kInsert: return "Insert";
    case ChangeAction::kMove: return "Move";
  }
  return "?";
}

int ActionPriority(ChangeAction action) {
  switch (action) {
    case ChangeAction::kUpdate: return 0;
    case ChangeAction::kInsert: return 1;
    case ChangeAction::kDelete: return 2;
    case ChangeAction::kMove: return 3;
  }
  return 4;
}

namespace {

using G = Granularity;
using S = Spread;
constexpr ChangeAction kUpd = ChangeAction::kUpdate;
constexpr ChangeAction kDel = ChangeAction::kDelete;
constexpr ChangeAction kIns = ChangeAction::kInsert;
constexpr ChangeAction kMov = ChangeAction::kMove;

std::vector<PatternDescriptor> BuildCatalog() {
  const std::vector<G> expr = {G::kExpression};
  const std::vector<G> stmt = {G::kStatement};
  const std::vector<G> both = {G::kExpression, G::kStatement};
  const std::vector<S> single = {S::kSingle};
  const std::vector<S> multiple = {S::kMultiple};
  const std::vector<S> either = {S::kSingle, S::kMultiple};
  std::vector<PatternDescriptor> c = {
      {"FP1", "Insert Cast Checker", kIns, stmt, single,
       "statement with an unchecked reference cast", false},
      {"FP2.1", "Insert Null Pointer Checker (guard)", kIns, stmt, single,
       "statement dereferencing a reference expression", false},
      {"FP2.2", "Insert Null Pointer Checker (return default)", kIns, stmt,
       multiple, "dereference in a non-void method", false},
      {"FP2.3", "Insert Null Pointer Checker (return)", kIns, stmt, multiple,
       "dereference in a void method", false},
      {"FP2.4", "Insert Null Pointer Checker (continue)", kIns, stmt, multiple,
       "dereference inside a loop", false},
      {"FP2.5", "Insert Null Pointer Checker (substitute)", kIns, stmt,
       multiple, "dereference with a compatible substitute", true},
      {"FP3", "Insert Range Checker", kIns, stmt, single,
       "statement with an unchecked array access", false},
      {"FP4.1", "Insert Missed Statement (invocation)", kIns, stmt, single,
       "any statement", true},
      {"FP4.2", "Insert Missed Statement (try-catch)", kIns, stmt, single,
       "any statement", false},
      {"FP4.3", "Insert Missed Statement (return)", kIns, stmt, single,
       "any statement", false},
      {"FP4.4", "Insert Missed Statement (if)", kIns, stmt, single,
       "any statement", true},
      {"FP5", "Mutate Class Instance Creation", kUpd, expr, single,
       "new T() of the current class inside clone()", false},
      {"FP6.1", "Mutate Conditional Expression (update)", kUpd, expr, single,
       "boolean condition", true},
      {"FP6.2", "Mutate Conditional Expression (remove)", kDel, expr, single,
       "&& or || expression", false},
      {"FP6.3", "Mutate Conditional Expression (insert)", kIns, expr, single,
       "boolean condition", true},
      {"FP7.1", "Mutate Data Type (declaration)", kUpd, expr, single,
       "declared type of a local variable", false},
      {"FP7.2", "Mutate Data Type (cast)", kUpd, expr, single,
       "cast type", false},
      {"FP8.1", "Mutate Integer Division (dividend)", kUpd, expr, single,
       "int / int", false},
      {"FP8.2", "Mutate Integer Division (divisor)", kUpd, expr, single,
       "int / int", false},
      {"FP8.3", "Mutate Integer Division (float literal)", kUpd, expr, single,
       "int / int", false},
      {"FP9.1", "Mutate Literal Expression (literal)", kUpd, expr, single,
       "literal", false},
      {"FP9.2", "Mutate Literal Expression (expression)", kUpd, expr, single,
       "literal", true},
      {"FP10.1", "Mutate Method Invocation (name)", kUpd, both, single,
       "method invocation", false},
      {"FP10.2", "Mutate Method Invocation (argument)", kUpd, both, single,
       "invocation with a compound argument", true},
      {"FP10.3", "Mutate Method Invocation (remove argument)", kDel, both,
       single, "invocation with arguments", false},
      {"FP10.4", "Mutate Method Invocation (insert argument)", kIns, both,
       single, "invocation or instance creation", true},
      {"FP11.1", "Mutate Operators (same class)", kUpd, expr, single,
       "operator expression", false},
      {"FP11.2", "Mutate Operators (priority)", kUpd, expr, single,
       "nested arithmetic expression", false},
      {"FP11.3", "Mutate Operators (instanceof)", kUpd, expr, single,
       "instanceof expression", false},
      {"FP12", "Mutate Return Statement", kUpd, expr, single,
       "compound returned expression", true},
      {"FP13.1", "Mutate Variable (variable)", kUpd, expr, single,
       "variable reference", true},
      {"FP13.2", "Mutate Variable (expression)", kUpd, expr, single,
       "variable read", true},
      {"FP14", "Move Statement", kMov, stmt, either,
       "statement in a method body block", false},
      {"FP15.1", "Remove Buggy Statement", kDel, stmt, either,
       "any statement", false},
      {"FP15.2", "Remove Buggy Method Body", kDel, {G::kMethod}, multiple,
       "enclosing method", false},
  };
  for (size_t i = 0; i < c.size(); ++i) c[i].index = static_cast<int>(i);
  return c;
}

}  // namespace

const std::vector<PatternDescriptor>& Catalog() {
  static const std::vector<PatternDescriptor> catalog = BuildCatalog();
  return catalog;
}

const PatternDescriptor* FindPattern(std::string_view id) {
  for (const PatternDescriptor& d : Catalog()) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

namespace {

bool IdSelects(std::string_view selector, std::string_view id) {
  if (selector == id) return true;
  return id.size() > selector.size() && id.substr(0, selector.size()) == selector &&
         id[selector.size()] == '.';
}

}  // namespace

PatternFilter::PatternFilter(const std::vector<std::string>& ids) {
  for (const std::string& raw : ids) {
    if (raw.empty()) continue;
    bool any = false;
    for (const PatternDescriptor& d : Catalog()) any = any || IdSelects(raw, d.id);
    if (!any) throw std::invalid_argument("unknown fix pattern '" + raw + "'");
    ids_.push_back(raw);
  }
}

bool PatternFilter::Allows(std::string_view id) const {
  if (ids_.empty()) return true;
  for (const std::string& selector : ids_) {
    if (IdSelects(selector, id)) return true;
  }
  return false;
}

Node DefaultValue(const LangType& rt) {
  if (rt.IsVoid()) return MakeReturn({});
  if (rt.IsBoolean()) return MakeBooleanLiteral(false);
  if (rt.IsPrimitive()) return MakeIntLiteral(0);
  if (rt.IsString()) return Node(NodeKind::kNew, "String");
  return MakeNullLiteral();
}

Node DefaultReturn(const LangType& rt) {
  if (rt.IsVoid()) return MakeReturn({});
  return MakeReturn({DefaultValue(rt)});
}

namespace {

const Node& FileAst(const CheckedProgram& program, int file,
                    const std::string& path) {
  if (file < 0) throw std::invalid_argument("no file " + path + " in program");
  return program.file(file).ast;
}

}  // namespace

RepairSite::RepairSite(std::shared_ptr<const CheckedProgram> program,
                       const StatementId& statement, DistanceMetric metric)
    : program_(std::move(program)),
      id_(statement),
      file_(program_->program().FileIndex(statement.file)),
      index_(FileAst(*program_, file_, statement.file)) {
  if (statement.preorder < 0 || statement.preorder >= index_.size()) {
    throw std::invalid_argument("no statement " + statement.ToString());
  }
  statement_ = &index_.at(statement.preorder);
  if (!statement_->IsStatement()) {
    throw std::invalid_argument(statement.ToString() + " is not a statement");
  }
  method_ = index_.EnclosingCallable(*statement_);
  const Node* class_decl = index_.EnclosingOfKind(*statement_, NodeKind::kClassDecl);
  if (method_ == nullptr || class_decl == nullptr) {
    throw std::invalid_argument(statement.ToString() + " is outside a method");
  }
  klass_ = program_->classes().Find(class_decl->text);
  donors_ = CollectDonors(*program_, file_, *statement_, metric);
}

LangType RepairSite::return_type() const {
  if (method_->kind == NodeKind::kMethodDecl) {
    return LangType::FromName(method_->children[0].text);
  }
  return LangType::Void();
}

bool VerifyCandidate(Candidate& candidate, const RepairSite& site) {
  candidate.patched.reset();
  candidate.patched_text.clear();
  try {
    Node ast = ApplyEdits(site.source().ast, candidate.patch.edits);
    std::string text = PrettyPrint(ast);
    Program program = site.program().program();
    program.files[site.file()] = ParseSourceFile(site.source().path, text);
    CheckResult checked = TypeCheck(std::move(program));
    if (!checked.ok()) return false;
    if (NormalizeEqual(checked.program->file(site.file()).ast,
                       site.source().ast)) {
      return false;
    }
    candidate.patched = std::move(checked.program);
    candidate.patched_text = std::move(text);
    return true;
  } catch (const EditError&) {
    return false;
  } catch (const SyntaxError&) {
    return false;
  }
}

void SortByDonor(std::vector<Candidate>& candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& b) {
                     auto key = [](const Candidate& c) {
                       bool donor = c.patch.donor_distance.has_value();
                       return std::make_tuple(donor, c.patch.donor_distance.value_or(0),
                                              c.donor_position, c.generation);
                     };
                     return key(a) < key(b);
                   });
}

std::vector<Candidate> ApplyPattern(const PatternMatch& match,
                                    const RepairSite& site, int cap) {
  std::vector<Candidate> generated = GenerateCandidates(match, site);
  SortByDonor(generated);
  std::vector<Candidate> verified;
  std::set<std::string> seen;
  for (Candidate& candidate : generated) {
    if (static_cast<int>(verified.size()) >= cap) break;
    if (!VerifyCandidate(candidate, site)) continue;
    if (!seen.insert(candidate.patched_text).second) continue;
    verified.push_back(std::move(candidate));
  }
  return verified;
}

}  // namespace templar
