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

#include "templar/donor_search.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "templar/printer.h"

namespace templar {

const MethodDonor* DonorSet::FindMethod(const MethodInfo* method) const {
  for (const MethodDonor& donor : methods) {
    if (donor.method == method) return &donor;
  }
  return nullptr;
}

bool Compatible(const ClassTable& classes, const LangType& entry,
                const LangType& required) {
  return classes.IsAssignable(entry, required);
}

std::vector<const Node*> VisibleLocals(const TreeIndex& index, const Node& at) {
  std::vector<const Node*> locals;
  const Node* child = &at;
  for (const Node* parent = index.Parent(at); parent != nullptr;
       child = parent, parent = index.Parent(*parent)) {
    switch (parent->kind) {
      case NodeKind::kBlock:
        for (const Node& sibling : parent->children) {
          if (&sibling == child) break;
          if (sibling.kind == NodeKind::kVarDecl) locals.push_back(&sibling);
        }
        break;
      case NodeKind::kFor:
        if (child != &parent->children[0] &&
            parent->children[0].kind == NodeKind::kVarDecl) {
          locals.push_back(&parent->children[0]);
        }
        break;
      case NodeKind::kCatch:
        if (child == &parent->children[1]) locals.push_back(parent);
        break;
      case NodeKind::kMethodDecl:
      case NodeKind::kConstructorDecl:
        for (const Node& param : parent->children) {
          if (param.kind == NodeKind::kParam) locals.push_back(&param);
        }
        return locals;
      default:
        break;
    }
  }
  return locals;
}

namespace {

bool ContainsAssignment(const Node& node) {
  bool found = false;
  VisitPreorder(node, [&](const Node& n) {
    found = found || n.kind == NodeKind::kAssign;
  });
  return found;
}

class Collector {
 public:
  Collector(const CheckedProgram& program, int file, const Node& buggy,
            DistanceMetric metric)
      : classes_(program.classes()),
        source_(program.file(file)),
        index_(source_.ast),
        buggy_(buggy),
        metric_(metric) {
    method_ = index_.EnclosingCallable(buggy);
    const Node* class_decl = index_.EnclosingOfKind(buggy, NodeKind::kClassDecl);
    class_decl_ = class_decl;
    klass_ = class_decl ? classes_.Find(class_decl->text) : nullptr;
    for (const Node* local : VisibleLocals(index_, buggy)) {
      visible_[local->text] = local;
    }
    CollectRelevantTypes();
  }

  DonorSet Run() {
    DonorSet set;
    CollectVariables(set);
    std::map<std::string, DonorEntry> expressions;
    std::map<std::string, DonorEntry> literals;
    VisitPreorder(source_.ast, [&](const Node& node) {
      if (&node == &buggy_ || !node.IsExpression()) return;
      if (!node.type.IsKnown() || node.type.IsVoid() || node.type.IsNull()) {
        return;
      }
      if (!Relevant(node.type)) return;
      if (IsLiteralValue(node)) {
        const Node* parent = index_.Parent(node);
        // The digits under a unary minus belong to the negative literal.
        if (parent != nullptr && IsLiteralValue(*parent)) return;
        Keep(literals, node);
        return;
      }
      if (node.kind == NodeKind::kName || node.kind == NodeKind::kThis ||
          node.kind == NodeKind::kSuper || node.kind == NodeKind::kNullLiteral ||
          ContainsAssignment(node) || !InScope(node)) {
        return;
      }
      Keep(expressions, node);
    });
    set.expressions = Sorted(std::move(expressions));
    set.literals = Sorted(std::move(literals));
    for (const DonorEntry& entry : set.expressions) {
      if (entry.type.IsBoolean()) set.conditions.push_back(entry);
    }
    for (const DonorEntry& entry : set.variables) {
      if (entry.type.IsBoolean()) set.conditions.push_back(entry);
    }
    SortPool(set.conditions);
    CollectMethods(set);
    return set;
  }

 private:
  int Distance(const Node& node) const {
    return AstDistance(index_, node, buggy_, metric_);
  }

  void CollectRelevantTypes() {
    if (method_ == nullptr) return;
    VisitPreorder(*method_, [&](const Node& node) {
      if (node.IsExpression() && node.type.IsKnown()) {
        relevant_.insert(node.type);
      }
      if (node.kind == NodeKind::kVarDecl || node.kind == NodeKind::kParam ||
          node.kind == NodeKind::kCatch) {
        relevant_.insert(node.type);
      }
    });
    if (method_->kind == NodeKind::kMethodDecl) {
      relevant_.insert(LangType::FromName(method_->children[0].text));
    }
    // Conditions are always relevant: every guard needs one.
    relevant_.insert(LangType::Boolean());
  }

  bool Relevant(const LangType& type) const {
    if (relevant_.count(type) != 0) return true;
    for (const LangType& r : relevant_) {
      if (Compatible(classes_, type, r)) return true;
    }
    return false;
  }

  // Locals mentioned by a donor must resolve to the same declaration kind
  // and type at the buggy location.
  bool InScope(const Node& expr) const {
    bool ok = true;
    VisitPreorder(expr, [&](const Node& n) {
      if (!ok || n.kind != NodeKind::kName) return;
      if (n.binding == NameBinding::kLocal) {
        auto it = visible_.find(n.text);
        ok = it != visible_.end() && it->second->type == n.type;
      } else if (n.binding == NameBinding::kField) {
        ok = visible_.count(n.text) == 0 && klass_ != nullptr &&
             classes_.FindField(klass_->name, n.text) != nullptr;
      }
    });
    return ok;
  }

  void Keep(std::map<std::string, DonorEntry>& pool, const Node& node) {
    DonorEntry entry;
    entry.code = node;
    ClearIds(entry.code);
    entry.origin = &node;
    entry.type = node.type;
    entry.distance = Distance(node);
    entry.position = node.preorder;
    std::string key = PrettyPrint(node);
    auto it = pool.find(key);
    if (it == pool.end() ||
        std::tie(entry.distance, entry.position) <
            std::tie(it->second.distance, it->second.position)) {
      pool[key] = std::move(entry);
    }
  }

  static void SortPool(std::vector<DonorEntry>& pool) {
    std::stable_sort(pool.begin(), pool.end(),
                     [](const DonorEntry& a, const DonorEntry& b) {
                       return std::tie(a.distance, a.position) <
                              std::tie(b.distance, b.position);
                     });
  }

  static std::vector<DonorEntry> Sorted(std::map<std::string, DonorEntry> pool) {
    std::vector<DonorEntry> entries;
    for (auto& [key, entry] : pool) entries.push_back(std::move(entry));
    SortPool(entries);
    return entries;
  }

  void CollectVariables(DonorSet& set) {
    for (const auto& [name, decl] : visible_) {
      if (!Relevant(decl->type)) continue;
      DonorEntry entry;
      entry.code = MakeName(name);
      entry.code.type = decl->type;
      entry.origin = decl;
      entry.type = decl->type;
      entry.distance = Distance(*decl);
      entry.position = decl->preorder;
      set.variables.push_back(std::move(entry));
    }
    if (klass_ != nullptr) {
      for (const FieldInfo& field : klass_->fields) {
        // Only fields declared in this file, and not hidden by a local.
        if (field.decl == nullptr || !index_.Contains(*field.decl) ||
            visible_.count(field.name) != 0 || !Relevant(field.type)) {
          continue;
        }
        DonorEntry entry;
        entry.code = MakeName(field.name);
        entry.code.type = field.type;
        entry.origin = field.decl;
        entry.type = field.type;
        entry.distance = Distance(*field.decl);
        entry.position = field.decl->preorder;
        set.variables.push_back(std::move(entry));
      }
    }
    SortPool(set.variables);
  }

  void CollectMethods(DonorSet& set) {
    std::set<const MethodInfo*> seen;
    auto add = [&](const MethodInfo* method) {
      if (method->decl == nullptr || method->is_constructor ||
          !seen.insert(method).second) {
        return;
      }
      MethodDonor donor;
      donor.method = method;
      if (index_.Contains(*method->decl)) {
        donor.distance = Distance(*method->decl);
        donor.position = method->decl->preorder;
      } else if (class_decl_ != nullptr) {
        donor.distance = Distance(*class_decl_);
        donor.position = class_decl_->preorder;
      } else {
        return;
      }
      set.methods.push_back(donor);
    };
    for (const Node& decl : source_.ast.children) {
      const ClassInfo* info = classes_.Find(decl.text);
      if (info == nullptr) continue;
      for (const MethodInfo& method : info->methods) add(&method);
    }
    if (klass_ != nullptr) {
      for (const MethodInfo* method : classes_.VisibleMethods(klass_->name)) {
        add(method);
      }
    }
    std::stable_sort(set.methods.begin(), set.methods.end(),
                     [](const MethodDonor& a, const MethodDonor& b) {
                       return std::tie(a.distance, a.position) <
                              std::tie(b.distance, b.position);
                     });
  }

  const ClassTable& classes_;
  const SourceFile& source_;
  TreeIndex index_;
  const Node& buggy_;
  DistanceMetric metric_;
  const Node* method_ = nullptr;
  const Node* class_decl_ = nullptr;
  const ClassInfo* klass_ = nullptr;
  std::map<std::string, const Node*> visible_;
  std::set<LangType> relevant_;
};

}  // namespace

DonorSet CollectDonors(const CheckedProgram& program, int file,
                       const Node& buggy, DistanceMetric metric) {
  return Collector(program, file, buggy, metric).Run();
}

}  // namespace templar
