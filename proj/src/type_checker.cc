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

#include <algorithm>
#include <set>

#include "templar/program.h"

namespace templar {

int Program::FileIndex(std::string_view path) const {
  for (size_t i = 0; i < files.size(); ++i) {
    if (files[i].path == path) return static_cast<int>(i);
  }
  return -1;
}

std::string MethodInfo::Key() const {
  std::string key = is_constructor ? "<init>" : name;
  key += '(';
  for (size_t i = 0; i < params.size(); ++i) {
    if (i > 0) key += ',';
    key += params[i].ToString();
  }
  key += ')';
  return key;
}

std::string TypeError::ToString() const {
  return file + ":" + std::to_string(line) + ":" + std::to_string(column) +
         ": " + message;
}

const ClassInfo* ClassTable::Find(std::string_view name) const {
  auto it = classes_.find(name);
  return it == classes_.end() ? nullptr : &it->second;
}

std::vector<std::string> ClassTable::ClassNames() const {
  std::vector<std::string> names;
  for (const auto& [name, info] : classes_) names.push_back(name);
  return names;
}

bool ClassTable::IsSubclassOf(const std::string& sub,
                              const std::string& super) const {
  const ClassInfo* info = Find(sub);
  // Bounded walk; hierarchy cycles are rejected during checking.
  for (size_t steps = 0; info != nullptr && steps <= classes_.size();
       ++steps) {
    if (info->name == super) return true;
    if (info->parent.empty()) return false;
    info = Find(info->parent);
  }
  return false;
}

bool ClassTable::IsAssignable(const LangType& from, const LangType& to) const {
  if (!from.IsKnown() || !to.IsKnown()) return false;
  if (from == to) return !from.IsVoid() && !from.IsNull();
  if (from.IsInt() && to.IsFloat()) return true;
  if (from.IsNull()) return to.IsReference() && !to.IsNull();
  if (from.IsClass() && to.IsClass()) {
    return IsSubclassOf(from.class_name, to.class_name);
  }
  return false;
}

bool ClassTable::AreRelated(const LangType& a, const LangType& b) const {
  if (a.IsNumeric() && b.IsNumeric()) return true;
  return IsAssignable(a, b) || IsAssignable(b, a);
}

bool ClassTable::IsValidType(const LangType& type) const {
  if (!type.IsKnown() || type.IsNull()) return false;
  if (type.base == LangType::Base::kVoid) return type.dims == 0;
  if (type.base == LangType::Base::kClass) {
    return Find(type.class_name) != nullptr;
  }
  return true;
}

const FieldInfo* ClassTable::FindField(const std::string& class_name,
                                       const std::string& field) const {
  const ClassInfo* info = Find(class_name);
  if (info == nullptr) return nullptr;
  for (const FieldInfo& f : info->fields) {
    if (f.name == field) return &f;
  }
  return nullptr;
}

std::vector<const MethodInfo*> ClassTable::VisibleMethods(
    const std::string& class_name, const std::string& name) const {
  std::vector<const MethodInfo*> result;
  const ClassInfo* info = Find(class_name);
  if (info == nullptr) return result;
  for (const auto& [key, method] : info->vtable) {
    if (name.empty() || method->name == name) result.push_back(method);
  }
  std::sort(result.begin(), result.end(),
            [](const MethodInfo* a, const MethodInfo* b) {
              return a->Key() < b->Key();
            });
  return result;
}

const MethodInfo* ClassTable::ResolveOverload(
    const std::vector<const MethodInfo*>& candidates,
    const std::vector<LangType>& args, bool* ambiguous) const {
  if (ambiguous != nullptr) *ambiguous = false;
  std::vector<const MethodInfo*> applicable;
  for (const MethodInfo* m : candidates) {
    if (m->params.size() != args.size()) continue;
    bool ok = true;
    for (size_t i = 0; i < args.size() && ok; ++i) {
      ok = IsAssignable(args[i], m->params[i]);
    }
    if (ok) applicable.push_back(m);
  }
  // Most specific: every parameter assignable to the others' parameters.
  std::vector<const MethodInfo*> most_specific;
  for (const MethodInfo* m : applicable) {
    bool specific = true;
    for (const MethodInfo* other : applicable) {
      for (size_t i = 0; i < args.size() && specific; ++i) {
        specific = IsAssignable(m->params[i], other->params[i]);
      }
    }
    if (specific) most_specific.push_back(m);
  }
  if (most_specific.size() == 1) return most_specific.front();
  if (ambiguous != nullptr && !applicable.empty()) *ambiguous = true;
  return nullptr;
}

namespace {

struct Local {
  std::string name;
  LangType type;
  int slot;
};

}  // namespace

class TypeChecker {
 public:
  explicit TypeChecker(CheckedProgram& checked)
      : checked_(checked),
        program_(checked.program_),
        table_(checked.classes_) {}

  std::vector<TypeError> Run() {
    AddBuiltins();
    CollectClasses();
    if (!errors_.empty()) return errors_;
    LinkHierarchy();
    if (!errors_.empty()) return errors_;
    for (const std::string& name : TopologicalOrder()) BuildMembers(name);
    if (!errors_.empty()) return errors_;
    for (size_t f = 0; f < program_.files.size(); ++f) {
      file_ = static_cast<int>(f);
      for (Node& decl : program_.files[f].ast.children) CheckClassBodies(decl);
    }
    return errors_;
  }

 private:
  void Error(const Node& at, const std::string& message) {
    const SourceFile& file = program_.files[file_];
    int offset = std::clamp(at.span.begin, 0,
                            static_cast<int>(file.text.size()));
    int line = file.LineOf(offset);
    size_t line_start = file.text.rfind('\n', offset == 0 ? 0 : offset - 1);
    int column = line_start == std::string::npos || offset == 0
                     ? offset + 1
                     : offset - static_cast<int>(line_start);
    errors_.push_back({file.path, line, column, message});
  }

  void AddBuiltins() {
    ClassInfo object;
    object.name = "Object";
    object.builtin = true;
    MethodInfo clone;
    clone.owner = "Object";
    clone.name = "clone";
    clone.ret = LangType::Class("Object");
    object.methods.push_back(clone);
    table_.classes_.emplace("Object", std::move(object));

    ClassInfo exception;
    exception.name = "Exception";
    exception.parent = "Object";
    exception.builtin = true;
    table_.classes_.emplace("Exception", std::move(exception));
  }

  void CollectClasses() {
    for (size_t f = 0; f < program_.files.size(); ++f) {
      file_ = static_cast<int>(f);
      for (const Node& decl : program_.files[f].ast.children) {
        if (table_.Find(decl.text) != nullptr) {
          Error(decl, "duplicate class '" + decl.text + "'");
          continue;
        }
        ClassInfo info;
        info.name = decl.text;
        info.parent = decl.aux.empty() ? "Object" : decl.aux;
        info.decl = &decl;
        info.file = file_;
        table_.classes_.emplace(decl.text, std::move(info));
      }
    }
  }

  void LinkHierarchy() {
    for (auto& [name, info] : table_.classes_) {
      if (info.builtin) continue;
      file_ = info.file;
      if (table_.Find(info.parent) == nullptr) {
        Error(*info.decl, "unknown superclass '" + info.parent + "'");
        continue;
      }
      std::set<std::string> seen{name};
      for (const ClassInfo* p = table_.Find(info.parent); p != nullptr;
           p = p->parent.empty() ? nullptr : table_.Find(p->parent)) {
        if (!seen.insert(p->name).second) {
          Error(*info.decl, "cyclic inheritance involving '" + name + "'");
          break;
        }
      }
    }
  }

  std::vector<std::string> TopologicalOrder() const {
    std::vector<std::string> order;
    std::set<std::string> done;
    std::function<void(const std::string&)> visit =
        [&](const std::string& name) {
          if (done.count(name) != 0) return;
          const ClassInfo* info = table_.Find(name);
          if (!info->parent.empty()) visit(info->parent);
          done.insert(name);
          order.push_back(name);
        };
    for (const auto& [name, info] : table_.classes_) visit(name);
    return order;
  }

  LangType ResolveTypeNode(const Node& type_node, bool allow_void) {
    LangType type = LangType::FromName(type_node.text);
    if (!table_.IsValidType(type) || (type.IsVoid() && !allow_void)) {
      Error(type_node, "unknown type '" + type_node.text + "'");
      return LangType{};
    }
    return type;
  }

  void BuildMembers(const std::string& name) {
    ClassInfo& info = table_.classes_.find(name)->second;
    const ClassInfo* parent =
        info.parent.empty() ? nullptr : table_.Find(info.parent);
    if (parent != nullptr) {
      info.fields = parent->fields;
      info.vtable = parent->vtable;
    }
    if (info.decl != nullptr) {
      file_ = info.file;
      for (const Node& member : info.decl->children) {
        switch (member.kind) {
          case NodeKind::kFieldDecl: {
            if (table_.FindField(name, member.text) != nullptr ||
                std::any_of(info.fields.begin(), info.fields.end(),
                            [&](const FieldInfo& f) {
                              return f.name == member.text;
                            })) {
              Error(member, "duplicate field '" + member.text + "'");
              break;
            }
            FieldInfo field;
            field.name = member.text;
            field.type = ResolveTypeNode(member.children[0], false);
            field.owner = name;
            field.decl = &member;
            field.index = static_cast<int>(info.fields.size());
            info.fields.push_back(field);
            break;
          }
          case NodeKind::kMethodDecl:
          case NodeKind::kConstructorDecl: {
            MethodInfo method;
            method.owner = name;
            method.name = member.text;
            method.is_constructor = member.kind == NodeKind::kConstructorDecl;
            method.decl = &member;
            method.file = info.file;
            size_t first = method.is_constructor ? 0 : 1;
            if (!method.is_constructor) {
              method.ret = ResolveTypeNode(member.children[0], true);
            } else {
              method.ret = LangType::Void();
            }
            for (size_t i = first; i + 1 < member.children.size(); ++i) {
              method.params.push_back(
                  ResolveTypeNode(member.children[i].children[0], false));
            }
            auto& list = method.is_constructor ? info.constructors
                                               : info.methods;
            std::string key = method.Key();
            if (std::any_of(list.begin(), list.end(),
                            [&](const MethodInfo& m) {
                              return m.Key() == key;
                            })) {
              Error(member, "duplicate method '" + key + "'");
              break;
            }
            if (!method.is_constructor) {
              auto inherited = info.vtable.find(key);
              if (inherited != info.vtable.end() &&
                  !table_.IsAssignable(method.ret, inherited->second->ret) &&
                  method.ret != inherited->second->ret) {
                Error(member, "incompatible return type overriding '" + key +
                                  "'");
              }
            }
            list.push_back(std::move(method));
            break;
          }
          default:
            break;
        }
      }
    }
    if (info.constructors.empty()) {
      MethodInfo ctor;
      ctor.owner = name;
      ctor.name = name;
      ctor.is_constructor = true;
      ctor.ret = LangType::Void();
      ctor.file = info.file;
      info.constructors.push_back(ctor);
    }
    for (const MethodInfo& method : info.methods) {
      info.vtable[method.Key()] = &method;
    }
  }

  // Method bodies.

  void CheckClassBodies(Node& decl) {
    current_class_ = table_.Find(decl.text);
    for (Node& member : decl.children) {
      scopes_.clear();
      loop_depth_ = 0;
      next_slot_ = 0;
      switch (member.kind) {
        case NodeKind::kFieldDecl: {
          return_type_ = LangType{};
          if (member.children.size() > 1) {
            const FieldInfo* field = table_.FindField(decl.text, member.text);
            LangType init = CheckExpr(member.children[1]);
            if (field != nullptr) ExpectAssignable(member.children[1], init,
                                                   field->type);
          }
          break;
        }
        case NodeKind::kMethodDecl:
        case NodeKind::kConstructorDecl: {
          bool ctor = member.kind == NodeKind::kConstructorDecl;
          return_type_ = ctor ? LangType::Void()
                              : LangType::FromName(member.children[0].text);
          scopes_.emplace_back();
          for (size_t i = ctor ? 0 : 1; i + 1 < member.children.size(); ++i) {
            Node& param = member.children[i];
            Declare(param, LangType::FromName(param.children[0].text));
          }
          CheckBlock(member.children.back(), /*new_scope=*/false);
          member.slot = next_slot_;
          break;
        }
        default:
          break;
      }
    }
  }

  const Local* LookupLocal(const std::string& name) const {
    for (auto scope = scopes_.rbegin(); scope != scopes_.rend(); ++scope) {
      for (const Local& local : *scope) {
        if (local.name == name) return &local;
      }
    }
    return nullptr;
  }

  void Declare(Node& decl, const LangType& type) {
    if (LookupLocal(decl.text) != nullptr) {
      Error(decl, "variable '" + decl.text + "' is already defined");
    }
    decl.slot = next_slot_++;
    decl.type = type;
    scopes_.back().push_back({decl.text, type, decl.slot});
  }

  void ExpectAssignable(const Node& at, const LangType& from,
                        const LangType& to) {
    if (!from.IsKnown() || !to.IsKnown()) return;
    if (!table_.IsAssignable(from, to)) {
      Error(at, "type mismatch: cannot convert " + from.ToString() + " to " +
                    to.ToString());
    }
  }

  void ExpectBoolean(const Node& at, const LangType& type) {
    if (type.IsKnown() && !type.IsBoolean()) {
      Error(at, "type mismatch: expected boolean, found " + type.ToString());
    }
  }

  void CheckBlock(Node& block, bool new_scope) {
    if (new_scope) scopes_.emplace_back();
    for (Node& statement : block.children) CheckStatement(statement);
    if (new_scope) scopes_.pop_back();
  }

  void CheckScoped(Node& statement) {
    scopes_.emplace_back();
    CheckStatement(statement);
    scopes_.pop_back();
  }

  void CheckVarDecl(Node& decl) {
    LangType type = ResolveTypeNode(decl.children[0], false);
    if (decl.children.size() > 1) {
      LangType init = CheckExpr(decl.children[1]);
      ExpectAssignable(decl.children[1], init, type);
    }
    Declare(decl, type);
  }

  void CheckStatement(Node& s) {
    switch (s.kind) {
      case NodeKind::kBlock:
        CheckBlock(s, true);
        break;
      case NodeKind::kVarDecl:
        CheckVarDecl(s);
        break;
      case NodeKind::kExprStmt:
        CheckExpr(s.children[0]);
        break;
      case NodeKind::kIf:
        ExpectBoolean(s.children[0], CheckExpr(s.children[0]));
        CheckScoped(s.children[1]);
        if (s.children.size() > 2) CheckScoped(s.children[2]);
        break;
      case NodeKind::kWhile:
        ExpectBoolean(s.children[0], CheckExpr(s.children[0]));
        ++loop_depth_;
        CheckScoped(s.children[1]);
        --loop_depth_;
        break;
      case NodeKind::kFor: {
        scopes_.emplace_back();
        Node& init = s.children[0];
        if (init.kind == NodeKind::kVarDecl) {
          CheckVarDecl(init);
        } else if (init.kind == NodeKind::kExprStmt) {
          CheckExpr(init.children[0]);
        }
        if (s.children[1].kind != NodeKind::kEmpty) {
          ExpectBoolean(s.children[1], CheckExpr(s.children[1]));
        }
        if (s.children[2].kind == NodeKind::kExprStmt) {
          CheckExpr(s.children[2].children[0]);
        }
        ++loop_depth_;
        CheckScoped(s.children[3]);
        --loop_depth_;
        scopes_.pop_back();
        break;
      }
      case NodeKind::kReturn:
        if (!return_type_.IsKnown()) {
          Error(s, "return outside of a method");
        } else if (s.children.empty()) {
          if (!return_type_.IsVoid()) Error(s, "missing return value");
        } else {
          LangType value = CheckExpr(s.children[0]);
          if (return_type_.IsVoid()) {
            Error(s, "cannot return a value from a void method");
          } else {
            ExpectAssignable(s.children[0], value, return_type_);
          }
        }
        break;
      case NodeKind::kBreak:
      case NodeKind::kContinue:
        if (loop_depth_ == 0) {
          Error(s, std::string(KindName(s.kind)) + " outside of a loop");
        }
        break;
      case NodeKind::kThrow: {
        LangType value = CheckExpr(s.children[0]);
        if (value.IsKnown() &&
            !(value.IsClass() &&
              table_.IsSubclassOf(value.class_name, "Exception"))) {
          Error(s, "can only throw Exception instances");
        }
        break;
      }
      case NodeKind::kTry: {
        CheckBlock(s.children[0], true);
        Node& handler = s.children[1];
        LangType caught = ResolveTypeNode(handler.children[0], false);
        if (caught.IsKnown() &&
            !(caught.IsClass() &&
              table_.IsSubclassOf(caught.class_name, "Exception"))) {
          Error(handler, "catch type must extend Exception");
        }
        scopes_.emplace_back();
        Declare(handler, caught);
        CheckBlock(handler.children[1], true);
        scopes_.pop_back();
        break;
      }
      case NodeKind::kAssert:
        ExpectBoolean(s.children[0], CheckExpr(s.children[0]));
        break;
      default:
        Error(s, "unexpected " + std::string(KindName(s.kind)));
    }
  }

  std::vector<LangType> CheckArgs(Node& call, size_t first) {
    std::vector<LangType> types;
    for (size_t i = first; i < call.children.size(); ++i) {
      types.push_back(CheckExpr(call.children[i]));
    }
    return types;
  }

  static std::string Describe(const std::string& name,
                              const std::vector<LangType>& args) {
    std::string text = name + "(";
    for (size_t i = 0; i < args.size(); ++i) {
      if (i > 0) text += ",";
      text += args[i].ToString();
    }
    return text + ")";
  }

  const MethodInfo* Resolve(const Node& at,
                            const std::vector<const MethodInfo*>& candidates,
                            const std::string& name,
                            const std::vector<LangType>& args) {
    for (const LangType& arg : args) {
      if (!arg.IsKnown()) return nullptr;
    }
    bool ambiguous = false;
    const MethodInfo* method = table_.ResolveOverload(candidates, args,
                                                      &ambiguous);
    if (method == nullptr) {
      Error(at, std::string(ambiguous ? "ambiguous" : "unresolved") +
                    " overload " + Describe(name, args));
    }
    return method;
  }

  LangType CheckCall(Node& e) {
    Node& receiver = e.children[0];
    std::string owner;
    if (receiver.kind == NodeKind::kEmpty) {
      if (current_class_ == nullptr) return {};
      owner = current_class_->name;
    } else if (receiver.kind == NodeKind::kSuper) {
      if (current_class_ == nullptr || current_class_->parent.empty()) {
        Error(receiver, "no superclass");
        return {};
      }
      receiver.type = LangType::Class(current_class_->parent);
      owner = current_class_->parent;
    } else {
      LangType receiver_type = CheckExpr(receiver);
      if (!receiver_type.IsKnown()) {
        CheckArgs(e, 1);
        return {};
      }
      if (receiver_type.IsString() && e.text == "length" &&
          e.children.size() == 1) {
        e.aux = "String.length()";
        return LangType::Int();
      }
      if (!receiver_type.IsClass()) {
        Error(e, "cannot invoke '" + e.text + "' on " +
                     receiver_type.ToString());
        CheckArgs(e, 1);
        return {};
      }
      owner = receiver_type.class_name;
    }
    std::vector<LangType> args = CheckArgs(e, 1);
    std::vector<const MethodInfo*> candidates =
        table_.VisibleMethods(owner, e.text);
    if (candidates.empty()) {
      Error(e, "undeclared method '" + e.text + "' in " + owner);
      return {};
    }
    const MethodInfo* method = Resolve(e, candidates, e.text, args);
    if (method == nullptr) return {};
    e.aux = method->Key();
    return method->ret;
  }

  LangType CheckExpr(Node& e) {
    e.type = CheckExprInner(e);
    return e.type;
  }

  LangType NumericResult(const LangType& a, const LangType& b) {
    return a.IsInt() && b.IsInt() ? LangType::Int() : LangType::Float();
  }

  LangType CheckInfix(Node& e) {
    LangType lhs = CheckExpr(e.children[0]);
    LangType rhs = CheckExpr(e.children[1]);
    if (!lhs.IsKnown() || !rhs.IsKnown()) return {};
    const std::string& op = e.text;
    auto mismatch = [&]() {
      Error(e, "operator " + op + " cannot be applied to " + lhs.ToString() +
                   ", " + rhs.ToString());
      return LangType{};
    };
    if (op == "+" && (lhs.IsString() || rhs.IsString())) {
      if (lhs.IsVoid() || rhs.IsVoid()) return mismatch();
      return LangType::String();
    }
    if (op == "+" || op == "-" || op == "*" || op == "/" || op == "%") {
      if (!lhs.IsNumeric() || !rhs.IsNumeric()) return mismatch();
      return NumericResult(lhs, rhs);
    }
    if (op == "<" || op == "<=" || op == ">" || op == ">=") {
      if (!lhs.IsNumeric() || !rhs.IsNumeric()) return mismatch();
      return LangType::Boolean();
    }
    if (op == "==" || op == "!=") {
      bool ok = (lhs.IsNumeric() && rhs.IsNumeric()) ||
                (lhs.IsBoolean() && rhs.IsBoolean()) ||
                (lhs.IsReference() && rhs.IsReference() &&
                 (table_.IsAssignable(lhs, rhs) ||
                  table_.IsAssignable(rhs, lhs) ||
                  (lhs.IsNull() && rhs.IsNull())));
      if (!ok) return mismatch();
      return LangType::Boolean();
    }
    if (op == "&&" || op == "||") {
      if (!lhs.IsBoolean() || !rhs.IsBoolean()) return mismatch();
      return LangType::Boolean();
    }
    return mismatch();
  }

  bool IsLvalue(const Node& e) const {
    return e.kind == NodeKind::kName || e.kind == NodeKind::kFieldAccess ||
           e.kind == NodeKind::kArrayAccess;
  }

  LangType CheckExprInner(Node& e) {
    switch (e.kind) {
      case NodeKind::kIntLiteral:
        return LangType::Int();
      case NodeKind::kFloatLiteral:
        return LangType::Float();
      case NodeKind::kStringLiteral:
        return LangType::String();
      case NodeKind::kBooleanLiteral:
        return LangType::Boolean();
      case NodeKind::kNullLiteral:
        return LangType::Null();
      case NodeKind::kThis:
        if (current_class_ == nullptr) return {};
        return LangType::Class(current_class_->name);
      case NodeKind::kSuper:
        Error(e, "'super' is only allowed as a method receiver");
        return {};
      case NodeKind::kName: {
        if (const Local* local = LookupLocal(e.text)) {
          e.binding = NameBinding::kLocal;
          e.slot = local->slot;
          return local->type;
        }
        if (current_class_ != nullptr) {
          if (const FieldInfo* field =
                  table_.FindField(current_class_->name, e.text)) {
            e.binding = NameBinding::kField;
            e.slot = field->index;
            return field->type;
          }
        }
        Error(e, "undeclared identifier '" + e.text + "'");
        return {};
      }
      case NodeKind::kFieldAccess: {
        LangType receiver = CheckExpr(e.children[0]);
        if (!receiver.IsKnown()) return {};
        if (receiver.IsArray() && e.text == "length") return LangType::Int();
        if (receiver.IsClass()) {
          if (const FieldInfo* field =
                  table_.FindField(receiver.class_name, e.text)) {
            e.slot = field->index;
            return field->type;
          }
        }
        Error(e, "no field '" + e.text + "' in " + receiver.ToString());
        return {};
      }
      case NodeKind::kArrayAccess: {
        LangType array = CheckExpr(e.children[0]);
        LangType index = CheckExpr(e.children[1]);
        if (index.IsKnown() && !index.IsInt()) {
          Error(e.children[1], "array index must be int");
        }
        if (!array.IsKnown()) return {};
        if (!array.IsArray()) {
          Error(e, "indexing a non-array " + array.ToString());
          return {};
        }
        return array.Element();
      }
      case NodeKind::kCall:
        return CheckCall(e);
      case NodeKind::kNew: {
        std::vector<LangType> args = CheckArgs(e, 0);
        if (e.text == "String") {
          if (!args.empty()) Error(e, "String has only the empty constructor");
          return LangType::String();
        }
        const ClassInfo* info = table_.Find(e.text);
        if (info == nullptr) {
          Error(e, "unknown class '" + e.text + "'");
          return {};
        }
        std::vector<const MethodInfo*> ctors;
        for (const MethodInfo& ctor : info->constructors) {
          ctors.push_back(&ctor);
        }
        const MethodInfo* ctor = Resolve(e, ctors, e.text, args);
        if (ctor == nullptr) return {};
        e.aux = ctor->Key();
        return LangType::Class(e.text);
      }
      case NodeKind::kNewArray: {
        LangType element = ResolveTypeNode(e.children[0], false);
        LangType size = CheckExpr(e.children[1]);
        if (size.IsKnown() && !size.IsInt()) {
          Error(e.children[1], "array size must be int");
        }
        if (!element.IsKnown()) return {};
        return LangType::ArrayOf(element);
      }
      case NodeKind::kArrayLiteral: {
        LangType element = ResolveTypeNode(e.children[0], false);
        for (size_t i = 1; i < e.children.size(); ++i) {
          LangType value = CheckExpr(e.children[i]);
          if (element.IsKnown()) ExpectAssignable(e.children[i], value, element);
        }
        if (!element.IsKnown()) return {};
        return LangType::ArrayOf(element);
      }
      case NodeKind::kAssign: {
        LangType target = CheckExpr(e.children[0]);
        LangType value = CheckExpr(e.children[1]);
        if (!target.IsKnown() || !value.IsKnown()) return target;
        if (e.text == "=") {
          ExpectAssignable(e.children[1], value, target);
        } else if (e.text == "+=" && target.IsString()) {
          if (value.IsVoid()) Error(e, "cannot append void");
        } else if (!target.IsNumeric() || !value.IsNumeric() ||
                   !table_.IsAssignable(value, target)) {
          Error(e, "operator " + e.text + " cannot be applied to " +
                       target.ToString() + ", " + value.ToString());
        }
        return target;
      }
      case NodeKind::kConditional: {
        ExpectBoolean(e.children[0], CheckExpr(e.children[0]));
        LangType a = CheckExpr(e.children[1]);
        LangType b = CheckExpr(e.children[2]);
        if (!a.IsKnown() || !b.IsKnown()) return {};
        if (a.IsNumeric() && b.IsNumeric()) return NumericResult(a, b);
        if (table_.IsAssignable(a, b)) return b;
        if (table_.IsAssignable(b, a)) return a;
        if (a == b && !a.IsVoid()) return a;
        Error(e, "incompatible conditional operands " + a.ToString() + ", " +
                     b.ToString());
        return {};
      }
      case NodeKind::kInfix:
        return CheckInfix(e);
      case NodeKind::kPrefix: {
        LangType operand = CheckExpr(e.children[0]);
        if (!operand.IsKnown()) return {};
        if (e.text == "!") {
          ExpectBoolean(e.children[0], operand);
          return LangType::Boolean();
        }
        if (!operand.IsNumeric()) {
          Error(e, "operator - cannot be applied to " + operand.ToString());
          return {};
        }
        return operand;
      }
      case NodeKind::kCast: {
        LangType target = ResolveTypeNode(e.children[0], false);
        LangType operand = CheckExpr(e.children[1]);
        if (!target.IsKnown() || !operand.IsKnown()) return target;
        bool ok = (target.IsNumeric() && operand.IsNumeric()) ||
                  table_.IsAssignable(operand, target) ||
                  table_.IsAssignable(target, operand);
        if (!ok) {
          Error(e, "cannot cast " + operand.ToString() + " to " +
                       target.ToString());
        }
        return target;
      }
      case NodeKind::kInstanceOf: {
        LangType operand = CheckExpr(e.children[0]);
        LangType target = ResolveTypeNode(e.children[1], false);
        if (!operand.IsKnown() || !target.IsKnown()) return LangType::Boolean();
        if (!target.IsClass() || !(operand.IsClass() || operand.IsNull()) ||
            !table_.AreRelated(operand, target)) {
          Error(e, "incompatible instanceof operands " + operand.ToString() +
                       ", " + target.ToString());
        }
        return LangType::Boolean();
      }
      default:
        Error(e, "unexpected " + std::string(KindName(e.kind)));
        return {};
    }
  }

  CheckedProgram& checked_;
  Program& program_;
  ClassTable& table_;
  std::vector<TypeError> errors_;
  int file_ = 0;
  const ClassInfo* current_class_ = nullptr;
  LangType return_type_;
  std::vector<std::vector<Local>> scopes_;
  int loop_depth_ = 0;
  int next_slot_ = 0;
};

CheckResult TypeCheck(Program program) {
  auto checked = std::make_shared<CheckedProgram>(std::move(program));
  CheckResult result;
  result.errors = TypeChecker(*checked).Run();
  if (result.errors.empty()) result.program = std::move(checked);
  return result;
}

CheckResult TypeCheckSource(const std::string& text, const std::string& path) {
  Program program;
  program.files.push_back(ParseSourceFile(path, text));
  return TypeCheck(std::move(program));
}

}  // namespace templar
