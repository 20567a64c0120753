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

#ifndef TEMPLAR_PROGRAM_H_
#define TEMPLAR_PROGRAM_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "templar/ast.h"
#include "templar/lang_type.h"
#include "templar/parser.h"

namespace templar {

// All source files of one program: the code under repair plus its test
// suite. Class names are global across files.
struct Program {
  std::vector<SourceFile> files;

  int FileIndex(std::string_view path) const;
};

struct FieldInfo {
  std::string name;
  LangType type;
  std::string owner;
  const Node* decl = nullptr;
  int index = 0;  // slot in the object layout, inherited fields first
};

struct MethodInfo {
  std::string owner;
  std::string name;
  std::vector<LangType> params;
  LangType ret;
  bool is_constructor = false;
  // Null for intrinsic methods (Object.clone).
  const Node* decl = nullptr;
  int file = -1;

  // Overload key: "name(int,String)"; constructors use "<init>(...)".
  std::string Key() const;
};

struct ClassInfo {
  std::string name;
  std::string parent;  // empty only for Object
  bool builtin = false;
  const Node* decl = nullptr;
  int file = -1;
  std::vector<FieldInfo> fields;
  std::vector<MethodInfo> methods;       // declared here
  std::vector<MethodInfo> constructors;  // declared or implicit default
  // Overload key -> most-derived implementation visible in this class.
  std::unordered_map<std::string, const MethodInfo*> vtable;
};

class ClassTable {
 public:
  const ClassInfo* Find(std::string_view name) const;
  std::vector<std::string> ClassNames() const;

  bool IsSubclassOf(const std::string& sub, const std::string& super) const;
  // Assignment compatibility: identity, int to float widening, subclass to
  // superclass, null to any reference type.
  bool IsAssignable(const LangType& from, const LangType& to) const;
  // Either direction of IsAssignable, or both numeric.
  bool AreRelated(const LangType& a, const LangType& b) const;
  bool IsValidType(const LangType& type) const;

  const FieldInfo* FindField(const std::string& class_name,
                             const std::string& field) const;
  // Methods callable on `class_name` (declared or inherited, overridden
  // ones replaced), optionally filtered by name; sorted by key.
  std::vector<const MethodInfo*> VisibleMethods(
      const std::string& class_name, const std::string& name = {}) const;

  // Most specific applicable overload for the argument types. Sets
  // `ambiguous` when several candidates tie.
  const MethodInfo* ResolveOverload(const std::vector<const MethodInfo*>& candidates,
                                    const std::vector<LangType>& args,
                                    bool* ambiguous = nullptr) const;

 private:
  friend class TypeChecker;
  std::map<std::string, ClassInfo, std::less<>> classes_;
};

struct TypeError {
  std::string file;
  int line = 0;
  int column = 0;
  std::string message;

  std::string ToString() const;
};

// A type-annotated program together with its class table. The table points
// into the program's trees, so instances are neither copied nor moved.
class CheckedProgram {
 public:
  explicit CheckedProgram(Program program) : program_(std::move(program)) {}
  CheckedProgram(const CheckedProgram&) = delete;
  CheckedProgram& operator=(const CheckedProgram&) = delete;

  const Program& program() const { return program_; }
  const ClassTable& classes() const { return classes_; }
  const SourceFile& file(int index) const { return program_.files[index]; }

 private:
  friend class TypeChecker;
  Program program_;
  ClassTable classes_;
};

struct CheckResult {
  std::shared_ptr<const CheckedProgram> program;  // null when errors exist
  std::vector<TypeError> errors;

  bool ok() const { return errors.empty(); }
};

// Resolves names, overloads and layouts and annotates every expression with
// its static type.
CheckResult TypeCheck(Program program);

// Parses and checks a single-file program; throws SyntaxError.
CheckResult TypeCheckSource(const std::string& text,
                            const std::string& path = "main.mj");

}  // namespace templar

#endif  // TEMPLAR_PROGRAM_H_
