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

#ifndef TEMPLAR_LANG_TYPE_H_
#define TEMPLAR_LANG_TYPE_H_

#include <compare>
#include <string>

namespace templar {

// Static type of a MiniJ expression or declaration. Arrays are a base type
// plus a dimension count, so `int[][]` is {kInt, "", 2}.
struct LangType {
  enum class Base { kUnknown, kBoolean, kInt, kFloat, kString, kVoid, kClass,
                    kNull };

  Base base = Base::kUnknown;
  std::string class_name;
  int dims = 0;

  static LangType Boolean() { return {Base::kBoolean, "", 0}; }
  static LangType Int() { return {Base::kInt, "", 0}; }
  static LangType Float() { return {Base::kFloat, "", 0}; }
  static LangType String() { return {Base::kString, "", 0}; }
  static LangType Void() { return {Base::kVoid, "", 0}; }
  static LangType Null() { return {Base::kNull, "", 0}; }
  static LangType Class(std::string name) {
    return {Base::kClass, std::move(name), 0};
  }
  static LangType ArrayOf(LangType element) {
    element.dims += 1;
    return element;
  }

  bool IsKnown() const { return base != Base::kUnknown; }
  bool IsArray() const { return dims > 0; }
  bool IsVoid() const { return base == Base::kVoid && dims == 0; }
  bool IsBoolean() const { return base == Base::kBoolean && dims == 0; }
  bool IsInt() const { return base == Base::kInt && dims == 0; }
  bool IsFloat() const { return base == Base::kFloat && dims == 0; }
  bool IsNumeric() const { return IsInt() || IsFloat(); }
  bool IsString() const { return base == Base::kString && dims == 0; }
  bool IsNull() const { return base == Base::kNull; }
  bool IsClass() const { return base == Base::kClass && dims == 0; }
  // boolean, int and float scalars.
  bool IsPrimitive() const {
    return dims == 0 && (base == Base::kBoolean || base == Base::kInt ||
                         base == Base::kFloat);
  }
  bool IsReference() const {
    return !IsPrimitive() && !IsVoid() && base != Base::kUnknown;
  }

  LangType Element() const {
    LangType result = *this;
    result.dims -= 1;
    return result;
  }

  // Source spelling, e.g. "int[]" or "Matrix".
  std::string ToString() const;

  // Inverse of ToString for scalar and array type names; class names are
  // accepted verbatim.
  static LangType FromName(const std::string& name);

  auto operator<=>(const LangType&) const = default;
};

}  // namespace templar

#endif  // TEMPLAR_LANG_TYPE_H_
