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

#ifndef TEMPLAR_PARSER_H_
#define TEMPLAR_PARSER_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "templar/ast.h"

namespace templar {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A parsed MiniJ file. Spans of `ast` index into `text`.
struct SourceFile {
  std::string path;
  std::string text;
  Node ast;

  // 1-based line containing byte `offset` of `text`.
  int LineOf(int offset) const;
};

// Parses a compilation unit and indexes it (ids and preorder). Throws
// SyntaxError.
Node ParseUnit(std::string_view text);
SourceFile ParseSourceFile(std::string path, std::string text);

// Fragment entry points, mainly for tests and pattern construction.
Node ParseStatement(std::string_view text);
Node ParseExpression(std::string_view text);

}  // namespace templar

#endif  // TEMPLAR_PARSER_H_
