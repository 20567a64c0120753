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

#include "templar/toml.h"

#include <cctype>
#include <charconv>

namespace templar {
namespace {

class TomlParser {
 public:
  explicit TomlParser(std::string_view text) : text_(text) {}

  TomlTable Parse() {
    TomlTable table;
    while (true) {
      SkipBlank(true);
      if (AtEnd()) break;
      if (Peek() == '[') Fail("tables are not supported");
      std::string key = Key();
      SkipBlank(false);
      Expect('=');
      SkipBlank(false);
      TomlValue value = Value();
      SkipBlank(false);
      if (!AtEnd() && Peek() != '\n') Fail("expected end of line after value");
      if (table.count(key) != 0) Fail("duplicate key '" + key + "'");
      table.emplace(std::move(key), std::move(value));
    }
    return table;
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }

  [[noreturn]] void Fail(const std::string& message) const {
    throw TomlError(message, line_);
  }

  void Advance() {
    if (text_[pos_] == '\n') ++line_;
    ++pos_;
  }

  void Expect(char c) {
    if (AtEnd() || Peek() != c) Fail(std::string("expected '") + c + "'");
    Advance();
  }

  // Skips spaces and comments; newlines too when `newlines` is set.
  void SkipBlank(bool newlines) {
    while (!AtEnd()) {
      char c = Peek();
      if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
        Advance();
      } else if (c == '#') {
        while (!AtEnd() && Peek() != '\n') Advance();
      } else {
        break;
      }
    }
  }

  std::string Key() {
    if (!AtEnd() && (Peek() == '"' || Peek() == '\'')) return String();
    size_t begin = pos_;
    while (!AtEnd() && (std::isalnum(static_cast<unsigned char>(Peek())) ||
                        Peek() == '_' || Peek() == '-')) {
      Advance();
    }
    if (begin == pos_) Fail("expected a key");
    return std::string(text_.substr(begin, pos_ - begin));
  }

  TomlValue Value() {
    if (AtEnd()) Fail("expected a value");
    TomlValue value;
    char c = Peek();
    if (c == '"' || c == '\'') {
      value.string = String();
    } else if (c == '[') {
      value.kind = TomlValue::Kind::kArray;
      Advance();
      while (true) {
        SkipBlank(true);
        if (AtEnd()) Fail("unterminated array");
        if (Peek() == ']') break;
        value.array.push_back(Value());
        SkipBlank(true);
        if (!AtEnd() && Peek() == ',') {
          Advance();
          continue;
        }
        SkipBlank(true);
        if (AtEnd() || Peek() != ']') Fail("expected ',' or ']' in array");
      }
      Advance();
    } else if (text_.substr(pos_, 4) == "true") {
      value.kind = TomlValue::Kind::kBoolean;
      value.boolean = true;
      pos_ += 4;
    } else if (text_.substr(pos_, 5) == "false") {
      value.kind = TomlValue::Kind::kBoolean;
      pos_ += 5;
    } else if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
      value.kind = TomlValue::Kind::kInteger;
      value.integer = Integer();
    } else {
      Fail("unsupported value");
    }
    return value;
  }

  int64_t Integer() {
    std::string digits;
    if (Peek() == '+' || Peek() == '-') {
      if (Peek() == '-') digits += '-';
      Advance();
    }
    while (!AtEnd() && (std::isdigit(static_cast<unsigned char>(Peek())) || Peek() == '_')) {
      if (Peek() != '_') digits += Peek();
      Advance();
    }
    int64_t value = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || end != digits.data() + digits.size()) Fail("bad integer");
    return value;
  }

  std::string String() {
    char quote = Peek();
    Advance();
    std::string out;
    while (true) {
      if (AtEnd() || Peek() == '\n') Fail("unterminated string");
      char c = Peek();
      Advance();
      if (c == quote) break;
      if (c == '\\' && quote == '"') {
        if (AtEnd()) Fail("unterminated escape");
        char e = Peek();
        Advance();
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          case 'r': out += '\r'; break;
          case '"': out += '"'; break;
          case '\\': out += '\\'; break;
          default: Fail(std::string("unsupported escape \\") + e);
        }
        continue;
      }
      out += c;
    }
    return out;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace

TomlTable ParseToml(std::string_view text) { return TomlParser(text).Parse(); }

}  // namespace templar
