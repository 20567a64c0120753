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

#ifndef TEMPLAR_TOML_H_
#define TEMPLAR_TOML_H_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace templar {

// The TOML subset used by bug.toml files: top-level `key = value` pairs
// whose values are strings (basic or literal), integers, booleans or
// (nested, possibly multi-line) arrays. Comments start with '#'.
struct TomlValue {
  enum class Kind { kString, kInteger, kBoolean, kArray };

  Kind kind = Kind::kString;
  std::string string;
  int64_t integer = 0;
  bool boolean = false;
  std::vector<TomlValue> array;
};

using TomlTable = std::map<std::string, TomlValue, std::less<>>;

class TomlError : public std::runtime_error {
 public:
  TomlError(const std::string& message, int line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Throws TomlError on malformed input, duplicate keys or table headers.
TomlTable ParseToml(std::string_view text);

}  // namespace templar

#endif  // TEMPLAR_TOML_H_
