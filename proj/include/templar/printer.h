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

#ifndef TEMPLAR_PRINTER_H_
#define TEMPLAR_PRINTER_H_

#include <string>

#include "templar/ast.h"

namespace templar {

// Deterministic MiniJ rendering of any node. Parentheses are emitted only
// where operator precedence requires them, so printing and re-parsing is a
// fixpoint on structure.
std::string PrettyPrint(const Node& node);

// Prints `root` and rewrites every span to point into the returned text.
std::string PrintAndRespan(Node& root);

// Source form of a string literal value, including quotes.
std::string QuoteString(const std::string& value);

}  // namespace templar

#endif  // TEMPLAR_PRINTER_H_
