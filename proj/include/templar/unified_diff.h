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

#ifndef TEMPLAR_UNIFIED_DIFF_H_
#define TEMPLAR_UNIFIED_DIFF_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace templar {

struct DiffHunk {
  int old_start = 0;
  int old_count = 0;
  int new_start = 0;
  int new_count = 0;
  // Body lines including their ' ', '-' or '+' marker.
  std::vector<std::string> lines;
};

struct FileDiff {
  std::string old_path;  // without the a/ prefix
  std::string new_path;  // without the b/ prefix
  std::vector<DiffHunk> hunks;
};

class PatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parses a (possibly multi-file) unified diff. Throws PatchError.
std::vector<FileDiff> ParseUnifiedDiff(std::string_view text);

// Applies one file's hunks; context and removed lines must match exactly.
std::string ApplyFileDiff(const std::string& original, const FileDiff& diff);

// Line diff of two texts with `context` lines around each change, labelled
// a/<path> and b/<path>. Empty when the texts are equal.
std::string MakeUnifiedDiff(const std::string& path, const std::string& before,
                            const std::string& after, int context = 3);

}  // namespace templar

#endif  // TEMPLAR_UNIFIED_DIFF_H_
