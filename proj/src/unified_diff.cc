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

#include "templar/unified_diff.h"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace templar {
namespace {

// Splits into lines without their terminators. A trailing newline does not
// produce an empty last line.
std::vector<std::string> SplitLines(std::string_view text) {
  std::vector<std::string> lines;
  size_t begin = 0;
  while (begin < text.size()) {
    size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(begin, end - begin));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    begin = end + 1;
  }
  return lines;
}

std::string StripPrefix(std::string path) {
  // Drop a trailing timestamp separated by a tab.
  if (size_t tab = path.find('\t'); tab != std::string::npos) path.resize(tab);
  while (!path.empty() && path.back() == ' ') path.pop_back();
  if (path.rfind("a/", 0) == 0 || path.rfind("b/", 0) == 0) path = path.substr(2);
  return path;
}

int ParseNumber(std::string_view s, size_t& pos) {
  int value = 0;
  auto [end, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
  if (ec != std::errc()) throw PatchError("malformed hunk header: " + std::string(s));
  pos = end - s.data();
  return value;
}

// "-l,s" or "-l"
void ParseRange(std::string_view s, size_t& pos, int& start, int& count) {
  start = ParseNumber(s, pos);
  count = 1;
  if (pos < s.size() && s[pos] == ',') {
    ++pos;
    count = ParseNumber(s, pos);
  }
}

DiffHunk ParseHunkHeader(std::string_view line) {
  DiffHunk hunk;
  size_t pos = 3;  // past "@@ "
  if (line.size() < 4 || line[pos] != '-') {
    throw PatchError("malformed hunk header: " + std::string(line));
  }
  ++pos;
  ParseRange(line, pos, hunk.old_start, hunk.old_count);
  if (line.substr(pos, 2) != " +") {
    throw PatchError("malformed hunk header: " + std::string(line));
  }
  pos += 2;
  ParseRange(line, pos, hunk.new_start, hunk.new_count);
  if (line.substr(pos, 3) != " @@") {
    throw PatchError("malformed hunk header: " + std::string(line));
  }
  return hunk;
}

}  // namespace

std::vector<FileDiff> ParseUnifiedDiff(std::string_view text) {
  std::vector<std::string> lines = SplitLines(text);
  std::vector<FileDiff> files;
  size_t i = 0;
  while (i < lines.size()) {
    if (lines[i].rfind("--- ", 0) != 0) {
      ++i;  // preamble such as "diff -u ..." lines
      continue;
    }
    if (i + 1 >= lines.size() || lines[i + 1].rfind("+++ ", 0) != 0) {
      throw PatchError("expected '+++' after '---'");
    }
    FileDiff file;
    file.old_path = StripPrefix(lines[i].substr(4));
    file.new_path = StripPrefix(lines[i + 1].substr(4));
    i += 2;
    while (i < lines.size() && lines[i].rfind("@@ ", 0) == 0) {
      DiffHunk hunk = ParseHunkHeader(lines[i]);
      ++i;
      int old_seen = 0;
      int new_seen = 0;
      while (old_seen < hunk.old_count || new_seen < hunk.new_count) {
        if (i >= lines.size()) throw PatchError("truncated hunk");
        const std::string& body = lines[i];
        char marker = body.empty() ? ' ' : body[0];
        if (marker == '\\') {  // "\ No newline at end of file"
          ++i;
          continue;
        }
        if (marker == ' ') {
          ++old_seen;
          ++new_seen;
        } else if (marker == '-') {
          ++old_seen;
        } else if (marker == '+') {
          ++new_seen;
        } else {
          throw PatchError("unexpected line in hunk: " + body);
        }
        hunk.lines.push_back(body.empty() ? " " : body);
        ++i;
      }
      if (old_seen != hunk.old_count || new_seen != hunk.new_count) {
        throw PatchError("hunk line counts do not match its header");
      }
      while (i < lines.size() && lines[i].rfind("\\", 0) == 0) ++i;
      file.hunks.push_back(std::move(hunk));
    }
    if (file.hunks.empty()) throw PatchError("file diff without hunks: " + file.new_path);
    files.push_back(std::move(file));
  }
  if (files.empty()) throw PatchError("no file diffs found");
  return files;
}

std::string ApplyFileDiff(const std::string& original, const FileDiff& diff) {
  std::vector<std::string> in = SplitLines(original);
  std::vector<std::string> out;
  size_t cursor = 0;  // 0-based index into `in`
  for (const DiffHunk& hunk : diff.hunks) {
    // An empty old range names the line after which to insert.
    size_t start = hunk.old_count == 0 ? hunk.old_start
                                       : static_cast<size_t>(std::max(hunk.old_start - 1, 0));
    if (start < cursor || start > in.size()) {
      throw PatchError("hunk out of order or out of range in " + diff.new_path);
    }
    while (cursor < start) out.push_back(in[cursor++]);
    for (const std::string& body : hunk.lines) {
      std::string content = body.substr(1);
      if (body[0] == '+') {
        out.push_back(content);
        continue;
      }
      if (cursor >= in.size() || in[cursor] != content) {
        throw PatchError("hunk does not match " + diff.new_path + " at line " +
                         std::to_string(cursor + 1));
      }
      if (body[0] == ' ') out.push_back(content);
      ++cursor;
    }
  }
  while (cursor < in.size()) out.push_back(in[cursor++]);
  std::string result;
  for (const std::string& line : out) {
    result += line;
    result += '\n';
  }
  return result;
}

std::string MakeUnifiedDiff(const std::string& path, const std::string& before,
                            const std::string& after, int context) {
  std::vector<std::string> a = SplitLines(before);
  std::vector<std::string> b = SplitLines(after);
  const size_t n = a.size();
  const size_t m = b.size();
  // LCS table over suffixes.
  std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
  for (size_t i = n; i-- > 0;) {
    for (size_t j = m; j-- > 0;) {
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1
                               : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }
  struct Op {
    char kind;
    size_t a_line;  // index in a (for ' ' and '-'), or position before which '+' goes
    size_t b_line;
  };
  std::vector<Op> ops;
  size_t i = 0;
  size_t j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && a[i] == b[j]) {
      ops.push_back({' ', i++, j++});
    } else if (i < n && (j >= m || lcs[i + 1][j] >= lcs[i][j + 1])) {
      ops.push_back({'-', i++, j});
    } else {
      ops.push_back({'+', i, j++});
    }
  }

  std::ostringstream out;
  bool header = false;
  size_t k = 0;
  while (k < ops.size()) {
    if (ops[k].kind == ' ') {
      ++k;
      continue;
    }
    // Grow a hunk around this change, merging changes closer than 2*context.
    size_t begin = k >= static_cast<size_t>(context) ? k - context : 0;
    while (begin < k && ops[begin].kind != ' ') ++begin;
    size_t end = k;
    while (true) {
      while (end < ops.size() && ops[end].kind != ' ') ++end;
      size_t next = end;
      while (next < ops.size() && ops[next].kind == ' ') ++next;
      if (next < ops.size() && next - end <= static_cast<size_t>(2 * context)) {
        end = next;
        continue;
      }
      end = std::min(ops.size(), end + context);
      break;
    }
    int old_count = 0;
    int new_count = 0;
    for (size_t x = begin; x < end; ++x) {
      if (ops[x].kind != '+') ++old_count;
      if (ops[x].kind != '-') ++new_count;
    }
    size_t old_start = ops[begin].a_line + (old_count > 0 ? 1 : 0);
    size_t new_start = ops[begin].b_line + (new_count > 0 ? 1 : 0);
    if (!header) {
      out << "--- a/" << path << "\n+++ b/" << path << "\n";
      header = true;
    }
    out << "@@ -" << old_start;
    if (old_count != 1) out << ',' << old_count;
    out << " +" << new_start;
    if (new_count != 1) out << ',' << new_count;
    out << " @@\n";
    for (size_t x = begin; x < end; ++x) {
      const Op& op = ops[x];
      out << op.kind << (op.kind == '+' ? b[op.b_line] : a[op.a_line]) << '\n';
    }
    k = end;
  }
  return out.str();
}

}  // namespace templar
