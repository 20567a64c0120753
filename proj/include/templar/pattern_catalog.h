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

#ifndef TEMPLAR_PATTERN_CATALOG_H_
#define TEMPLAR_PATTERN_CATALOG_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "templar/ast_edit.h"
#include "templar/donor_search.h"
#include "templar/interpreter.h"
#include "templar/program.h"

namespace templar {

enum class ChangeAction { kUpdate, kDelete, kInsert, kMove };
enum class Granularity { kExpression, kStatement, kMethod };
enum class Spread { kSingle, kMultiple };

std::string_view ChangeActionName(ChangeAction action);

// Scheduling rank: Update, then Insert, then Delete, then Move.
int ActionPriority(ChangeAction action);

// Metadata of one fix pattern. Patterns that the catalog counts under two
// granularities or spreads list both.
struct PatternDescriptor {
  std::string id;  // "FP1", "FP2.1", ...
  std::string name;
  ChangeAction action;
  std::vector<Granularity> granularity;
  std::vector<Spread> spread;
  std::string bug_context;
  bool needs_donor = false;
  int index = 0;  // position in the catalog
};

// The 35 patterns in catalog order.
const std::vector<PatternDescriptor>& Catalog();
const PatternDescriptor* FindPattern(std::string_view id);

// Selects patterns by id; a family id such as "FP2" selects all of its
// sub-patterns. An empty filter selects everything.
class PatternFilter {
 public:
  PatternFilter() = default;
  // Throws std::invalid_argument on an id matching no pattern.
  explicit PatternFilter(const std::vector<std::string>& ids);
  bool Allows(std::string_view id) const;
  bool empty() const { return ids_.empty(); }
  const std::vector<std::string>& ids() const { return ids_; }

 private:
  std::vector<std::string> ids_;
};

// DEFAULT_VALUE for a return type: false for boolean, 0 for other
// primitives, `new String()` for String, null otherwise. For void the result
// is the marker statement `return;`.
Node DefaultValue(const LangType& return_type);

// `return DEFAULT_VALUE;`, or `return;` for void.
Node DefaultReturn(const LangType& return_type);

// One suspicious statement with everything the patterns consult.
class RepairSite {
 public:
  RepairSite(std::shared_ptr<const CheckedProgram> program,
             const StatementId& statement,
             DistanceMetric metric = DistanceMetric::kTreePath);

  const CheckedProgram& program() const { return *program_; }
  const ClassTable& classes() const { return program_->classes(); }
  int file() const { return file_; }
  const SourceFile& source() const { return program_->file(file_); }
  const TreeIndex& index() const { return index_; }
  const Node& statement() const { return *statement_; }
  const StatementId& id() const { return id_; }
  const Node& method() const { return *method_; }
  const ClassInfo& klass() const { return *klass_; }
  const DonorSet& donors() const { return donors_; }
  LangType return_type() const;

 private:
  std::shared_ptr<const CheckedProgram> program_;
  StatementId id_;
  int file_ = -1;
  TreeIndex index_;
  const Node* statement_ = nullptr;
  const Node* method_ = nullptr;
  const ClassInfo* klass_ = nullptr;
  DonorSet donors_;
};

// Template metavariables bound by a match (exp, T, var1, dividend, ...).
struct MatchBindings {
  std::map<std::string, const Node*> nodes;
  std::map<std::string, LangType> types;
};

struct PatternMatch {
  const PatternDescriptor* descriptor = nullptr;
  const Node* target = nullptr;
  // Position of `target` in the statement traversal: expression nodes in
  // preorder, then the statement, then the enclosing method.
  int traversal = 0;
  MatchBindings bindings;
};

struct Candidate {
  Patch patch;
  const PatternDescriptor* descriptor = nullptr;
  NodeId target = 0;
  int traversal = 0;
  int donor_position = -1;
  int generation = 0;  // order of emission within its match
  // Filled by VerifyCandidate.
  std::shared_ptr<const CheckedProgram> patched;
  std::string patched_text;
};

// All pattern matches for the site's statement, in traversal order and, on
// one node, by action priority then catalog order.
std::vector<PatternMatch> MatchStatement(const RepairSite& site,
                                         const PatternFilter& filter = {});

// Unverified candidates of one match, in emission order.
std::vector<Candidate> GenerateCandidates(const PatternMatch& match,
                                          const RepairSite& site);

// Applies the edits, prints, re-parses and type-checks the patched program.
// Fails, leaving `patched` empty, if any step fails or the result is
// equivalent to the original file.
bool VerifyCandidate(Candidate& candidate, const RepairSite& site);

// Verified candidates of one match ordered by donor distance (donor-free
// candidates first), at most `cap` of them.
std::vector<Candidate> ApplyPattern(const PatternMatch& match,
                                    const RepairSite& site, int cap = 20);

// Orders the candidates of one match: donor-free first, then ascending donor
// distance, donor position, emission order.
void SortByDonor(std::vector<Candidate>& candidates);

}  // namespace templar

#endif  // TEMPLAR_PATTERN_CATALOG_H_
