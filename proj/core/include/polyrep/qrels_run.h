// Copyright 2026 The Polyrep Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// TREC-style run files and graded relevance judgments.

#ifndef POLYREP_QRELS_RUN_H_
#define POLYREP_QRELS_RUN_H_

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polyrep {

inline constexpr int kMaxGrade = 3;
inline constexpr std::size_t kMaxRunDepth = 1000;

// (query, doc) -> grade in {0,1,2,3}.
class Qrels {
 public:
  using Judgments = std::map<std::string, int, std::less<>>;

  // Throws InvalidArgument on a grade outside [0,3] or a repeated pair.
  void Add(std::string qid, std::string docid, int grade);

  std::optional<int> Grade(std::string_view qid, std::string_view docid) const;
  // Empty when the query has no judgments.
  const Judgments& For(std::string_view qid) const;
  std::vector<std::string> QueryIds() const;
  bool empty() const { return judgments_.empty(); }

 private:
  std::map<std::string, Judgments, std::less<>> judgments_;
};

struct ScoredDoc {
  std::string docid;
  double score = 0.0;
};

// Per query, documents ranked by descending score, ties by ascending doc id.
class RunList {
 public:
  // Throws InvalidArgument when docid already appears for qid.
  void Add(std::string qid, std::string docid, double score);
  // Sorts every query and truncates to the top kMaxRunDepth. Called by the
  // parser; call it after manual Add()s.
  void Finalize();

  // Empty span for an unknown query.
  std::span<const ScoredDoc> Ranked(std::string_view qid) const;
  std::vector<std::string> QueryIds() const;
  bool empty() const { return runs_.empty(); }

 private:
  std::map<std::string, std::vector<ScoredDoc>, std::less<>> runs_;
  std::map<std::string, std::set<std::string>, std::less<>> docids_;
};

// Lines: `qid Q0 docid rank score tag`. The rank column is ignored.
RunList ParseRun(std::istream& in, std::string_view source = "<run>");
RunList ParseRunFile(const std::string& path);

// Lines: `qid 0 docid grade`.
Qrels ParseQrels(std::istream& in, std::string_view source = "<qrels>");
Qrels ParseQrelsFile(const std::string& path);

}  // namespace polyrep

#endif  // POLYREP_QRELS_RUN_H_
