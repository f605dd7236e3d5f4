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

#include "polyrep/qrels_run.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "polyrep/error.h"

namespace polyrep {
namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

template <typename T>
bool ParseNumber(std::string_view text, T& value) {
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end;
}

const Qrels::Judgments& EmptyJudgments() {
  static const Qrels::Judgments kEmpty;
  return kEmpty;
}

}  // namespace

void Qrels::Add(std::string qid, std::string docid, int grade) {
  if (grade < 0 || grade > kMaxGrade) {
    throw InvalidArgument("relevance grade " + std::to_string(grade) +
                          " outside 0..3");
  }
  auto& q = judgments_[std::move(qid)];
  if (!q.emplace(docid, grade).second) {
    throw InvalidArgument("document '" + docid + "' judged twice");
  }
}

std::optional<int> Qrels::Grade(std::string_view qid,
                                std::string_view docid) const {
  const Judgments& j = For(qid);
  auto it = j.find(docid);
  if (it == j.end()) return std::nullopt;
  return it->second;
}

const Qrels::Judgments& Qrels::For(std::string_view qid) const {
  auto it = judgments_.find(qid);
  return it == judgments_.end() ? EmptyJudgments() : it->second;
}

std::vector<std::string> Qrels::QueryIds() const {
  std::vector<std::string> ids;
  for (const auto& [qid, _] : judgments_) ids.push_back(qid);
  return ids;
}

void RunList::Add(std::string qid, std::string docid, double score) {
  if (!docids_[qid].insert(docid).second) {
    throw InvalidArgument("document '" + docid + "' retrieved twice");
  }
  runs_[std::move(qid)].push_back({std::move(docid), score});
}

void RunList::Finalize() {
  for (auto& [_, docs] : runs_) {
    std::sort(docs.begin(), docs.end(),
              [](const ScoredDoc& x, const ScoredDoc& y) {
                if (x.score != y.score) return x.score > y.score;
                return x.docid < y.docid;
              });
    if (docs.size() > kMaxRunDepth) docs.resize(kMaxRunDepth);
  }
}

std::span<const ScoredDoc> RunList::Ranked(std::string_view qid) const {
  auto it = runs_.find(qid);
  if (it == runs_.end()) return {};
  return it->second;
}

std::vector<std::string> RunList::QueryIds() const {
  std::vector<std::string> ids;
  for (const auto& [qid, _] : runs_) ids.push_back(qid);
  return ids;
}

RunList ParseRun(std::istream& in, std::string_view source) {
  const std::string src(source);
  RunList run;
  std::map<std::string, std::map<std::string, std::size_t>, std::less<>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto f = SplitFields(line);
    if (f.empty()) continue;
    if (f.size() != 6) {
      throw ParseError(src, line_no,
                       "expected 6 fields `qid Q0 docid rank score tag`, got " +
                           std::to_string(f.size()));
    }
    long long rank = 0;
    if (!ParseNumber(f[3], rank)) {
      throw ParseError(src, line_no, "rank is not an integer: " + std::string(f[3]));
    }
    double score = 0.0;
    if (!ParseNumber(f[4], score) || !std::isfinite(score)) {
      throw ParseError(src, line_no, "score is not a finite number: " +
                                         std::string(f[4]));
    }
    auto& docs = seen[std::string(f[0])];
    auto [it, inserted] = docs.emplace(std::string(f[2]), line_no);
    if (!inserted) {
      throw ParseError(src, line_no,
                       "duplicate document '" + std::string(f[2]) +
                           "' for query '" + std::string(f[0]) +
                           "' (first seen on line " +
                           std::to_string(it->second) + ")");
    }
    run.Add(std::string(f[0]), std::string(f[2]), score);
  }
  run.Finalize();
  return run;
}

RunList ParseRunFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open run file: " + path);
  return ParseRun(in, path);
}

Qrels ParseQrels(std::istream& in, std::string_view source) {
  const std::string src(source);
  Qrels qrels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto f = SplitFields(line);
    if (f.empty()) continue;
    if (f.size() != 4) {
      throw ParseError(src, line_no,
                       "expected 4 fields `qid 0 docid grade`, got " +
                           std::to_string(f.size()));
    }
    int grade = 0;
    if (!ParseNumber(f[3], grade)) {
      throw ParseError(src, line_no, "grade is not an integer: " + std::string(f[3]));
    }
    try {
      qrels.Add(std::string(f[0]), std::string(f[2]), grade);
    } catch (const InvalidArgument& e) {
      throw ParseError(src, line_no, e.what());
    }
  }
  return qrels;
}

Qrels ParseQrelsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open qrels file: " + path);
  return ParseQrels(in, path);
}

}  // namespace polyrep
