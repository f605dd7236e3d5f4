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

#include "polyrep/topic.h"

#include <algorithm>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "polyrep/error.h"

namespace polyrep {
namespace {

constexpr std::array<std::string_view, 6> kFields = {
    "id", "information_need", "background", "work_task", "ideal_answer",
    "keywords"};

bool IsBlank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
           c == '\v';
  });
}

}  // namespace

std::string_view ToString(Representation rep) {
  switch (rep) {
    case Representation::kInformationNeed: return "information_need";
    case Representation::kBackground: return "background";
    case Representation::kWorkTask: return "work_task";
    case Representation::kIdealAnswer: return "ideal_answer";
    case Representation::kKeywords: return "keywords";
  }
  return "?";
}

Representation ParseRepresentation(std::string_view text) {
  for (Representation rep : kAllRepresentations) {
    if (ToString(rep) == text) return rep;
  }
  throw InvalidArgument("unknown representation '" + std::string(text) + "'");
}

const std::string& Topic::Text(Representation rep) const {
  switch (rep) {
    case Representation::kInformationNeed: return information_need;
    case Representation::kBackground: return background;
    case Representation::kWorkTask: return work_task;
    case Representation::kIdealAnswer: return ideal_answer;
    case Representation::kKeywords: return keywords;
  }
  return keywords;
}

std::vector<Topic> ReadTopics(std::istream& in, std::string_view source) {
  const std::string src(source);
  std::vector<Topic> topics;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (IsBlank(line)) continue;

    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(src, line_no, std::string("invalid JSON: ") + e.what());
    }
    if (!record.is_object()) {
      throw ParseError(src, line_no, "topic record must be a JSON object");
    }
    for (const auto& [key, value] : record.items()) {
      if (std::find(kFields.begin(), kFields.end(), key) == kFields.end()) {
        throw ParseError(src, line_no, "unknown field '" + key + "'");
      }
      if (!value.is_string()) {
        throw ParseError(src, line_no, "field '" + key + "' must be a string");
      }
    }
    for (std::string_view field : kFields) {
      if (!record.contains(field)) {
        throw ParseError(src, line_no,
                         "missing field '" + std::string(field) + "'");
      }
    }

    Topic t;
    t.id = record["id"].get<std::string>();
    t.information_need = record["information_need"].get<std::string>();
    t.background = record["background"].get<std::string>();
    t.work_task = record["work_task"].get<std::string>();
    t.ideal_answer = record["ideal_answer"].get<std::string>();
    t.keywords = record["keywords"].get<std::string>();

    if (IsBlank(t.id)) throw ParseError(src, line_no, "empty topic id");
    if (IsBlank(t.keywords)) {
      throw ParseError(src, line_no, "topic '" + t.id + "' has empty keywords");
    }
    if (!seen.insert(t.id).second) {
      throw ParseError(src, line_no, "duplicate topic id '" + t.id + "'");
    }
    topics.push_back(std::move(t));
  }
  return topics;
}

std::vector<Topic> ReadTopicsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open topics file: " + path);
  return ReadTopics(in, path);
}

}  // namespace polyrep
