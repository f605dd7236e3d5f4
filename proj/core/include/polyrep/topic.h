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

#ifndef POLYREP_TOPIC_H_
#define POLYREP_TOPIC_H_

#include <array>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace polyrep {

// The five textual representations of one information need. Keywords act
// as the original query; the other four are context representations.
enum class Representation {
  kInformationNeed,
  kBackground,
  kWorkTask,
  kIdealAnswer,
  kKeywords,
};

inline constexpr std::array kContextRepresentations = {
    Representation::kInformationNeed, Representation::kBackground,
    Representation::kWorkTask, Representation::kIdealAnswer};

inline constexpr std::array kAllRepresentations = {
    Representation::kInformationNeed, Representation::kBackground,
    Representation::kWorkTask, Representation::kIdealAnswer,
    Representation::kKeywords};

// Field name used in topic files and reports, e.g. "work_task".
std::string_view ToString(Representation rep);
// Throws InvalidArgument.
Representation ParseRepresentation(std::string_view text);

struct Topic {
  std::string id;
  std::string information_need;
  std::string background;
  std::string work_task;
  std::string ideal_answer;
  std::string keywords;

  const std::string& Text(Representation rep) const;
};

// Reads one JSON object per line with exactly the fields id,
// information_need, background, work_task, ideal_answer and keywords, all
// strings. Blank lines are skipped. Throws ParseError (with line number) on
// malformed records, unknown or missing fields, an empty id or keywords, or
// a repeated id.
std::vector<Topic> ReadTopics(std::istream& in, std::string_view source = "<topics>");
std::vector<Topic> ReadTopicsFile(const std::string& path);

}  // namespace polyrep

#endif  // POLYREP_TOPIC_H_
