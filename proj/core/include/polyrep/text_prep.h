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

// Tokenization and the four cumulative preprocessing levels used when
// counting terms.

#ifndef POLYREP_TEXT_PREP_H_
#define POLYREP_TEXT_PREP_H_

#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace polyrep {

// Levels are cumulative: each one applies every transformation of the
// previous level first.
enum class PrepLevel {
  kRaw = 1,        // I: whitespace split, tokens kept verbatim
  kCasePunct = 2,  // II: lowercase, punctuation removed
  kStop = 3,       // III: II + SMART stopword removal
  kStem = 4,       // IV: III + Porter stemming
};

// "I", "II", "III", "IV".
std::string_view ToRoman(PrepLevel level);
// Accepts roman numerals (case-insensitive) or 1-4. Throws InvalidArgument.
PrepLevel ParsePrepLevel(std::string_view text);
// Comma-separated list, e.g. "I,II,IV". Order is preserved, duplicates
// rejected.
std::vector<PrepLevel> ParsePrepLevels(std::string_view text);

inline constexpr PrepLevel kAllPrepLevels[] = {
    PrepLevel::kRaw, PrepLevel::kCasePunct, PrepLevel::kStop,
    PrepLevel::kStem};

// A deduplicated set of non-empty terms, iterated in byte order.
class TermSet {
 public:
  using const_iterator = std::set<std::string, std::less<>>::const_iterator;

  TermSet() = default;
  TermSet(std::initializer_list<std::string> terms);

  // Ignores empty strings. Returns true if the term was new.
  bool Insert(std::string term);
  bool Contains(std::string_view term) const;

  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  // Space-separated, sorted.
  std::string Join(std::string_view separator = " ") const;

  friend bool operator==(const TermSet&, const TermSet&) = default;

 private:
  std::set<std::string, std::less<>> terms_;
};

TermSet Tokenize(std::string_view text, PrepLevel level);

// Membership in the bundled SMART stoplist. Expects lowercase input.
bool IsStopword(std::string_view term);
std::size_t StoplistSize();

}  // namespace polyrep

#endif  // POLYREP_TEXT_PREP_H_
