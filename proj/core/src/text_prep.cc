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

#include "polyrep/text_prep.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <unordered_set>

#include "polyrep/error.h"
#include "polyrep/porter_stemmer.h"

namespace polyrep {
namespace detail {
extern const std::string_view kSmartStoplistText;
}  // namespace detail

namespace {

const std::unordered_set<std::string_view>& Stoplist() {
  static const auto* const kStoplist = [] {
    auto* set = new std::unordered_set<std::string_view>();
    std::string_view text = detail::kSmartStoplistText;
    while (!text.empty()) {
      const std::size_t nl = text.find('\n');
      std::string_view line = text.substr(0, nl);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (!line.empty()) set->insert(line);
      if (nl == std::string_view::npos) break;
      text.remove_prefix(nl + 1);
    }
    return set;
  }();
  return *kStoplist;
}

// Decodes one code point at `pos`, advancing it. Ill-formed sequences decode
// to a negative value and consume one byte.
UChar32 NextCodePoint(std::string_view text, std::size_t& pos) {
  const auto* bytes = reinterpret_cast<const std::uint8_t*>(text.data());
  const auto length = static_cast<std::int32_t>(text.size());
  auto i = static_cast<std::int32_t>(pos);
  UChar32 c;
  U8_NEXT(bytes, i, length, c);
  pos = static_cast<std::size_t>(i);
  return c;
}

void AppendUtf8(std::string& out, UChar32 c) {
  char buf[U8_MAX_LENGTH];
  std::int32_t len = 0;
  UBool error = false;
  U8_APPEND(reinterpret_cast<std::uint8_t*>(buf), len, U8_MAX_LENGTH, c, error);
  if (!error) out.append(buf, static_cast<std::size_t>(len));
}

bool IsSpace(UChar32 c) { return c >= 0 && u_isUWhiteSpace(c); }

bool IsWordChar(UChar32 c) { return c >= 0 && (u_isalpha(c) || u_isdigit(c)); }

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> tokens;
  std::size_t pos = 0;
  std::size_t start = 0;
  bool in_token = false;
  while (pos < text.size()) {
    const std::size_t at = pos;
    const UChar32 c = NextCodePoint(text, pos);
    if (IsSpace(c)) {
      if (in_token) tokens.emplace_back(text.substr(start, at - start));
      in_token = false;
    } else if (!in_token) {
      start = at;
      in_token = true;
    }
  }
  if (in_token) tokens.emplace_back(text.substr(start));
  return tokens;
}

// Lowercases and splits on every code point that is not a letter or digit.
std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const UChar32 c = NextCodePoint(text, pos);
    if (IsWordChar(c)) {
      AppendUtf8(current, u_tolower(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

}  // namespace

std::string_view ToRoman(PrepLevel level) {
  switch (level) {
    case PrepLevel::kRaw: return "I";
    case PrepLevel::kCasePunct: return "II";
    case PrepLevel::kStop: return "III";
    case PrepLevel::kStem: return "IV";
  }
  return "?";
}

PrepLevel ParsePrepLevel(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (upper == "I" || upper == "1") return PrepLevel::kRaw;
  if (upper == "II" || upper == "2") return PrepLevel::kCasePunct;
  if (upper == "III" || upper == "3") return PrepLevel::kStop;
  if (upper == "IV" || upper == "4") return PrepLevel::kStem;
  throw InvalidArgument("unknown preprocessing level '" + std::string(text) +
                        "' (expected I, II, III or IV)");
}

std::vector<PrepLevel> ParsePrepLevels(std::string_view text) {
  std::vector<PrepLevel> levels;
  while (true) {
    const std::size_t comma = text.find(',');
    const PrepLevel level = ParsePrepLevel(text.substr(0, comma));
    if (std::find(levels.begin(), levels.end(), level) != levels.end()) {
      throw InvalidArgument("preprocessing level listed twice: " +
                            std::string(ToRoman(level)));
    }
    levels.push_back(level);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return levels;
}

TermSet::TermSet(std::initializer_list<std::string> terms) {
  for (const auto& t : terms) Insert(t);
}

bool TermSet::Insert(std::string term) {
  if (term.empty()) return false;
  return terms_.insert(std::move(term)).second;
}

bool TermSet::Contains(std::string_view term) const {
  return terms_.find(term) != terms_.end();
}

std::string TermSet::Join(std::string_view separator) const {
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out.append(separator);
    out.append(t);
  }
  return out;
}

TermSet Tokenize(std::string_view text, PrepLevel level) {
  TermSet terms;
  if (level == PrepLevel::kRaw) {
    for (auto& token : SplitWhitespace(text)) terms.Insert(std::move(token));
    return terms;
  }
  for (auto& token : SplitWords(text)) {
    if (level >= PrepLevel::kStop && IsStopword(token)) continue;
    if (level == PrepLevel::kStem) {
      terms.Insert(PorterStem(token));
    } else {
      terms.Insert(std::move(token));
    }
  }
  return terms;
}

bool IsStopword(std::string_view term) {
  return !term.empty() && Stoplist().contains(term);
}

std::size_t StoplistSize() { return Stoplist().size(); }

}  // namespace polyrep
