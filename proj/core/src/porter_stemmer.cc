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

#include "polyrep/porter_stemmer.h"

#include <algorithm>
#include <array>
#include <cstddef>

namespace polyrep {
namespace {

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

// Rule tables are ordered so that, within a step, a longer suffix is tried
// before any shorter suffix it ends with. Only the first matching suffix is
// considered, whether or not its condition holds.
constexpr std::array kStep2 = {
    Rule{"ational", "ate"}, Rule{"tional", "tion"}, Rule{"enci", "ence"},
    Rule{"anci", "ance"},   Rule{"izer", "ize"},    Rule{"abli", "able"},
    Rule{"alli", "al"},     Rule{"entli", "ent"},   Rule{"eli", "e"},
    Rule{"ousli", "ous"},   Rule{"ization", "ize"}, Rule{"ation", "ate"},
    Rule{"ator", "ate"},    Rule{"alism", "al"},    Rule{"iveness", "ive"},
    Rule{"fulness", "ful"}, Rule{"ousness", "ous"}, Rule{"aliti", "al"},
    Rule{"iviti", "ive"},   Rule{"biliti", "ble"},
};

constexpr std::array kStep3 = {
    Rule{"icate", "ic"}, Rule{"ative", ""}, Rule{"alize", "al"},
    Rule{"iciti", "ic"}, Rule{"ical", "ic"}, Rule{"ful", ""},
    Rule{"ness", ""},
};

constexpr std::array<std::string_view, 19> kStep4 = {
    "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement", "ment",
    "ent", "ion",  "ou",   "ism", "ate", "iti",  "ous",  "ive", "ize",
};

class Stemmer {
 public:
  explicit Stemmer(std::string_view word) : w_(word) {}

  std::string Run() {
    Step1a();
    Step1b();
    Step1c();
    ApplyRules(kStep2);
    ApplyRules(kStep3);
    Step4();
    Step5a();
    Step5b();
    return std::move(w_);
  }

 private:
  bool IsConsonant(std::size_t i) const {
    switch (w_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 || !IsConsonant(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in w_[0, len).
  int Measure(std::size_t len) const {
    int m = 0;
    std::size_t i = 0;
    while (i < len && IsConsonant(i)) ++i;
    while (i < len) {
      while (i < len && !IsConsonant(i)) ++i;
      if (i >= len) break;
      while (i < len && IsConsonant(i)) ++i;
      ++m;
    }
    return m;
  }

  bool HasVowel(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i) {
      if (!IsConsonant(i)) return true;
    }
    return false;
  }

  bool EndsDoubleConsonant(std::size_t len) const {
    return len >= 2 && w_[len - 1] == w_[len - 2] && IsConsonant(len - 1);
  }

  // consonant-vowel-consonant, the last not w, x or y.
  bool EndsCvc(std::size_t len) const {
    if (len < 3) return false;
    if (!IsConsonant(len - 3) || IsConsonant(len - 2) || !IsConsonant(len - 1))
      return false;
    const char c = w_[len - 1];
    return c != 'w' && c != 'x' && c != 'y';
  }

  bool EndsWith(std::string_view suffix) const {
    return w_.size() >= suffix.size() &&
           std::string_view(w_).substr(w_.size() - suffix.size()) == suffix;
  }

  void ReplaceSuffix(std::size_t suffix_len, std::string_view replacement) {
    w_.resize(w_.size() - suffix_len);
    w_.append(replacement);
  }

  void Step1a() {
    if (EndsWith("sses")) {
      ReplaceSuffix(4, "ss");
    } else if (EndsWith("ies")) {
      ReplaceSuffix(3, "i");
    } else if (EndsWith("ss")) {
      // unchanged
    } else if (EndsWith("s")) {
      ReplaceSuffix(1, "");
    }
  }

  void Step1b() {
    if (EndsWith("eed")) {
      if (Measure(w_.size() - 3) > 0) ReplaceSuffix(1, "");
      return;
    }
    std::size_t cut = 0;
    if (EndsWith("ed") && HasVowel(w_.size() - 2)) {
      cut = 2;
    } else if (EndsWith("ing") && HasVowel(w_.size() - 3)) {
      cut = 3;
    }
    if (cut == 0) return;
    ReplaceSuffix(cut, "");

    if (EndsWith("at") || EndsWith("bl") || EndsWith("iz")) {
      w_.push_back('e');
    } else if (EndsDoubleConsonant(w_.size())) {
      const char c = w_.back();
      if (c != 'l' && c != 's' && c != 'z') w_.pop_back();
    } else if (Measure(w_.size()) == 1 && EndsCvc(w_.size())) {
      w_.push_back('e');
    }
  }

  void Step1c() {
    if (EndsWith("y") && HasVowel(w_.size() - 1)) w_.back() = 'i';
  }

  template <std::size_t N>
  void ApplyRules(const std::array<Rule, N>& rules) {
    for (const Rule& rule : rules) {
      if (!EndsWith(rule.suffix)) continue;
      if (Measure(w_.size() - rule.suffix.size()) > 0) {
        ReplaceSuffix(rule.suffix.size(), rule.replacement);
      }
      return;
    }
  }

  void Step4() {
    // Longest matching suffix wins; "ement" must be seen before "ment"/"ent".
    std::string_view best;
    for (std::string_view suffix : kStep4) {
      if (suffix.size() > best.size() && EndsWith(suffix)) best = suffix;
    }
    if (best.empty()) return;
    const std::size_t stem = w_.size() - best.size();
    if (Measure(stem) <= 1) return;
    if (best == "ion") {
      if (stem == 0 || (w_[stem - 1] != 's' && w_[stem - 1] != 't')) return;
    }
    w_.resize(stem);
  }

  void Step5a() {
    if (!EndsWith("e")) return;
    const std::size_t stem = w_.size() - 1;
    const int m = Measure(stem);
    if (m > 1 || (m == 1 && !EndsCvc(stem))) w_.pop_back();
  }

  void Step5b() {
    if (Measure(w_.size()) > 1 && EndsDoubleConsonant(w_.size()) &&
        w_.back() == 'l') {
      w_.pop_back();
    }
  }

  std::string w_;
};

}  // namespace

std::string PorterStem(std::string_view word) {
  if (word.size() <= 2) return std::string(word);
  const bool alphabetic = std::all_of(word.begin(), word.end(),
                                      [](char c) { return c >= 'a' && c <= 'z'; });
  if (!alphabetic) return std::string(word);
  return Stemmer(word).Run();
}

}  // namespace polyrep
