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

#include "polyrep/report.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <tuple>

#include <nlohmann/json.hpp>

namespace polyrep {
namespace {

// Table column a result belongs to: 0 consensus, 1 A⊗B, 2 B⊗A.
int Column(const CombinationSpec& spec) {
  if (spec.op == Operator::kConsensus) return 0;
  return spec.order == Order::kAB ? 1 : 2;
}

std::string_view OrderField(const CombinationSpec& spec) {
  return spec.op == Operator::kConsensus ? "-" : ToString(spec.order);
}

std::vector<bool> BestFlags(std::span<const CombinationResult> results) {
  std::map<std::pair<PrepLevel, int>, double> best;
  for (const auto& r : results) {
    auto key = std::make_pair(r.spec.level, Column(r.spec));
    auto [it, inserted] = best.emplace(key, r.aggregate_probability);
    if (!inserted) it->second = std::max(it->second, r.aggregate_probability);
  }
  std::vector<bool> flags;
  flags.reserve(results.size());
  for (const auto& r : results) {
    flags.push_back(r.aggregate_probability ==
                    best.at({r.spec.level, Column(r.spec)}));
  }
  return flags;
}

void AppendRow(std::string& out, std::initializer_list<std::string_view> cells) {
  bool first = true;
  for (std::string_view c : cells) {
    if (!first) out += '\t';
    out.append(c);
    first = false;
  }
  out += '\n';
}

}  // namespace

std::string FormatFixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  return buf;
}

std::string PolyrepTableTsv(std::span<const CombinationResult> results) {
  std::string out;
  AppendRow(out, {"level", "operator", "rep_a", "rep_b", "order",
                  "probability", "best"});
  const std::vector<bool> best = BestFlags(results);
  for (std::size_t i = 0; i < results.size(); ++i) {
    const CombinationSpec& s = results[i].spec;
    AppendRow(out, {ToRoman(s.level), ToString(s.op), ToString(s.rep_a),
                    ToString(s.rep_b), OrderField(s),
                    FormatFixed(results[i].aggregate_probability, 4),
                    best[i] ? "1" : "0"});
  }
  return out;
}

std::string PolyrepTableJson(std::span<const CombinationResult> results) {
  const std::vector<bool> best = BestFlags(results);
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const CombinationResult& r = results[i];
    nlohmann::json per_topic = nlohmann::json::array();
    for (const auto& t : r.per_topic) {
      per_topic.push_back({
          {"topic", t.topic_id},
          {"belief", t.opinion.belief()},
          {"disbelief", t.opinion.disbelief()},
          {"uncertainty", t.opinion.uncertainty()},
          {"base_rate", t.opinion.base_rate()},
          {"expectation", t.expectation},
      });
    }
    rows.push_back({
        {"level", ToRoman(r.spec.level)},
        {"operator", ToString(r.spec.op)},
        {"rep_a", ToString(r.spec.rep_a)},
        {"rep_b", ToString(r.spec.rep_b)},
        {"order", OrderField(r.spec)},
        {"alpha", r.spec.alpha},
        {"positive_rule", ToString(r.spec.positive_rule)},
        {"probability", r.aggregate_probability},
        {"best", static_cast<bool>(best[i])},
        {"per_topic", std::move(per_topic)},
    });
  }
  return rows.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

std::string PerTopicTsv(std::span<const CombinationResult> results) {
  std::string out;
  AppendRow(out, {"level", "operator", "rep_a", "rep_b", "order", "topic",
                  "r_a", "s_a", "r_b", "s_b", "belief", "disbelief",
                  "uncertainty", "expectation"});
  for (const auto& r : results) {
    for (const auto& t : r.per_topic) {
      AppendRow(out, {ToRoman(r.spec.level), ToString(r.spec.op),
                      ToString(r.spec.rep_a), ToString(r.spec.rep_b),
                      OrderField(r.spec), t.topic_id,
                      std::to_string(t.evidence.for_a.positive),
                      std::to_string(t.evidence.for_a.negative),
                      std::to_string(t.evidence.for_b.positive),
                      std::to_string(t.evidence.for_b.negative),
                      FormatFixed(t.opinion.belief(), 6),
                      FormatFixed(t.opinion.disbelief(), 6),
                      FormatFixed(t.opinion.uncertainty(), 6),
                      FormatFixed(t.expectation, 6)});
    }
  }
  return out;
}

std::string PrepDumpTsv(std::span<const Topic> topics,
                        std::span<const PrepLevel> levels) {
  std::string out;
  AppendRow(out, {"topic", "representation", "level", "terms"});
  for (const Topic& t : topics) {
    for (Representation rep : kAllRepresentations) {
      for (PrepLevel level : levels) {
        AppendRow(out, {t.id, ToString(rep), ToRoman(level),
                        Tokenize(t.Text(rep), level).Join(" ")});
      }
    }
  }
  return out;
}

std::string PrepDumpJson(std::span<const Topic> topics,
                         std::span<const PrepLevel> levels) {
  nlohmann::json rows = nlohmann::json::array();
  for (const Topic& t : topics) {
    for (Representation rep : kAllRepresentations) {
      for (PrepLevel level : levels) {
        const TermSet terms = Tokenize(t.Text(rep), level);
        rows.push_back({{"topic", t.id},
                        {"representation", ToString(rep)},
                        {"level", ToRoman(level)},
                        {"terms", std::vector<std::string>(terms.begin(),
                                                           terms.end())}});
      }
    }
  }
  return rows.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

}  // namespace polyrep
