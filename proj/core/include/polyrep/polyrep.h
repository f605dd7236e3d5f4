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

// Pairwise combination of query context representations into fused opinions
// and polyrepresentation probabilities, per topic and aggregated.

#ifndef POLYREP_POLYREP_H_
#define POLYREP_POLYREP_H_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyrep/evidence.h"
#include "polyrep/opinion.h"
#include "polyrep/text_prep.h"
#include "polyrep/topic.h"

namespace polyrep {

enum class Operator { kConsensus, kRecommendation };
// A⊗B (kAB) or B⊗A (kBA). Meaningless for consensus.
enum class Order { kAB, kBA };
enum class AggregationMode {
  kMacro,   // mean of per-topic expectations
  kPooled,  // evidence summed over topics, mapped and fused once
};

std::string_view ToString(Operator op);
std::string_view ToString(Order order);
std::string_view ToString(AggregationMode mode);
Operator ParseOperator(std::string_view text);
AggregationMode ParseAggregationMode(std::string_view text);

inline constexpr double kDefaultAlpha = 0.5;

// The six unordered context pairs, oriented as (A, B).
inline constexpr std::array<std::pair<Representation, Representation>, 6>
    kContextPairs = {{
        {Representation::kBackground, Representation::kIdealAnswer},
        {Representation::kBackground, Representation::kWorkTask},
        {Representation::kInformationNeed, Representation::kBackground},
        {Representation::kInformationNeed, Representation::kIdealAnswer},
        {Representation::kInformationNeed, Representation::kWorkTask},
        {Representation::kWorkTask, Representation::kIdealAnswer},
    }};

struct CombinationSpec {
  Representation rep_a = Representation::kInformationNeed;
  Representation rep_b = Representation::kWorkTask;
  Operator op = Operator::kConsensus;
  Order order = Order::kAB;
  PrepLevel level = PrepLevel::kRaw;
  double alpha = kDefaultAlpha;
  PositiveRule positive_rule = PositiveRule::kUnion;

  // Throws InvalidArgument if rep_a == rep_b, either side is the keywords
  // field, or alpha is outside [0,1].
  void Validate() const;
  // e.g. "recommendation:information_need:work_task:BA@II"
  std::string Label() const;
};

struct TopicOutcome {
  std::string topic_id;
  EvidencePair evidence;
  Opinion opinion;
  double expectation = 0.0;
};

struct CombinationResult {
  CombinationSpec spec;
  std::vector<TopicOutcome> per_topic;
  double aggregate_probability = 0.0;
};

// The term sets of one topic at one preprocessing level.
struct PreparedTopic {
  std::string id;
  std::array<TermSet, 5> terms;  // indexed by Representation

  const TermSet& Terms(Representation rep) const {
    return terms[static_cast<std::size_t>(rep)];
  }
};

PreparedTopic Prepare(const Topic& topic, PrepLevel level);

// Evidence for the combination's pair, before any order swap: for_a belongs to
// rep_a and for_b to rep_b.
EvidencePair ExtractEvidence(const PreparedTopic& topic,
                             const CombinationSpec& spec);

// Maps evidence to opinions and fuses them. For recommendation in order AB
// the trust opinion comes from A's evidence and the claim from B's; BA swaps
// the roles.
Opinion Fuse(const EvidencePair& evidence, const CombinationSpec& spec);

TopicOutcome CombineTopic(const PreparedTopic& topic,
                          const CombinationSpec& spec);
TopicOutcome CombineTopic(const Topic& topic, const CombinationSpec& spec);

struct MatrixOptions {
  std::vector<PrepLevel> levels = {std::begin(kAllPrepLevels),
                                   std::end(kAllPrepLevels)};
  double alpha = kDefaultAlpha;
  PositiveRule positive_rule = PositiveRule::kUnion;
  AggregationMode mode = AggregationMode::kMacro;
  bool consensus = true;
  bool recommendation = true;
  // Worker threads for per-topic work; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

// All specs run_matrix evaluates, in report order: per level, the six
// consensus pairs then the six recommendation pairs as AB, BA.
std::vector<CombinationSpec> MatrixSpecs(const MatrixOptions& options);

CombinationResult Aggregate(CombinationSpec spec,
                            std::vector<TopicOutcome> per_topic,
                            AggregationMode mode);

// Throws InvalidArgument for an empty topic list.
std::vector<CombinationResult> RunMatrix(std::span<const Topic> topics,
                                         const MatrixOptions& options);

// Descending aggregate probability; ties by (operator, rep_a, rep_b, order,
// level) names. Stable.
std::vector<CombinationResult> RankCombinations(
    std::vector<CombinationResult> results);

}  // namespace polyrep

#endif  // POLYREP_POLYREP_H_
