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

#include "polyrep/polyrep.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <tuple>

#include "polyrep/error.h"

namespace polyrep {
namespace {

// Runs fn(i) for i in [0, n) on up to `threads` workers. Each index is
// handled exactly once; callers write results by index, so the output does
// not depend on scheduling.
template <typename Fn>
void ParallelFor(std::size_t n, unsigned threads, Fn fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
}

EvidenceCounts operator+(const EvidenceCounts& x, const EvidenceCounts& y) {
  return {x.positive + y.positive, x.negative + y.negative};
}

}  // namespace

std::string_view ToString(Operator op) {
  return op == Operator::kConsensus ? "consensus" : "recommendation";
}

std::string_view ToString(Order order) {
  return order == Order::kAB ? "AB" : "BA";
}

std::string_view ToString(AggregationMode mode) {
  return mode == AggregationMode::kMacro ? "macro" : "pooled";
}

Operator ParseOperator(std::string_view text) {
  if (text == "consensus") return Operator::kConsensus;
  if (text == "recommendation") return Operator::kRecommendation;
  throw InvalidArgument("unknown operator '" + std::string(text) + "'");
}

AggregationMode ParseAggregationMode(std::string_view text) {
  if (text == "macro") return AggregationMode::kMacro;
  if (text == "pooled") return AggregationMode::kPooled;
  throw InvalidArgument("unknown aggregation mode '" + std::string(text) +
                        "' (expected macro or pooled)");
}

void CombinationSpec::Validate() const {
  if (rep_a == rep_b) {
    throw InvalidArgument("combination needs two distinct representations");
  }
  if (rep_a == Representation::kKeywords || rep_b == Representation::kKeywords) {
    throw InvalidArgument("keywords are the query, not a context representation");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("alpha must lie in [0,1]");
  }
}

std::string CombinationSpec::Label() const {
  std::string label(ToString(op));
  label += ':';
  label += ToString(rep_a);
  label += ':';
  label += ToString(rep_b);
  if (op == Operator::kRecommendation) {
    label += ':';
    label += ToString(order);
  }
  label += '@';
  label += ToRoman(level);
  return label;
}

PreparedTopic Prepare(const Topic& topic, PrepLevel level) {
  PreparedTopic prepared;
  prepared.id = topic.id;
  for (Representation rep : kAllRepresentations) {
    prepared.terms[static_cast<std::size_t>(rep)] =
        Tokenize(topic.Text(rep), level);
  }
  return prepared;
}

EvidencePair ExtractEvidence(const PreparedTopic& topic,
                             const CombinationSpec& spec) {
  const TermSet& a = topic.Terms(spec.rep_a);
  const TermSet& b = topic.Terms(spec.rep_b);
  const TermSet& q = topic.Terms(Representation::kKeywords);
  return spec.op == Operator::kConsensus
             ? ConsensusEvidence(a, b, q, spec.positive_rule)
             : RecommendationEvidence(a, b, q);
}

Opinion Fuse(const EvidencePair& evidence, const CombinationSpec& spec) {
  const Opinion a = FromEvidence(evidence.for_a, spec.alpha);
  const Opinion b = FromEvidence(evidence.for_b, spec.alpha);
  if (spec.op == Operator::kConsensus) return Consensus(a, b);
  return spec.order == Order::kAB ? Recommendation(a, b) : Recommendation(b, a);
}

TopicOutcome CombineTopic(const PreparedTopic& topic,
                          const CombinationSpec& spec) {
  spec.Validate();
  TopicOutcome out;
  out.topic_id = topic.id;
  out.evidence = ExtractEvidence(topic, spec);
  out.opinion = Fuse(out.evidence, spec);
  out.expectation = Expectation(out.opinion);
  return out;
}

TopicOutcome CombineTopic(const Topic& topic, const CombinationSpec& spec) {
  return CombineTopic(Prepare(topic, spec.level), spec);
}

std::vector<CombinationSpec> MatrixSpecs(const MatrixOptions& options) {
  std::vector<CombinationSpec> specs;
  for (PrepLevel level : options.levels) {
    CombinationSpec base;
    base.level = level;
    base.alpha = options.alpha;
    base.positive_rule = options.positive_rule;
    if (options.consensus) {
      for (const auto& [a, b] : kContextPairs) {
        CombinationSpec s = base;
        s.rep_a = a;
        s.rep_b = b;
        s.op = Operator::kConsensus;
        specs.push_back(s);
      }
    }
    if (options.recommendation) {
      for (const auto& [a, b] : kContextPairs) {
        for (Order order : {Order::kAB, Order::kBA}) {
          CombinationSpec s = base;
          s.rep_a = a;
          s.rep_b = b;
          s.op = Operator::kRecommendation;
          s.order = order;
          specs.push_back(s);
        }
      }
    }
  }
  return specs;
}

CombinationResult Aggregate(CombinationSpec spec,
                            std::vector<TopicOutcome> per_topic,
                            AggregationMode mode) {
  if (per_topic.empty()) throw InvalidArgument("no topics to aggregate");
  CombinationResult result;
  result.spec = spec;
  if (mode == AggregationMode::kMacro) {
    double sum = 0.0;
    double lo = 1.0;
    double hi = 0.0;
    for (const auto& t : per_topic) {
      sum += t.expectation;
      lo = std::min(lo, t.expectation);
      hi = std::max(hi, t.expectation);
    }
    // The rounded mean of equal values can land one ulp outside them.
    result.aggregate_probability =
        std::clamp(sum / static_cast<double>(per_topic.size()), lo, hi);
  } else {
    EvidencePair pooled;
    for (const auto& t : per_topic) {
      pooled.for_a = pooled.for_a + t.evidence.for_a;
      pooled.for_b = pooled.for_b + t.evidence.for_b;
    }
    result.aggregate_probability = Expectation(Fuse(pooled, spec));
  }
  result.per_topic = std::move(per_topic);
  return result;
}

std::vector<CombinationResult> RunMatrix(std::span<const Topic> topics,
                                         const MatrixOptions& options) {
  if (topics.empty()) throw InvalidArgument("empty topic list");
  if (options.levels.empty()) {
    throw InvalidArgument("at least one preprocessing level is required");
  }
  const std::vector<CombinationSpec> specs = MatrixSpecs(options);
  for (const auto& s : specs) s.Validate();

  std::vector<CombinationResult> results;
  results.reserve(specs.size());
  for (PrepLevel level : options.levels) {
    std::vector<PreparedTopic> prepared(topics.size());
    ParallelFor(topics.size(), options.threads, [&](std::size_t i) {
      prepared[i] = Prepare(topics[i], level);
    });
    for (const CombinationSpec& spec : specs) {
      if (spec.level != level) continue;
      std::vector<TopicOutcome> outcomes(prepared.size());
      ParallelFor(prepared.size(), options.threads, [&](std::size_t i) {
        outcomes[i] = CombineTopic(prepared[i], spec);
      });
      results.push_back(Aggregate(spec, std::move(outcomes), options.mode));
    }
  }
  return results;
}

std::vector<CombinationResult> RankCombinations(
    std::vector<CombinationResult> results) {
  auto key = [](const CombinationResult& r) {
    return std::make_tuple(ToString(r.spec.op), ToString(r.spec.rep_a),
                           ToString(r.spec.rep_b), ToString(r.spec.order),
                           static_cast<int>(r.spec.level));
  };
  std::stable_sort(results.begin(), results.end(),
                   [&](const CombinationResult& x, const CombinationResult& y) {
                     if (x.aggregate_probability != y.aggregate_probability) {
                       return x.aggregate_probability > y.aggregate_probability;
                     }
                     return key(x) < key(y);
                   });
  return results;
}

}  // namespace polyrep
