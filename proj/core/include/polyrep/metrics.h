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

// Retrieval effectiveness measures over graded judgments. Binary measures
// treat grade > 0 as relevant; NDCG uses the grade itself as gain.

#ifndef POLYREP_METRICS_H_
#define POLYREP_METRICS_H_

#include <array>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polyrep/qrels_run.h"

namespace polyrep {

double AveragePrecision(const RunList& run, const Qrels& qrels,
                        std::string_view qid);

// DCG@k / IDCG@k with gain = grade and discount log2(rank + 1). Unjudged
// documents gain 0. Zero when the query has no document with grade > 0.
double NdcgAt(const RunList& run, const Qrels& qrels, std::string_view qid,
              std::size_t k);

// Relevant documents in the top k over k; a short ranking counts the missing
// positions as non-relevant.
double PrecisionAt(const RunList& run, const Qrels& qrels,
                   std::string_view qid, std::size_t k = 10);

double ReciprocalRank(const RunList& run, const Qrels& qrels,
                      std::string_view qid);

// Judged-only binary preference. Unjudged retrieved documents are skipped.
double Bpref(const RunList& run, const Qrels& qrels, std::string_view qid);

enum class Metric { kMap, kNdcg, kBpref, kP10, kNdcg10, kMrr };

inline constexpr std::array kAllMetrics = {Metric::kMap,  Metric::kNdcg,
                                           Metric::kBpref, Metric::kP10,
                                           Metric::kNdcg10, Metric::kMrr};

// "map", "ndcg", "bpref", "p10", "ndcg10", "mrr".
std::string_view ToString(Metric metric);
Metric ParseMetric(std::string_view text);

double Score(Metric metric, const RunList& run, const Qrels& qrels,
             std::string_view qid);

using MetricValues = std::array<double, kAllMetrics.size()>;

struct MetricReport {
  // Query id -> values indexed like kAllMetrics.
  std::map<std::string, MetricValues, std::less<>> per_query;
  MetricValues mean{};

  double Get(std::string_view qid, Metric metric) const;
};

// Scores every query in the judgments; queries without relevant documents
// score 0 and count toward the means. Throws InvalidArgument if the run is
// non-empty but shares no query id with the judgments.
MetricReport Evaluate(const RunList& run, const Qrels& qrels);

// Header `qid metric value`, per-query rows in query order, then `all`
// rows. Six decimals.
std::string MetricReportTsv(const MetricReport& report);
std::string MetricReportJson(const MetricReport& report);

// Reads the TSV written by MetricReportTsv, recomputing the means from the
// per-query rows.
MetricReport ReadMetricReport(std::istream& in,
                              std::string_view source = "<metrics>");
MetricReport ReadMetricReportFile(const std::string& path);

}  // namespace polyrep

#endif  // POLYREP_METRICS_H_
