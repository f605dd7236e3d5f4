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

#include "polyrep/metrics.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "polyrep/error.h"
#include "polyrep/report.h"

namespace polyrep {
namespace {

int GradeOf(const Qrels::Judgments& j, std::string_view docid) {
  auto it = j.find(docid);
  return it == j.end() ? 0 : it->second;
}

std::size_t CountRelevant(const Qrels::Judgments& j) {
  return static_cast<std::size_t>(std::count_if(
      j.begin(), j.end(), [](const auto& kv) { return kv.second > 0; }));
}

double Dcg(const std::vector<int>& gains, std::size_t k) {
  double dcg = 0.0;
  const std::size_t n = std::min(k, gains.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (gains[i] > 0) dcg += gains[i] / std::log2(static_cast<double>(i) + 2.0);
  }
  return dcg;
}

}  // namespace

double AveragePrecision(const RunList& run, const Qrels& qrels,
                        std::string_view qid) {
  const auto& judged = qrels.For(qid);
  const std::size_t relevant = CountRelevant(judged);
  if (relevant == 0) return 0.0;
  double sum = 0.0;
  std::size_t hits = 0;
  std::size_t rank = 0;
  for (const ScoredDoc& d : run.Ranked(qid)) {
    ++rank;
    if (GradeOf(judged, d.docid) > 0) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(rank);
    }
  }
  return sum / static_cast<double>(relevant);
}

double NdcgAt(const RunList& run, const Qrels& qrels, std::string_view qid,
              std::size_t k) {
  const auto& judged = qrels.For(qid);
  std::vector<int> ideal;
  for (const auto& [_, grade] : judged) {
    if (grade > 0) ideal.push_back(grade);
  }
  std::sort(ideal.begin(), ideal.end(), std::greater<>());
  const double idcg = Dcg(ideal, k);
  if (idcg <= 0.0) return 0.0;

  std::vector<int> gains;
  for (const ScoredDoc& d : run.Ranked(qid)) {
    if (gains.size() == k) break;
    gains.push_back(GradeOf(judged, d.docid));
  }
  return Dcg(gains, k) / idcg;
}

double PrecisionAt(const RunList& run, const Qrels& qrels,
                   std::string_view qid, std::size_t k) {
  if (k == 0) return 0.0;
  const auto& judged = qrels.For(qid);
  std::size_t hits = 0;
  std::size_t rank = 0;
  for (const ScoredDoc& d : run.Ranked(qid)) {
    if (++rank > k) break;
    if (GradeOf(judged, d.docid) > 0) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(k);
}

double ReciprocalRank(const RunList& run, const Qrels& qrels,
                      std::string_view qid) {
  const auto& judged = qrels.For(qid);
  std::size_t rank = 0;
  for (const ScoredDoc& d : run.Ranked(qid)) {
    ++rank;
    if (GradeOf(judged, d.docid) > 0) return 1.0 / static_cast<double>(rank);
  }
  return 0.0;
}

double Bpref(const RunList& run, const Qrels& qrels, std::string_view qid) {
  const auto& judged = qrels.For(qid);
  const std::size_t relevant = CountRelevant(judged);
  if (relevant == 0) return 0.0;
  const std::size_t nonrelevant = judged.size() - relevant;
  const std::size_t denom = std::min(relevant, nonrelevant);

  double sum = 0.0;
  std::size_t nonrel_above = 0;
  for (const ScoredDoc& d : run.Ranked(qid)) {
    auto it = judged.find(d.docid);
    if (it == judged.end()) continue;
    if (it->second > 0) {
      if (nonrel_above == 0) {
        sum += 1.0;
      } else {
        sum += 1.0 - static_cast<double>(std::min(nonrel_above, relevant)) /
                         static_cast<double>(denom);
      }
    } else {
      ++nonrel_above;
    }
  }
  return sum / static_cast<double>(relevant);
}

std::string_view ToString(Metric metric) {
  switch (metric) {
    case Metric::kMap: return "map";
    case Metric::kNdcg: return "ndcg";
    case Metric::kBpref: return "bpref";
    case Metric::kP10: return "p10";
    case Metric::kNdcg10: return "ndcg10";
    case Metric::kMrr: return "mrr";
  }
  return "?";
}

Metric ParseMetric(std::string_view text) {
  for (Metric m : kAllMetrics) {
    if (ToString(m) == text) return m;
  }
  throw InvalidArgument("unknown metric '" + std::string(text) + "'");
}

double Score(Metric metric, const RunList& run, const Qrels& qrels,
             std::string_view qid) {
  switch (metric) {
    case Metric::kMap: return AveragePrecision(run, qrels, qid);
    case Metric::kNdcg: return NdcgAt(run, qrels, qid, kMaxRunDepth);
    case Metric::kBpref: return Bpref(run, qrels, qid);
    case Metric::kP10: return PrecisionAt(run, qrels, qid, 10);
    case Metric::kNdcg10: return NdcgAt(run, qrels, qid, 10);
    case Metric::kMrr: return ReciprocalRank(run, qrels, qid);
  }
  return 0.0;
}

double MetricReport::Get(std::string_view qid, Metric metric) const {
  auto it = per_query.find(qid);
  if (it == per_query.end()) {
    throw InvalidArgument("query '" + std::string(qid) + "' not in metric report");
  }
  return it->second[static_cast<std::size_t>(metric)];
}

MetricReport Evaluate(const RunList& run, const Qrels& qrels) {
  const std::vector<std::string> qids = qrels.QueryIds();
  if (!run.empty()) {
    const bool overlap = std::any_of(qids.begin(), qids.end(), [&](const auto& q) {
      return !run.Ranked(q).empty();
    });
    if (!overlap) {
      throw InvalidArgument("run and judgments share no query id");
    }
  }
  MetricReport report;
  for (const std::string& qid : qids) {
    MetricValues values{};
    for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
      values[m] = Score(kAllMetrics[m], run, qrels, qid);
      report.mean[m] += values[m];
    }
    report.per_query.emplace(qid, values);
  }
  if (!qids.empty()) {
    for (double& v : report.mean) v /= static_cast<double>(qids.size());
  }
  return report;
}

std::string MetricReportTsv(const MetricReport& report) {
  std::string out = "qid\tmetric\tvalue\n";
  auto row = [&](std::string_view qid, const MetricValues& values) {
    for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
      out.append(qid);
      out += '\t';
      out.append(ToString(kAllMetrics[m]));
      out += '\t';
      out += FormatFixed(values[m], 6);
      out += '\n';
    }
  };
  for (const auto& [qid, values] : report.per_query) row(qid, values);
  row("all", report.mean);
  return out;
}

std::string MetricReportJson(const MetricReport& report) {
  auto object = [](const MetricValues& values) {
    nlohmann::json o = nlohmann::json::object();
    for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
      o[std::string(ToString(kAllMetrics[m]))] = values[m];
    }
    return o;
  };
  nlohmann::json per_query = nlohmann::json::object();
  for (const auto& [qid, values] : report.per_query) per_query[qid] = object(values);
  nlohmann::json doc = {{"per_query", std::move(per_query)},
                        {"all", object(report.mean)}};
  return doc.dump(2, ' ', false, nlohmann::json::error_handler_t::replace) + "\n";
}

MetricReport ReadMetricReport(std::istream& in, std::string_view source) {
  const std::string src(source);
  MetricReport report;
  std::map<std::string, std::array<bool, kAllMetrics.size()>> present;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string qid, metric, value, extra;
    if (!(fields >> qid >> metric >> value) || (fields >> extra)) {
      throw ParseError(src, line_no, "expected `qid metric value`");
    }
    if (line_no == 1 && qid == "qid") continue;
    if (qid == "all") continue;
    Metric m;
    try {
      m = ParseMetric(metric);
    } catch (const InvalidArgument& e) {
      throw ParseError(src, line_no, e.what());
    }
    double v = 0.0;
    try {
      std::size_t used = 0;
      v = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ParseError(src, line_no, "value is not a number: " + value);
    }
    const auto idx = static_cast<std::size_t>(m);
    auto& seen = present[qid];
    if (seen[idx]) {
      throw ParseError(src, line_no, "repeated " + metric + " for query " + qid);
    }
    seen[idx] = true;
    report.per_query[qid][idx] = v;
  }
  for (const auto& [qid, seen] : present) {
    for (std::size_t m = 0; m < kAllMetrics.size(); ++m) {
      if (!seen[m]) {
        throw ParseError(src, line_no, "query " + qid + " lacks metric " +
                                           std::string(ToString(kAllMetrics[m])));
      }
    }
  }
  for (const auto& [_, values] : report.per_query) {
    for (std::size_t m = 0; m < values.size(); ++m) report.mean[m] += values[m];
  }
  if (!report.per_query.empty()) {
    for (double& v : report.mean) v /= static_cast<double>(report.per_query.size());
  }
  return report;
}

MetricReport ReadMetricReportFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open metric report: " + path);
  return ReadMetricReport(in, path);
}

}  // namespace polyrep
