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

#include <set>

#include "polyrep/correlation.h"
#include "polyrep/error.h"
#include "polyrep/report.h"

namespace polyrep {

std::string_view ToString(Component component) {
  return component == Component::kBelief ? "belief" : "uncertainty";
}

std::vector<std::pair<double, double>> PlotPoints(
    const CombinationResult& result, const MetricReport& metrics,
    Component component, Metric metric) {
  std::map<std::string_view, const TopicOutcome*> topics;
  for (const auto& t : result.per_topic) topics.emplace(t.topic_id, &t);

  std::vector<std::string_view> only_result, only_metrics;
  for (const auto& [id, _] : topics) {
    if (!metrics.per_query.contains(id)) only_result.push_back(id);
  }
  for (const auto& [id, _] : metrics.per_query) {
    if (!topics.contains(id)) only_metrics.push_back(id);
  }
  if (!only_result.empty() || !only_metrics.empty()) {
    auto join = [](const std::vector<std::string_view>& ids) {
      std::string s;
      for (auto id : ids) {
        if (!s.empty()) s += ", ";
        s.append(id);
      }
      return s.empty() ? std::string("none") : s;
    };
    throw InvalidArgument("topic ids do not align; missing from metrics: " +
                          join(only_result) +
                          "; missing from combination: " + join(only_metrics));
  }

  std::vector<std::pair<double, double>> points;
  points.reserve(topics.size());
  for (const auto& [id, outcome] : topics) {
    const double y = component == Component::kBelief
                         ? outcome->opinion.belief()
                         : outcome->opinion.uncertainty();
    points.emplace_back(metrics.Get(id, metric), y);
  }
  return points;
}

double CorrelateComponents(const CombinationResult& result,
                           const MetricReport& metrics, Component component,
                           Metric metric) {
  const auto points = PlotPoints(result, metrics, component, metric);
  std::vector<double> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const auto& [x, y] : points) {
    xs.push_back(x);
    ys.push_back(y);
  }
  return Spearman(xs, ys);
}

std::string PlotDataText(std::span<const std::pair<double, double>> points) {
  std::string out;
  for (const auto& [x, y] : points) {
    out += FormatFixed(x, 6);
    out += ' ';
    out += FormatFixed(y, 6);
    out += '\n';
  }
  return out;
}

}  // namespace polyrep
