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

// Spearman rank correlation and its use to relate fused opinion components to
// per-query retrieval effectiveness.

#ifndef POLYREP_CORRELATION_H_
#define POLYREP_CORRELATION_H_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyrep/metrics.h"
#include "polyrep/polyrep.h"

namespace polyrep {

// 1-based ranks; tied values share the mean of the ranks they span.
std::vector<double> FractionalRanks(std::span<const double> values);

// Pearson correlation of fractional ranks. Throws InvalidArgument when the
// lengths differ, fewer than two values are given, or either input is
// constant.
double Spearman(std::span<const double> xs, std::span<const double> ys);

enum class Component { kBelief, kUncertainty };
std::string_view ToString(Component component);

// (metric value, component value) per topic, in topic-id order. Throws
// InvalidArgument listing topic ids present on one side only.
std::vector<std::pair<double, double>> PlotPoints(
    const CombinationResult& result, const MetricReport& metrics,
    Component component, Metric metric);

double CorrelateComponents(const CombinationResult& result,
                           const MetricReport& metrics, Component component,
                           Metric metric);

// Two-column `x y` rows, six decimals.
std::string PlotDataText(std::span<const std::pair<double, double>> points);

}  // namespace polyrep

#endif  // POLYREP_CORRELATION_H_
