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

// Text renderings of pipeline outputs. TSV is the primary interchange; the
// JSON ("obj") forms carry the same content for programmatic consumers.

#ifndef POLYREP_REPORT_H_
#define POLYREP_REPORT_H_

#include <span>
#include <string>
#include <vector>

#include "polyrep/polyrep.h"
#include "polyrep/text_prep.h"
#include "polyrep/topic.h"

namespace polyrep {

// printf("%.*f") in the C locale.
std::string FormatFixed(double value, int decimals);

// Columns: level operator rep_a rep_b order probability best. Probabilities
// have four decimals. `best` is 1 on the row holding the maximum of its
// column (consensus, A⊗B or B⊗A) within its level, else 0. Consensus rows
// print "-" for order.
std::string PolyrepTableTsv(std::span<const CombinationResult> results);
std::string PolyrepTableJson(std::span<const CombinationResult> results);

// One row per (combination, topic): level operator rep_a rep_b order topic
// r_a s_a r_b s_b belief disbelief uncertainty expectation.
std::string PerTopicTsv(std::span<const CombinationResult> results);

// One row per (topic, representation, level): the sorted term set,
// space-separated.
std::string PrepDumpTsv(std::span<const Topic> topics,
                        std::span<const PrepLevel> levels);
std::string PrepDumpJson(std::span<const Topic> topics,
                         std::span<const PrepLevel> levels);

}  // namespace polyrep

#endif  // POLYREP_REPORT_H_
