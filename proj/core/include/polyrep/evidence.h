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

// Positive and negative evidence from the overlap geometry of two context
// representations A, B and the original query Q, each taken as a term set.

#ifndef POLYREP_EVIDENCE_H_
#define POLYREP_EVIDENCE_H_

#include <string_view>

#include "polyrep/opinion.h"
#include "polyrep/text_prep.h"

namespace polyrep {

// How A's positive evidence under consensus is read from the A∩B and A∩Q
// regions: their union (default) or their intersection A∩B∩Q.
enum class PositiveRule { kUnion, kIntersection };

std::string_view ToString(PositiveRule rule);
// "union" or "intersection". Throws InvalidArgument.
PositiveRule ParsePositiveRule(std::string_view text);

struct EvidencePair {
  EvidenceCounts for_a;
  EvidenceCounts for_b;

  friend bool operator==(const EvidencePair&, const EvidencePair&) = default;
};

// Positive:
//   kUnion:        r_A = |(A∩B) ∪ (A∩Q)|, r_B = |(A∩B) ∪ (B∩Q)|
//   kIntersection: r_A = r_B = |A∩B∩Q|
// Negative (both rules): s_A = |A \ (B ∪ Q)|, s_B = |B \ (A ∪ Q)|.
EvidencePair ConsensusEvidence(const TermSet& a, const TermSet& b,
                               const TermSet& q,
                               PositiveRule rule = PositiveRule::kUnion);

// r_A = r_B = |A∩B|; negatives as for consensus.
EvidencePair RecommendationEvidence(const TermSet& a, const TermSet& b,
                                    const TermSet& q);

}  // namespace polyrep

#endif  // POLYREP_EVIDENCE_H_
