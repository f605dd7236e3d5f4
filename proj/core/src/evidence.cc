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

#include "polyrep/evidence.h"

#include <cstdint>
#include <string>

#include "polyrep/error.h"

namespace polyrep {
namespace {

// |x \ (y ∪ z)|
std::uint64_t CountOnlyIn(const TermSet& x, const TermSet& y, const TermSet& z) {
  std::uint64_t n = 0;
  for (const auto& t : x) {
    if (!y.Contains(t) && !z.Contains(t)) ++n;
  }
  return n;
}

// |(x∩y) ∪ (x∩z)| = |x ∩ (y ∪ z)|
std::uint64_t CountInEither(const TermSet& x, const TermSet& y, const TermSet& z) {
  return x.size() - CountOnlyIn(x, y, z);
}

std::uint64_t CountInBoth(const TermSet& x, const TermSet& y, const TermSet& z) {
  std::uint64_t n = 0;
  for (const auto& t : x) {
    if (y.Contains(t) && z.Contains(t)) ++n;
  }
  return n;
}

std::uint64_t CountShared(const TermSet& x, const TermSet& y) {
  std::uint64_t n = 0;
  for (const auto& t : x) {
    if (y.Contains(t)) ++n;
  }
  return n;
}

}  // namespace

std::string_view ToString(PositiveRule rule) {
  return rule == PositiveRule::kUnion ? "union" : "intersection";
}

PositiveRule ParsePositiveRule(std::string_view text) {
  if (text == "union") return PositiveRule::kUnion;
  if (text == "intersection") return PositiveRule::kIntersection;
  throw InvalidArgument("unknown positive rule '" + std::string(text) +
                        "' (expected union or intersection)");
}

EvidencePair ConsensusEvidence(const TermSet& a, const TermSet& b,
                               const TermSet& q, PositiveRule rule) {
  EvidencePair ev;
  ev.for_a.negative = CountOnlyIn(a, b, q);
  ev.for_b.negative = CountOnlyIn(b, a, q);
  if (rule == PositiveRule::kUnion) {
    ev.for_a.positive = CountInEither(a, b, q);
    // (A∩B) ∪ (B∩Q) = B ∩ (A ∪ Q)
    ev.for_b.positive = CountInEither(b, a, q);
  } else {
    const std::uint64_t shared = CountInBoth(a, b, q);
    ev.for_a.positive = shared;
    ev.for_b.positive = shared;
  }
  return ev;
}

EvidencePair RecommendationEvidence(const TermSet& a, const TermSet& b,
                                    const TermSet& q) {
  EvidencePair ev;
  const std::uint64_t shared = CountShared(a, b);
  ev.for_a = {shared, CountOnlyIn(a, b, q)};
  ev.for_b = {shared, CountOnlyIn(b, a, q)};
  return ev;
}

}  // namespace polyrep
