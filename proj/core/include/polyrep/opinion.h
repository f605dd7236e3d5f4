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

// Binomial subjective-logic opinions and the two fusion operators used to
// combine query context representations.
//
// An opinion (b, d, u, a) holds belief, disbelief and uncertainty masses that
// sum to one, plus a base rate a used when projecting to a probability.

#ifndef POLYREP_OPINION_H_
#define POLYREP_OPINION_H_

#include <cstdint>
#include <ostream>

namespace polyrep {

// Tolerance used for additivity checks and opinion equality.
inline constexpr double kOpinionTolerance = 1e-9;

// Positive (r) and negative (s) evidence counts.
struct EvidenceCounts {
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;

  friend bool operator==(const EvidenceCounts&,
                         const EvidenceCounts&) = default;
};

std::ostream& operator<<(std::ostream& os, const EvidenceCounts& ev);

class Opinion {
 public:
  // Vacuous opinion with base rate 0.5.
  constexpr Opinion() = default;

  // Validating factory. Throws InvalidOpinion if a component is not finite,
  // lies outside [0,1], or b + d + u differs from 1 by more than 1e-9.
  static Opinion Make(double belief, double disbelief, double uncertainty,
                      double base_rate);

  constexpr double belief() const { return belief_; }
  constexpr double disbelief() const { return disbelief_; }
  constexpr double uncertainty() const { return uncertainty_; }
  constexpr double base_rate() const { return base_rate_; }

  // Componentwise comparison within `tolerance`.
  bool ApproxEquals(const Opinion& other,
                    double tolerance = kOpinionTolerance) const;

  friend bool operator==(const Opinion&, const Opinion&) = default;

 private:
  constexpr Opinion(double b, double d, double u, double a)
      : belief_(b), disbelief_(d), uncertainty_(u), base_rate_(a) {}

  friend Opinion FromEvidence(const EvidenceCounts&, double);
  friend Opinion Consensus(const Opinion&, const Opinion&);
  friend Opinion Recommendation(const Opinion&, const Opinion&);

  double belief_ = 0.0;
  double disbelief_ = 0.0;
  double uncertainty_ = 1.0;
  double base_rate_ = 0.5;
};

std::ostream& operator<<(std::ostream& os, const Opinion& o);

// b = r/(r+s+2), d = s/(r+s+2), u = 2/(r+s+2). No evidence gives the vacuous
// opinion. Throws InvalidOpinion if base_rate is outside [0,1].
Opinion FromEvidence(const EvidenceCounts& evidence, double base_rate);

// Probability expectation E = b + a*u.
double Expectation(const Opinion& o);

// Consensus of two independent opinions. Commutative and associative. The
// result keeps the base rate of `a`. Throws DogmaticConflict when both inputs
// have zero uncertainty.
Opinion Consensus(const Opinion& a, const Opinion& b);

// Recommendation: `trust` is A's opinion about B as a recommender, `claim` is
// B's opinion about the proposition. Associative, not commutative. The result
// keeps the base rate of `claim`.
Opinion Recommendation(const Opinion& trust, const Opinion& claim);

}  // namespace polyrep

#endif  // POLYREP_OPINION_H_
