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

#include "polyrep/opinion.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "polyrep/error.h"

namespace polyrep {
namespace {

bool InUnitInterval(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

void CheckBaseRate(double a) {
  if (!InUnitInterval(a)) {
    std::ostringstream msg;
    msg << "base rate " << a << " outside [0,1]";
    throw InvalidOpinion(msg.str());
  }
}

// Fused components can drift past the unit interval by one ulp.
double Clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

Opinion Opinion::Make(double belief, double disbelief, double uncertainty,
                      double base_rate) {
  std::ostringstream msg;
  if (!InUnitInterval(belief) || !InUnitInterval(disbelief) ||
      !InUnitInterval(uncertainty) || !InUnitInterval(base_rate)) {
    msg << "opinion component outside [0,1]: (" << belief << ", " << disbelief
        << ", " << uncertainty << ", " << base_rate << ")";
    throw InvalidOpinion(msg.str());
  }
  const double sum = belief + disbelief + uncertainty;
  if (std::abs(sum - 1.0) > kOpinionTolerance) {
    msg << "belief + disbelief + uncertainty = " << sum << ", expected 1";
    throw InvalidOpinion(msg.str());
  }
  return Opinion(belief, disbelief, uncertainty, base_rate);
}

bool Opinion::ApproxEquals(const Opinion& other, double tolerance) const {
  return std::abs(belief_ - other.belief_) <= tolerance &&
         std::abs(disbelief_ - other.disbelief_) <= tolerance &&
         std::abs(uncertainty_ - other.uncertainty_) <= tolerance &&
         std::abs(base_rate_ - other.base_rate_) <= tolerance;
}

std::ostream& operator<<(std::ostream& os, const Opinion& o) {
  return os << "(" << o.belief() << ", " << o.disbelief() << ", "
            << o.uncertainty() << ", " << o.base_rate() << ")";
}

std::ostream& operator<<(std::ostream& os, const EvidenceCounts& ev) {
  return os << "(r=" << ev.positive << ", s=" << ev.negative << ")";
}

Opinion FromEvidence(const EvidenceCounts& evidence, double base_rate) {
  CheckBaseRate(base_rate);
  const double r = static_cast<double>(evidence.positive);
  const double s = static_cast<double>(evidence.negative);
  const double total = r + s + 2.0;
  // Each mass is the correctly rounded ratio; their sum is 1 within 3 ulp.
  return Opinion(r / total, s / total, 2.0 / total, base_rate);
}

double Expectation(const Opinion& o) {
  return Clamp01(o.belief() + o.base_rate() * o.uncertainty());
}

Opinion Consensus(const Opinion& a, const Opinion& b) {
  const double ua = a.uncertainty();
  const double ub = b.uncertainty();
  const double kappa = ua + ub - ua * ub;
  if (kappa <= 0.0) {
    throw DogmaticConflict(
        "consensus of two opinions with zero uncertainty is undefined");
  }
  const double belief = (a.belief() * ub + b.belief() * ua) / kappa;
  const double disbelief = (a.disbelief() * ub + b.disbelief() * ua) / kappa;
  const double uncertainty = (ua * ub) / kappa;
  return Opinion(Clamp01(belief), Clamp01(disbelief), Clamp01(uncertainty),
                 a.base_rate());
}

Opinion Recommendation(const Opinion& trust, const Opinion& claim) {
  const double belief = trust.belief() * claim.belief();
  const double disbelief = trust.belief() * claim.disbelief();
  const double uncertainty =
      trust.disbelief() + trust.uncertainty() + trust.belief() * claim.uncertainty();
  return Opinion(Clamp01(belief), Clamp01(disbelief), Clamp01(uncertainty),
                 claim.base_rate());
}

}  // namespace polyrep
