// Copyright 2026 The rocdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROCDP_CONVERSION_H_
#define ROCDP_CONVERSION_H_

#include <functional>
#include <stdexcept>
#include <vector>

#include "rocdp/trade_off.h"

namespace rocdp {

// Thrown when a root or tangency search cannot bracket a sign change.
class BracketError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Central finite difference with one-sided fallback within one step of the
// ends of [0, 1]. Step max(x, 1e-8) * cbrt(machine epsilon). Throws
// std::domain_error at the exact boundaries, where no interior neighborhood
// exists.
double NumericalDerivative(const std::function<double(double)>& f, double x);
double NumericalDerivative(const RocCurve& curve, double x);

// Bisection with secant acceleration. Requires f(lo) and f(hi) to differ in
// sign, else throws BracketError. Converges to |hi - lo| <= tol.
double FindRoot(const std::function<double(double)>& f, double lo, double hi, double tol);

struct ProfilePoint {
  double epsilon = 0.0;
  double delta = 0.0;
};

struct DeltaValue {
  double delta = 0.0;
  // True when the result was clamped to 0 because it fell below 1e-15, the
  // resolution floor of the conjugation.
  bool zero_floored = false;
};

struct EpsilonValue {
  double epsilon = 0.0;
  // True when delta(0) is already 0, so every epsilon >= 0 satisfies the
  // target and 0 is exact rather than a numerical floor.
  bool delta_identically_zero = false;
};

// Privacy profile of a symmetric trade-off curve by Legendre-Fenchel
// conjugation: delta(eps) = sup_x [curve(x) - e^eps x].
class PrivacyProfile {
 public:
  // Accepts symmetric concave curves: kSymmetrized, kNpo, kAsymptoticGdp.
  // Throws std::invalid_argument for other kinds or when a concavity spot
  // check fails.
  explicit PrivacyProfile(RocCurve source);

  // Supremum of curve(x) - e^eps x. The supremum sits where the curve slope
  // equals e^eps; slopes are searched over x in [1e-280, 1 - 1e-12]. Values
  // below 1e-15 report as exactly 0 with zero_floored set.
  DeltaValue DeltaAtEpsilon(double epsilon) const;

  // Smallest epsilon in [0, 50] with delta(epsilon) <= delta. Throws
  // std::range_error when even epsilon = 50 leaves delta(50) above the
  // target.
  EpsilonValue EpsilonAtDelta(double delta) const;

  // Profile sampled at n >= 2 points spaced uniformly in log(1 + eps)
  // between eps_min and eps_max inclusive, eps_min < eps_max. Deltas are
  // monotone non-increasing by construction.
  std::vector<ProfilePoint> Grid(double eps_min, double eps_max, int n) const;

  const RocCurve& source() const { return source_; }

 private:
  RocCurve source_;
};

// Closed-form profile of the mu-Gaussian trade-off curve, used as an oracle
// for the conjugation path.
double AnalyticGaussianProfileDelta(double mu, double epsilon);

}  // namespace rocdp

#endif  // ROCDP_CONVERSION_H_
