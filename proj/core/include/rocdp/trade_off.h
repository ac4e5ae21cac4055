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

#ifndef ROCDP_TRADE_OFF_H_
#define ROCDP_TRADE_OFF_H_

#include <functional>
#include <string>

namespace rocdp {

// Parameters of a d-dimensional Gaussian mechanism released over a number of
// independent rounds. The adversary distinguishes a shift of norm
// `sensitivity` against isotropic noise of variance `noise_variance`.
struct MechanismParams {
  double sensitivity = 1.0;
  double noise_variance = 1.0;
  int dim = 1;
  int rounds = 1;
};

// Throws std::invalid_argument unless sensitivity >= 0, noise_variance > 0,
// dim >= 1, and rounds >= 1, all finite.
void ValidateParams(const MechanismParams& params);

enum class CurveKind {
  kGlrtR,         // Exact GLRT ROC, null hypothesis at the origin.
  kGlrtRPrime,    // Exact GLRT ROC, null hypothesis at the shift.
  kGlrtD1Closed,  // One-dimensional closed form of the GLRT ROC.
  kNpo,           // Neyman-Pearson oracle ROC (shift direction known).
  kSymmetrized,   // Symmetric concave envelope of the two GLRT branches.
  kAsymptoticGdp,  // Gaussian trade-off curve from the many-round limit.
};

// Short lowercase identifier such as "glrt-r" or "npo".
std::string CurveKindName(CurveKind kind);

// A trade-off curve: detection probability as a function of false-alarm
// probability, with an optional analytic slope. Instances are immutable and
// cheap to copy.
class RocCurve {
 public:
  using EvalFn = std::function<double(double)>;

  RocCurve(CurveKind kind, const MechanismParams& params, EvalFn eval, EvalFn slope = nullptr);

  // Detection probability at false-alarm probability x in [0, 1].
  // Throws std::domain_error outside the unit interval.
  double Eval(double x) const;

  // Derivative of Eval at x. Uses the analytic slope when available and a
  // central finite difference otherwise.
  double Slope(double x) const;

  bool has_analytic_slope() const { return static_cast<bool>(slope_); }
  CurveKind kind() const { return kind_; }
  const MechanismParams& params() const { return params_; }

 private:
  CurveKind kind_;
  MechanismParams params_;
  EvalFn eval_;
  EvalFn slope_;
};

// Exact GLRT detection probability at false-alarm probability x, null at the
// origin. Rounds compose into a single test on the averaged release.
double GlrtRoc(const MechanismParams& params, double x);

// Same test with the hypotheses swapped: null at the shift.
double GlrtRocPrime(const MechanismParams& params, double x);

// Closed form of GlrtRoc for dim == 1, written entirely in Gaussian tails.
double GlrtRocD1Closed(double sensitivity, double noise_variance, double x);

// Neyman-Pearson oracle: the adversary knows the shift direction, so the
// optimal test is a one-dimensional Gaussian mean test.
double NpoRoc(double sensitivity, double noise_variance, double x);

RocCurve MakeGlrtCurve(const MechanismParams& params);
RocCurve MakeGlrtPrimeCurve(const MechanismParams& params);
// Requires params.dim == 1.
RocCurve MakeGlrtD1ClosedCurve(const MechanismParams& params);
RocCurve MakeNpoCurve(const MechanismParams& params);

// Symmetric concave upper envelope of the two GLRT branches: follows r up to
// its unit-slope tangency, crosses on the slope-one chord, and continues on
// r_prime. Falls back to a sampled concave hull if tangency search fails.
// Both inputs must share the same parameters.
RocCurve Symmetrize(const RocCurve& r, const RocCurve& r_prime);

}  // namespace rocdp

#endif  // ROCDP_TRADE_OFF_H_
