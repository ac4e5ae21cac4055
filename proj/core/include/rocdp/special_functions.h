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

#ifndef ROCDP_SPECIAL_FUNCTIONS_H_
#define ROCDP_SPECIAL_FUNCTIONS_H_

namespace rocdp {

// The law of s * X where X is noncentral chi-squared with dof degrees of
// freedom and noncentrality lambda. scale carries variance units: the
// squared norm of a d-dimensional Gaussian with per-coordinate variance v
// and mean of norm m follows ScaledChi2{d, m * m / v, v}.
//
// All functions taking a ScaledChi2 throw std::domain_error unless
// dof >= 1, noncentrality >= 0 and scale > 0.
struct ScaledChi2 {
  int dof = 1;
  double noncentrality = 0.0;
  double scale = 1.0;
};

// Regularized lower incomplete gamma function P(a, x), strictly increasing
// in x with P(a, 0) = 0. Requires a > 0 and x >= 0.
double RegularizedGammaP(double a, double x);

// Regularized upper incomplete gamma function Q(a, x) = 1 - P(a, x),
// computed directly so the right tail keeps relative precision.
double RegularizedGammaQ(double a, double x);

// Standard normal survival function Q(k) = P(Z > k) = erfc(k / sqrt(2)) / 2.
// Results below roughly 1e-308 saturate to 0.
double GaussianSf(double k);

// log Q(k), finite for every finite k; switches to an asymptotic expansion
// of erfc in the far right tail where erfc itself underflows.
double GaussianLogSf(double k);

// Standard normal density.
double GaussianPdf(double k);

// Inverse of GaussianSf on (0, 1). p = 0 and p = 1 return +infinity and
// -infinity respectively; values outside [0, 1] throw std::domain_error.
double GaussianSfInv(double p);

// Survival function P(s X > x) of the scaled noncentral chi-squared law.
// Noncentral values use a Poisson mixture of central tails summed outward
// from the mode of the mixture weights.
double Chi2Sf(const ScaledChi2& dist, double x);

// Distribution function P(s X <= x), computed through the lower-tail
// series rather than as 1 - Chi2Sf so the left tail keeps precision.
double Chi2Cdf(const ScaledChi2& dist, double x);

// Inverse survival function: the x with Chi2Sf(dist, x) = p for
// p in (0, 1]; p = 1 maps to 0. Bracketed bisection with Newton polish.
double Chi2SfInv(const ScaledChi2& dist, double p);

// Inverse distribution function for p in [0, 1); p = 0 maps to 0.
double Chi2CdfInv(const ScaledChi2& dist, double p);

// log density of the scaled noncentral chi-squared law at x > 0.
double Chi2LogPdf(const ScaledChi2& dist, double x);

// Marcum Q-function of order 1/2: Q_{1/2}(a, b) = Q(b - a) + Q(b + a),
// the survival function of the norm of a shifted 1-d Gaussian; equals
// Chi2Sf({1, a * a, 1}, b * b).
double MarcumQHalf(double a, double b);

}  // namespace rocdp

#endif  // ROCDP_SPECIAL_FUNCTIONS_H_
