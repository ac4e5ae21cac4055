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

#ifndef ROCDP_COMPOSITION_H_
#define ROCDP_COMPOSITION_H_

#include <vector>

#include "rocdp/trade_off.h"

namespace rocdp {

// Effective single-release parameters of a homogeneous composition: the
// sufficient statistic of N rounds is the per-round average, which sees the
// same shift against noise of variance noise_variance / N.
struct ComposedParams {
  MechanismParams base;
  double lambda_comp = 0.0;          // Noncentrality N * sensitivity^2 / noise_variance.
  double noise_variance_comp = 0.0;  // noise_variance / rounds.
};

struct GdpParam {
  double mu = 0.0;
};

ComposedParams ComposeHomogeneous(const MechanismParams& params);

// Composes releases that all share (sensitivity, noise_variance, dim) by
// summing their rounds. Throws std::invalid_argument on an empty list or on
// mixed parameters, which have no closed-form GLRT composition.
ComposedParams ComposeHeterogeneous(const std::vector<MechanismParams>& releases);

// Gaussian trade-off parameter of the many-round central limit:
// mu = lambda_comp * sqrt(1 / (2 dim)).
GdpParam AsymptoticGdpMu(const MechanismParams& params);

// Central-limit approximation of the composed GLRT ROC kept in the exact
// pre-limit form, with psi = lambda_comp / dim.
double AsymptoticRocExactClt(const MechanismParams& params, double x);

// Gaussian trade-off curve at the limiting mu: the NPO ROC of a unit-variance
// mechanism with sensitivity mu.
double AsymptoticRocGdp(const MechanismParams& params, double x);

RocCurve MakeAsymptoticGdpCurve(const MechanismParams& params);

}  // namespace rocdp

#endif  // ROCDP_COMPOSITION_H_
