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

#include "rocdp/composition.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rocdp/special_functions.h"

namespace rocdp {

ComposedParams ComposeHomogeneous(const MechanismParams& params) {
  ValidateParams(params);
  ComposedParams out;
  out.base = params;
  out.lambda_comp =
      params.rounds * params.sensitivity * params.sensitivity / params.noise_variance;
  out.noise_variance_comp = params.noise_variance / params.rounds;
  return out;
}

ComposedParams ComposeHeterogeneous(const std::vector<MechanismParams>& releases) {
  if (releases.empty()) {
    throw std::invalid_argument("ComposeHeterogeneous: release list is empty");
  }
  MechanismParams merged = releases.front();
  ValidateParams(merged);
  for (std::size_t i = 1; i < releases.size(); ++i) {
    const MechanismParams& r = releases[i];
    ValidateParams(r);
    if (r.sensitivity != merged.sensitivity || r.noise_variance != merged.noise_variance ||
        r.dim != merged.dim) {
      throw std::invalid_argument(
          "ComposeHeterogeneous: releases must share sensitivity, noise variance, and dimension");
    }
    merged.rounds += r.rounds;
  }
  return ComposeHomogeneous(merged);
}

GdpParam AsymptoticGdpMu(const MechanismParams& params) {
  const ComposedParams c = ComposeHomogeneous(params);
  return GdpParam{c.lambda_comp * std::sqrt(0.5 / params.dim)};
}

double AsymptoticRocExactClt(const MechanismParams& params, double x) {
  if (std::isnan(x) || x < 0 || x > 1) {
    throw std::domain_error("AsymptoticRocExactClt: argument must lie in [0, 1]");
  }
  if (x == 0) return 0.0;
  if (x == 1) return 1.0;
  const ComposedParams c = ComposeHomogeneous(params);
  if (c.lambda_comp == 0) return x;
  const double psi = c.lambda_comp / params.dim;
  const double shift = std::sqrt(0.5 * params.dim) * psi;
  return GaussianSf((GaussianSfInv(x) - shift) / std::sqrt(1.0 + 2.0 * psi));
}

double AsymptoticRocGdp(const MechanismParams& params, double x) {
  const double mu = AsymptoticGdpMu(params).mu;
  if (mu == 0) {
    if (std::isnan(x) || x < 0 || x > 1) {
      throw std::domain_error("AsymptoticRocGdp: argument must lie in [0, 1]");
    }
    return x;
  }
  return NpoRoc(mu, 1.0, x);
}

RocCurve MakeAsymptoticGdpCurve(const MechanismParams& params) {
  ValidateParams(params);
  const double mu = AsymptoticGdpMu(params).mu;
  if (mu == 0) {
    return RocCurve(
        CurveKind::kAsymptoticGdp, params, [](double x) { return x; },
        [](double) { return 1.0; });
  }
  auto eval = [params](double x) { return AsymptoticRocGdp(params, x); };
  auto slope = [mu](double x) {
    if (x <= 0) return std::numeric_limits<double>::infinity();
    if (x >= 1) return 0.0;
    return std::exp(mu * GaussianSfInv(x) - 0.5 * mu * mu);
  };
  return RocCurve(CurveKind::kAsymptoticGdp, params, eval, slope);
}

}  // namespace rocdp
