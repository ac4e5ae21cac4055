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

#include "rocdp/amplification.h"

#include <cmath>
#include <stdexcept>

namespace rocdp {

ProfilePoint AmplifyPoint(const ProfilePoint& point, double gamma) {
  if (!(gamma > 0) || gamma > 1 || !std::isfinite(gamma)) {
    throw std::invalid_argument("AmplifyPoint: gamma must lie in (0, 1]");
  }
  if (std::isnan(point.epsilon) || point.epsilon < 0) {
    throw std::domain_error("AmplifyPoint: epsilon must be >= 0");
  }
  if (std::isnan(point.delta) || point.delta < 0 || point.delta > 1) {
    throw std::domain_error("AmplifyPoint: delta must lie in [0, 1]");
  }
  // gamma = 1 is the identity; returning the input keeps it exact.
  if (gamma == 1.0) return point;
  return {std::log1p(gamma * std::expm1(point.epsilon)), gamma * point.delta};
}

std::vector<ProfilePoint> AmplifyProfile(const std::vector<ProfilePoint>& grid, double gamma) {
  std::vector<ProfilePoint> out;
  out.reserve(grid.size());
  for (const ProfilePoint& p : grid) {
    out.push_back(AmplifyPoint(p, gamma));
  }
  return out;
}

}  // namespace rocdp
