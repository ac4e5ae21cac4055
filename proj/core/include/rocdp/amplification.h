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

#ifndef ROCDP_AMPLIFICATION_H_
#define ROCDP_AMPLIFICATION_H_

#include <vector>

#include "rocdp/conversion.h"

namespace rocdp {

// Poisson subsampling rate. Valid range (0, 1].
struct SubsamplingConfig {
  double gamma = 1.0;
};

// Privacy amplification by Poisson subsampling at rate gamma:
// eps' = log(1 + gamma (e^eps - 1)), delta' = gamma delta.
// Throws std::invalid_argument unless gamma lies in (0, 1].
ProfilePoint AmplifyPoint(const ProfilePoint& point, double gamma);

std::vector<ProfilePoint> AmplifyProfile(const std::vector<ProfilePoint>& grid, double gamma);

}  // namespace rocdp

#endif  // ROCDP_AMPLIFICATION_H_
