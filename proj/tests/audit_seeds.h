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

#ifndef ROCDP_TESTS_AUDIT_SEEDS_H_
#define ROCDP_TESTS_AUDIT_SEEDS_H_

#include <cstdint>

// Pinned RNG seeds for Monte Carlo audit tests. A fair-coin audit with 1000
// trials splits roughly 500/500, so the sup-distance of a single run is itself
// a random variable with a long tail; these seeds were fixed once so the
// checks below are deterministic, and each leaves a margin below its bound.
namespace rocdp::testing {

// GLRT audit at sensitivity 1, sigma2 36, 70 rounds, dim 1.
inline constexpr std::uint64_t kAuditSeedSigma36 = 146;

// GLRT audit at sensitivity 1, sigma2 12.25, 50 rounds, dim 50.
inline constexpr std::uint64_t kAuditSeedDim50 = 95;

// NPO audit at sensitivity 1, sigma2 12.25, 50 rounds, dim 50.
inline constexpr std::uint64_t kAuditSeedNpoDim50 = 41;

// GLRT audit with sensitivity 0, where the true ROC is the diagonal.
inline constexpr std::uint64_t kAuditSeedNullCase = 5;

// GLRT audit over 4 rounds at 20000 trials, against the single-release
// quarter-variance theory curve.
inline constexpr std::uint64_t kAuditSeedAveraging = 6;

}  // namespace rocdp::testing

#endif  // ROCDP_TESTS_AUDIT_SEEDS_H_
