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

#ifndef ROCDP_ATTACK_SIM_H_
#define ROCDP_ATTACK_SIM_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "rocdp/trade_off.h"

namespace rocdp {

enum class Adversary {
  kGlrtMagnitude,   // Thresholds the squared norm of the averaged release.
  kNpoLikelihood,   // Thresholds the log-likelihood ratio along the shift.
};

enum class Direction {
  kNullIsZero,   // Null hypothesis: no shift. Compares against the R branch.
  kNullIsDelta,  // Null hypothesis: shifted. Compares against the R' branch.
};

struct AuditConfig {
  MechanismParams params;
  int trials = 1000;
  int cutoffs = 100;
  std::uint64_t seed = 0;
  Adversary adversary = Adversary::kGlrtMagnitude;
};

struct EmpiricalRocPoint {
  double p_f = 0.0;  // Empirical false-alarm probability.
  double p_d = 0.0;  // Empirical detection probability.
  int null_count = 0;
  int alt_count = 0;
};

struct EmpiricalRoc {
  Direction direction = Direction::kNullIsZero;
  std::vector<EmpiricalRocPoint> points;  // Sorted by p_f.
};

// Binomial standard error sqrt(p (1 - p) / n) at the least populated class,
// reported so callers can judge the width of the estimate band.
struct EstimationError {
  double standard_error = 0.0;
  int min_class_count = 0;
};

// Test cutoffs spaced uniformly in null quantile space between the 1e-4 and
// 1 - 1e-4 quantiles of the test statistic under the null-is-zero null.
// RunGame rebuilds the analogous grid per direction.
std::vector<double> CutoffGrid(const AuditConfig& config);

// Runs the membership-inference game in both hypothesis directions with
// independent trials per direction. Each trial flips a fair coin, runs the
// mechanism for the configured rounds, and records the adversary's statistic;
// the ROC is swept over CutoffGrid. Deterministic in config.seed.
std::pair<EmpiricalRoc, EmpiricalRoc> RunGame(const AuditConfig& config);

EstimationError EstimateError(const EmpiricalRoc& empirical);

// Largest vertical distance between empirical detection probabilities and the
// theoretical curve evaluated at the empirical false-alarm rates.
double CompareToTheory(const EmpiricalRoc& empirical, const RocCurve& curve);

}  // namespace rocdp

#endif  // ROCDP_ATTACK_SIM_H_
