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

#include "rocdp/attack_sim.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rocdp/special_functions.h"

namespace rocdp {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;
constexpr std::uint64_t kSaltNullIsZero = 0x243F6A8885A308D3ull;
constexpr std::uint64_t kSaltNullIsDelta = 0x13198A2E03707344ull;

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Uniform draws in (0, 1] and paired Box-Muller normals on top of a
// mersenne twister, so trial streams are reproducible across platforms.
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed) : eng_(seed) {}

  double Uniform() { return ((eng_() >> 11) + 1.0) * 0x1.0p-53; }

  double Normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = Uniform();
    const double u2 = Uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(kTwoPi * u2);
    have_spare_ = true;
    return r * std::cos(kTwoPi * u2);
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

void ValidateConfig(const AuditConfig& config) {
  ValidateParams(config.params);
  if (config.trials < 1) {
    throw std::invalid_argument("AuditConfig: trials must be >= 1");
  }
  if (config.cutoffs < 2) {
    throw std::invalid_argument("AuditConfig: cutoffs must be >= 2");
  }
}

double Lambda(const MechanismParams& p) {
  return p.rounds * p.sensitivity * p.sensitivity / p.noise_variance;
}

// One run of the mechanism: average of `rounds` noisy releases, with the
// shift along the first coordinate when the record is present. Returns the
// adversary's test statistic.
double Statistic(const AuditConfig& config, bool shifted, TrialRng& rng) {
  const MechanismParams& p = config.params;
  const double sigma = std::sqrt(p.noise_variance);
  std::vector<double> mean(p.dim, 0.0);
  for (int r = 0; r < p.rounds; ++r) {
    for (int j = 0; j < p.dim; ++j) {
      double v = sigma * rng.Normal();
      if (shifted && j == 0) v += p.sensitivity;
      mean[j] += v;
    }
  }
  for (double& m : mean) m /= p.rounds;
  if (config.adversary == Adversary::kGlrtMagnitude) {
    double s = 0.0;
    for (double m : mean) s += m * m;
    return s;
  }
  const double lambda = Lambda(p);
  return (p.rounds / p.noise_variance) * p.sensitivity * mean[0] - 0.5 * lambda;
}

std::vector<double> DirectionalCutoffs(const AuditConfig& config, Direction direction) {
  const MechanismParams& p = config.params;
  const double lambda = Lambda(p);
  const bool null_shifted = direction == Direction::kNullIsDelta;
  std::vector<double> cuts(config.cutoffs);
  for (int i = 0; i < config.cutoffs; ++i) {
    const double q = 1e-4 + (1.0 - 2e-4) * static_cast<double>(i) / (config.cutoffs - 1);
    if (config.adversary == Adversary::kGlrtMagnitude) {
      const ScaledChi2 null_dist{p.dim, null_shifted ? lambda : 0.0,
                                 p.noise_variance / p.rounds};
      cuts[i] = Chi2CdfInv(null_dist, q);
    } else {
      const double center = (null_shifted ? 0.5 : -0.5) * lambda;
      cuts[i] = center + std::sqrt(lambda) * GaussianSfInv(1.0 - q);
    }
  }
  return cuts;
}

EmpiricalRoc RunDirection(const AuditConfig& config, Direction direction) {
  const std::uint64_t salt =
      direction == Direction::kNullIsZero ? kSaltNullIsZero : kSaltNullIsDelta;
  const std::uint64_t stream = SplitMix64(config.seed ^ salt);
  const bool null_shifted = direction == Direction::kNullIsDelta;

  std::vector<std::pair<bool, double>> trials(config.trials);
  for (int i = 0; i < config.trials; ++i) {
    TrialRng rng(SplitMix64(stream + static_cast<std::uint64_t>(i)));
    const bool alt = rng.Uniform() < 0.5;
    const bool shifted = null_shifted ? !alt : alt;
    trials[i] = {alt, Statistic(config, shifted, rng)};
  }

  int n_null = 0;
  int n_alt = 0;
  for (const auto& t : trials) {
    (t.first ? n_alt : n_null) += 1;
  }

  // Null at the origin rejects large statistics; null at the shift rejects
  // small ones, matching the swapped ROC branch.
  const bool reject_above = direction == Direction::kNullIsZero;
  EmpiricalRoc roc;
  roc.direction = direction;
  for (double c : DirectionalCutoffs(config, direction)) {
    int r_null = 0;
    int r_alt = 0;
    for (const auto& t : trials) {
      const bool reject = reject_above ? t.second > c : t.second <= c;
      if (reject) {
        (t.first ? r_alt : r_null) += 1;
      }
    }
    EmpiricalRocPoint pt;
    pt.null_count = n_null;
    pt.alt_count = n_alt;
    pt.p_f = n_null > 0 ? static_cast<double>(r_null) / n_null : 0.0;
    pt.p_d = n_alt > 0 ? static_cast<double>(r_alt) / n_alt : 0.0;
    roc.points.push_back(pt);
  }
  std::stable_sort(roc.points.begin(), roc.points.end(),
                   [](const EmpiricalRocPoint& a, const EmpiricalRocPoint& b) {
                     return a.p_f < b.p_f;
                   });
  return roc;
}

}  // namespace

std::vector<double> CutoffGrid(const AuditConfig& config) {
  ValidateConfig(config);
  return DirectionalCutoffs(config, Direction::kNullIsZero);
}

std::pair<EmpiricalRoc, EmpiricalRoc> RunGame(const AuditConfig& config) {
  ValidateConfig(config);
  return {RunDirection(config, Direction::kNullIsZero),
          RunDirection(config, Direction::kNullIsDelta)};
}

EstimationError EstimateError(const EmpiricalRoc& empirical) {
  int min_count = 0;
  bool any = false;
  for (const EmpiricalRocPoint& pt : empirical.points) {
    const int m = pt.null_count < pt.alt_count ? pt.null_count : pt.alt_count;
    if (!any || m < min_count) {
      min_count = m;
      any = true;
    }
  }
  if (!any || min_count == 0) {
    return {1.0, 0};
  }
  // Worst case p = 1/2 inside the binomial variance.
  return {std::sqrt(0.25 / min_count), min_count};
}

double CompareToTheory(const EmpiricalRoc& empirical, const RocCurve& curve) {
  double sup = 0.0;
  for (const EmpiricalRocPoint& pt : empirical.points) {
    const double gap = std::fabs(pt.p_d - curve.Eval(pt.p_f));
    if (gap > sup) sup = gap;
  }
  return sup;
}

}  // namespace rocdp
