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

#include "rocdp/conversion.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "rocdp/special_functions.h"

namespace rocdp {
namespace {

// Tangency abscissas shrink like the Gaussian tail of the slope target, so
// the search floor must sit far below any practical tangency while staying
// clear of subnormal evaluation.
constexpr double kSlopeXLo = 1e-280;
constexpr double kDeltaFloor = 1e-15;
constexpr double kEpsilonMax = 50.0;
// exp on larger arguments overflows; slopes are compared in log space anyway.
constexpr double kLogSlopeCap = 700.0;

}  // namespace

double NumericalDerivative(const std::function<double(double)>& f, double x) {
  if (std::isnan(x) || x <= 0 || x >= 1) {
    throw std::domain_error("NumericalDerivative: x must lie strictly inside (0, 1)");
  }
  const double h = std::max(x, 1e-8) * std::cbrt(std::numeric_limits<double>::epsilon());
  if (x - h < 0) return (f(x + h) - f(x)) / h;
  if (x + h > 1) return (f(x) - f(x - h)) / h;
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

double NumericalDerivative(const RocCurve& curve, double x) {
  return NumericalDerivative([&curve](double t) { return curve.Eval(t); }, x);
}

double FindRoot(const std::function<double(double)>& f, double lo, double hi, double tol) {
  if (!(lo < hi) || !(tol > 0)) {
    throw std::invalid_argument("FindRoot: requires lo < hi and tol > 0");
  }
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo > 0) == (fhi > 0)) {
    throw BracketError("FindRoot: no sign change over the bracket");
  }
  bool force_bisect = false;
  for (int i = 0; i < 200 && hi - lo > tol; ++i) {
    double cand = 0.5 * (lo + hi);
    if (!force_bisect && std::isfinite(flo) && std::isfinite(fhi) && fhi != flo) {
      const double secant = hi - fhi * (hi - lo) / (fhi - flo);
      if (secant > lo && secant < hi) cand = secant;
    }
    const double fc = f(cand);
    if (fc == 0) return cand;
    if ((fc > 0) == (fhi > 0)) {
      hi = cand;
      fhi = fc;
    } else {
      lo = cand;
      flo = fc;
    }
    force_bisect = !force_bisect;
  }
  return 0.5 * (lo + hi);
}

PrivacyProfile::PrivacyProfile(RocCurve source) : source_(std::move(source)) {
  switch (source_.kind()) {
    case CurveKind::kSymmetrized:
    case CurveKind::kNpo:
    case CurveKind::kAsymptoticGdp:
      break;
    default:
      throw std::invalid_argument(
          "PrivacyProfile: source must be a symmetric curve (glrt-sym, npo, or gdp-asymptotic)");
  }
  const double xs[] = {0.02, 0.12, 0.3, 0.5, 0.7, 0.9};
  double prev = -1.0;
  for (double a : xs) {
    const double fa = source_.Eval(a);
    if (fa < prev - 1e-12) {
      throw std::invalid_argument("PrivacyProfile: source curve is not non-decreasing");
    }
    prev = fa;
  }
  for (std::size_t i = 0; i + 1 < std::size(xs); ++i) {
    const double a = xs[i];
    const double c = xs[i + 1];
    const double mid = source_.Eval(0.5 * (a + c));
    if (mid + 1e-9 < 0.5 * (source_.Eval(a) + source_.Eval(c))) {
      throw std::invalid_argument("PrivacyProfile: source curve fails a concavity check");
    }
  }
}

DeltaValue PrivacyProfile::DeltaAtEpsilon(double epsilon) const {
  if (std::isnan(epsilon) || epsilon < 0) {
    throw std::domain_error("DeltaAtEpsilon: epsilon must be >= 0");
  }
  const double log_m = std::min(epsilon, kLogSlopeCap);
  const double m = std::exp(log_m);
  if (!(source_.Slope(kSlopeXLo) > m)) {
    return {0.0, true};
  }
  auto g = [this, log_m](double u) { return std::log(source_.Slope(std::exp(u))) - log_m; };
  const double u = FindRoot(g, std::log(kSlopeXLo), std::log1p(-1e-12), 1e-12);
  const double xs = std::exp(u);
  const double delta = std::clamp(source_.Eval(xs) - m * xs, 0.0, 1.0);
  if (delta < kDeltaFloor) {
    return {0.0, true};
  }
  return {delta, false};
}

EpsilonValue PrivacyProfile::EpsilonAtDelta(double delta) const {
  if (std::isnan(delta) || delta < 0 || delta >= 1) {
    throw std::domain_error("EpsilonAtDelta: delta must lie in [0, 1)");
  }
  const DeltaValue at_zero = DeltaAtEpsilon(0.0);
  if (at_zero.delta <= delta) {
    return {0.0, at_zero.delta == 0.0};
  }
  if (DeltaAtEpsilon(kEpsilonMax).delta > delta) {
    throw std::range_error("EpsilonAtDelta: target delta is unreachable for epsilon in [0, 50]");
  }
  double lo = 0.0;
  double hi = kEpsilonMax;
  for (int i = 0; i < 200 && hi - lo > 1e-10; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (DeltaAtEpsilon(mid).delta <= delta) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {hi, false};
}

std::vector<ProfilePoint> PrivacyProfile::Grid(double eps_min, double eps_max, int n) const {
  if (n < 2) {
    throw std::invalid_argument("Grid: n must be >= 2");
  }
  if (std::isnan(eps_min) || eps_min < 0 || !std::isfinite(eps_max) || !(eps_max > eps_min)) {
    throw std::invalid_argument("Grid: requires 0 <= eps_min < eps_max, finite");
  }
  std::vector<ProfilePoint> out;
  out.reserve(n);
  const double u_min = std::log1p(eps_min);
  const double u_max = std::log1p(eps_max);
  for (int i = 0; i < n; ++i) {
    double eps;
    if (i == 0) {
      eps = eps_min;
    } else if (i == n - 1) {
      eps = eps_max;
    } else {
      eps = std::expm1(u_min + (u_max - u_min) * i / (n - 1));
    }
    double delta = DeltaAtEpsilon(eps).delta;
    if (!out.empty()) delta = std::min(delta, out.back().delta);
    out.push_back({eps, delta});
  }
  return out;
}

double AnalyticGaussianProfileDelta(double mu, double epsilon) {
  if (!(mu >= 0) || !std::isfinite(mu)) {
    throw std::domain_error("AnalyticGaussianProfileDelta: mu must be finite and >= 0");
  }
  if (std::isnan(epsilon) || epsilon < 0 || !std::isfinite(epsilon)) {
    throw std::domain_error("AnalyticGaussianProfileDelta: epsilon must be finite and >= 0");
  }
  if (mu == 0) return 0.0;
  const double a = epsilon / mu - 0.5 * mu;
  const double b = epsilon / mu + 0.5 * mu;
  const double second = std::exp(std::min(epsilon + GaussianLogSf(b), 0.0));
  return std::max(0.0, GaussianSf(a) - second);
}

}  // namespace rocdp
