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

#include "rocdp/trade_off.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rocdp/composition.h"
#include "rocdp/conversion.h"
#include "rocdp/special_functions.h"

namespace rocdp {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlopeXLo = 1e-14;
constexpr double kSlopeXHi = 1.0 - 1e-12;

void CheckUnitInterval(double x, const char* what) {
  if (std::isnan(x) || x < 0 || x > 1) {
    throw std::domain_error(std::string(what) + ": argument must lie in [0, 1]");
  }
}

double LogCosh(double z) {
  const double a = std::fabs(z);
  return a + std::log1p(std::exp(-2.0 * a)) - 0.6931471805599453094;
}

RocCurve IdentityCurve(CurveKind kind, const MechanismParams& params) {
  return RocCurve(
      kind, params, [](double x) { return x; }, [](double) { return 1.0; });
}

// Analytic slope of the GLRT ROC with the null at the origin: the chi-squared
// likelihood ratio at the threshold matching false-alarm probability x.
double GlrtSlopeAt(int dim, double lambda, double x) {
  if (x <= 0) return kInf;
  if (x >= 1) return std::exp(-0.5 * lambda);
  const ScaledChi2 null_dist{dim, 0.0, 1.0};
  const ScaledChi2 alt_dist{dim, lambda, 1.0};
  const double t = Chi2SfInv(null_dist, x);
  return std::exp(Chi2LogPdf(alt_dist, t) - Chi2LogPdf(null_dist, t));
}

// Slope of the swapped branch, the reciprocal likelihood ratio at the
// threshold matching x under the shifted null.
double GlrtPrimeSlopeAt(int dim, double lambda, double x) {
  if (x <= 0) return std::exp(0.5 * lambda);
  if (x >= 1) return 0.0;
  const ScaledChi2 null_dist{dim, 0.0, 1.0};
  const ScaledChi2 alt_dist{dim, lambda, 1.0};
  const double t = Chi2CdfInv(alt_dist, x);
  return std::exp(Chi2LogPdf(null_dist, t) - Chi2LogPdf(alt_dist, t));
}

// False-alarm probability where the curve slope crosses 1, found as a root
// of the log slope in log x.
double UnitSlopeTangency(const RocCurve& curve) {
  auto g = [&curve](double u) { return std::log(curve.Slope(std::exp(u))); };
  const double u = FindRoot(g, std::log(kSlopeXLo), std::log1p(-1e-12), 1e-12);
  return std::exp(u);
}

// Piecewise-linear upper concave hull of sampled points from both branches
// and their reflections through (1/2, 1/2).
RocCurve ConcaveHullCurve(const RocCurve& r, const RocCurve& r_prime) {
  std::vector<std::pair<double, double>> pts;
  auto add = [&pts, &r, &r_prime](double x) {
    const double y = std::max(r.Eval(x), r_prime.Eval(x));
    pts.emplace_back(x, y);
    pts.emplace_back(1.0 - y, 1.0 - x);
  };
  pts.emplace_back(0.0, 0.0);
  pts.emplace_back(1.0, 1.0);
  for (int i = 0; i <= 80; ++i) {
    add(std::pow(10.0, -14.0 + 11.0 * i / 80.0));
  }
  for (int i = 1; i < 1999; ++i) {
    add(1e-3 + (1.0 - 2e-3) * i / 1999.0);
  }
  for (int i = 0; i <= 80; ++i) {
    add(1.0 - std::pow(10.0, -12.0 + 9.0 * i / 80.0));
  }
  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<double, double>> hull;
  for (const auto& p : pts) {
    if (!hull.empty() && hull.back().first == p.first) {
      if (p.second <= hull.back().second) continue;
      hull.pop_back();
    }
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const double cross = (b.first - a.first) * (p.second - a.second) -
                           (b.second - a.second) * (p.first - a.first);
      if (cross >= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }
  auto shared = std::make_shared<std::vector<std::pair<double, double>>>(std::move(hull));
  auto eval = [shared](double x) {
    const auto& h = *shared;
    if (x <= h.front().first) return h.front().second;
    if (x >= h.back().first) return h.back().second;
    auto it = std::upper_bound(h.begin(), h.end(), std::make_pair(x, kInf));
    const auto& b = *it;
    const auto& a = *(it - 1);
    const double w = (x - a.first) / (b.first - a.first);
    return a.second + w * (b.second - a.second);
  };
  return RocCurve(CurveKind::kSymmetrized, r.params(), eval);
}

}  // namespace

void ValidateParams(const MechanismParams& params) {
  if (!(params.sensitivity >= 0) || !std::isfinite(params.sensitivity)) {
    throw std::invalid_argument("MechanismParams: sensitivity must be finite and >= 0");
  }
  if (!(params.noise_variance > 0) || !std::isfinite(params.noise_variance)) {
    throw std::invalid_argument("MechanismParams: noise_variance must be finite and > 0");
  }
  if (params.dim < 1) {
    throw std::invalid_argument("MechanismParams: dim must be >= 1");
  }
  if (params.rounds < 1) {
    throw std::invalid_argument("MechanismParams: rounds must be >= 1");
  }
}

std::string CurveKindName(CurveKind kind) {
  switch (kind) {
    case CurveKind::kGlrtR:
      return "glrt";
    case CurveKind::kGlrtRPrime:
      return "glrt-prime";
    case CurveKind::kGlrtD1Closed:
      return "glrt-d1";
    case CurveKind::kNpo:
      return "npo";
    case CurveKind::kSymmetrized:
      return "glrt-sym";
    case CurveKind::kAsymptoticGdp:
      return "gdp-asymptotic";
  }
  throw std::invalid_argument("CurveKindName: unknown kind");
}

RocCurve::RocCurve(CurveKind kind, const MechanismParams& params, EvalFn eval, EvalFn slope)
    : kind_(kind), params_(params), eval_(std::move(eval)), slope_(std::move(slope)) {
  if (!eval_) {
    throw std::invalid_argument("RocCurve: eval function is required");
  }
}

double RocCurve::Eval(double x) const {
  CheckUnitInterval(x, "RocCurve::Eval");
  return eval_(x);
}

double RocCurve::Slope(double x) const {
  CheckUnitInterval(x, "RocCurve::Slope");
  if (slope_) return slope_(x);
  return NumericalDerivative(eval_, x);
}

double GlrtRoc(const MechanismParams& params, double x) {
  ValidateParams(params);
  CheckUnitInterval(x, "GlrtRoc");
  if (x == 0) return 0.0;
  if (x == 1) return 1.0;
  if (params.sensitivity == 0) return x;
  const ComposedParams c = ComposeHomogeneous(params);
  const ScaledChi2 null_dist{params.dim, 0.0, 1.0};
  const ScaledChi2 alt_dist{params.dim, c.lambda_comp, 1.0};
  return Chi2Sf(alt_dist, Chi2SfInv(null_dist, x));
}

double GlrtRocPrime(const MechanismParams& params, double x) {
  ValidateParams(params);
  CheckUnitInterval(x, "GlrtRocPrime");
  if (x == 0) return 0.0;
  if (x == 1) return 1.0;
  if (params.sensitivity == 0) return x;
  const ComposedParams c = ComposeHomogeneous(params);
  const ScaledChi2 null_dist{params.dim, 0.0, 1.0};
  const ScaledChi2 alt_dist{params.dim, c.lambda_comp, 1.0};
  return Chi2Cdf(null_dist, Chi2CdfInv(alt_dist, x));
}

double GlrtRocD1Closed(double sensitivity, double noise_variance, double x) {
  ValidateParams({sensitivity, noise_variance, 1, 1});
  CheckUnitInterval(x, "GlrtRocD1Closed");
  if (x == 0) return 0.0;
  if (x == 1) return 1.0;
  const double mu = sensitivity / std::sqrt(noise_variance);
  const double k = GaussianSfInv(0.5 * x);
  return GaussianSf(k - mu) + GaussianSf(k + mu);
}

double NpoRoc(double sensitivity, double noise_variance, double x) {
  ValidateParams({sensitivity, noise_variance, 1, 1});
  CheckUnitInterval(x, "NpoRoc");
  if (x == 0) return 0.0;
  if (x == 1) return 1.0;
  const double mu = sensitivity / std::sqrt(noise_variance);
  return GaussianSf(GaussianSfInv(x) - mu);
}

RocCurve MakeGlrtCurve(const MechanismParams& params) {
  ValidateParams(params);
  if (params.sensitivity == 0) return IdentityCurve(CurveKind::kGlrtR, params);
  const double lambda = ComposeHomogeneous(params).lambda_comp;
  const int dim = params.dim;
  return RocCurve(
      CurveKind::kGlrtR, params, [params](double x) { return GlrtRoc(params, x); },
      [dim, lambda](double x) { return GlrtSlopeAt(dim, lambda, x); });
}

RocCurve MakeGlrtPrimeCurve(const MechanismParams& params) {
  ValidateParams(params);
  if (params.sensitivity == 0) return IdentityCurve(CurveKind::kGlrtRPrime, params);
  const double lambda = ComposeHomogeneous(params).lambda_comp;
  const int dim = params.dim;
  return RocCurve(
      CurveKind::kGlrtRPrime, params, [params](double x) { return GlrtRocPrime(params, x); },
      [dim, lambda](double x) { return GlrtPrimeSlopeAt(dim, lambda, x); });
}

RocCurve MakeGlrtD1ClosedCurve(const MechanismParams& params) {
  ValidateParams(params);
  if (params.dim != 1) {
    throw std::invalid_argument("MakeGlrtD1ClosedCurve: requires dim == 1");
  }
  if (params.sensitivity == 0) return IdentityCurve(CurveKind::kGlrtD1Closed, params);
  const ComposedParams c = ComposeHomogeneous(params);
  const double sens = params.sensitivity;
  const double var = c.noise_variance_comp;
  const double mu = sens / std::sqrt(var);
  auto eval = [sens, var](double x) { return GlrtRocD1Closed(sens, var, x); };
  auto slope = [mu](double x) {
    if (x <= 0) return kInf;
    if (x >= 1) return std::exp(-0.5 * mu * mu);
    const double k = GaussianSfInv(0.5 * x);
    return std::exp(-0.5 * mu * mu + LogCosh(k * mu));
  };
  return RocCurve(CurveKind::kGlrtD1Closed, params, eval, slope);
}

RocCurve MakeNpoCurve(const MechanismParams& params) {
  ValidateParams(params);
  if (params.sensitivity == 0) return IdentityCurve(CurveKind::kNpo, params);
  const ComposedParams c = ComposeHomogeneous(params);
  const double sens = params.sensitivity;
  const double var = c.noise_variance_comp;
  const double mu = sens / std::sqrt(var);
  auto eval = [sens, var](double x) { return NpoRoc(sens, var, x); };
  auto slope = [mu](double x) {
    if (x <= 0) return kInf;
    if (x >= 1) return 0.0;
    return std::exp(mu * GaussianSfInv(x) - 0.5 * mu * mu);
  };
  return RocCurve(CurveKind::kNpo, params, eval, slope);
}

RocCurve Symmetrize(const RocCurve& r, const RocCurve& r_prime) {
  const MechanismParams& p = r.params();
  const MechanismParams& q = r_prime.params();
  if (p.sensitivity != q.sensitivity || p.noise_variance != q.noise_variance || p.dim != q.dim ||
      p.rounds != q.rounds) {
    throw std::invalid_argument("Symmetrize: curves must share parameters");
  }
  if (p.sensitivity == 0) return IdentityCurve(CurveKind::kSymmetrized, p);
  double x1, x2, b;
  try {
    x1 = UnitSlopeTangency(r);
    x2 = UnitSlopeTangency(r_prime);
    b = 0.5 * ((r.Eval(x1) - x1) + (r_prime.Eval(x2) - x2));
  } catch (const BracketError&) {
    return ConcaveHullCurve(r, r_prime);
  }
  if (!(x1 < x2) || !(b >= 0)) {
    return ConcaveHullCurve(r, r_prime);
  }
  auto eval = [r, r_prime, x1, x2, b](double x) {
    if (x <= x1) return r.Eval(x);
    if (x >= x2) return r_prime.Eval(x);
    return x + b;
  };
  auto slope = [r, r_prime, x1, x2](double x) {
    if (x <= x1) return r.Slope(x);
    if (x >= x2) return r_prime.Slope(x);
    return 1.0;
  };
  return RocCurve(CurveKind::kSymmetrized, p, eval, slope);
}

}  // namespace rocdp
