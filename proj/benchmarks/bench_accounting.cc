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

#include <benchmark/benchmark.h>

#include "rocdp/attack_sim.h"
#include "rocdp/composition.h"
#include "rocdp/conversion.h"
#include "rocdp/special_functions.h"
#include "rocdp/trade_off.h"

namespace {

void BM_Chi2Sf(benchmark::State& state) {
  const rocdp::ScaledChi2 dist{state.range(0) == 0 ? 1 : 50,
                               state.range(0) == 0 ? 0.0 : 30.0, 1.0};
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rocdp::Chi2Sf(dist, x));
    x = x < 60.0 ? x + 0.1 : 0.5;
  }
}
BENCHMARK(BM_Chi2Sf)->Arg(0)->Arg(1);

void BM_Chi2SfInv(benchmark::State& state) {
  const rocdp::ScaledChi2 dist{10, 7.0, 1.0};
  double p = 0.9;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rocdp::Chi2SfInv(dist, p));
    p = p > 1e-6 ? p * 0.7 : 0.9;
  }
}
BENCHMARK(BM_Chi2SfInv);

void BM_GlrtCurveEval(benchmark::State& state) {
  const rocdp::MechanismParams params{1.0, 36.0, static_cast<int>(state.range(0)), 70};
  const rocdp::RocCurve curve = rocdp::MakeGlrtCurve(params);
  double x = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(curve.Eval(x));
    x = x < 0.99 ? x + 0.01 : 0.01;
  }
}
BENCHMARK(BM_GlrtCurveEval)->Arg(1)->Arg(50);

void BM_Symmetrize(benchmark::State& state) {
  const rocdp::MechanismParams params{1.0, 36.0, 1, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        rocdp::Symmetrize(rocdp::MakeGlrtCurve(params), rocdp::MakeGlrtPrimeCurve(params)));
  }
}
BENCHMARK(BM_Symmetrize);

void BM_DeltaAtEpsilon(benchmark::State& state) {
  const rocdp::MechanismParams params{1.0, 36.0, 1, 70};
  const rocdp::PrivacyProfile profile(
      rocdp::Symmetrize(rocdp::MakeGlrtCurve(params), rocdp::MakeGlrtPrimeCurve(params)));
  double eps = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(profile.DeltaAtEpsilon(eps).delta);
    eps = eps < 5.0 ? eps + 0.25 : 0.0;
  }
}
BENCHMARK(BM_DeltaAtEpsilon);

void BM_EpsilonAtDelta(benchmark::State& state) {
  const rocdp::MechanismParams params{1.0, 36.0, 1, 70};
  const rocdp::PrivacyProfile profile(
      rocdp::Symmetrize(rocdp::MakeGlrtCurve(params), rocdp::MakeGlrtPrimeCurve(params)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(profile.EpsilonAtDelta(1e-2).epsilon);
  }
}
BENCHMARK(BM_EpsilonAtDelta);

void BM_ProfileGrid(benchmark::State& state) {
  const rocdp::PrivacyProfile profile(rocdp::MakeNpoCurve({1.0, 1.0, 1, 1}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(profile.Grid(0.0, 5.0, state.range(0)));
  }
}
BENCHMARK(BM_ProfileGrid)->Arg(16)->Arg(128);

void BM_AuditGame(benchmark::State& state) {
  rocdp::AuditConfig config;
  config.params = {1.0, 36.0, 1, 70};
  config.trials = state.range(0);
  config.cutoffs = 100;
  config.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rocdp::RunGame(config));
  }
}
BENCHMARK(BM_AuditGame)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
