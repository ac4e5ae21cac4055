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

#include "rocdp/special_functions.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"

namespace rocdp {
namespace {

TEST_CASE("GaussianSf matches reference values") {
  CHECK(GaussianSf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(GaussianSf(1.6448536269514722) == doctest::Approx(0.05).epsilon(1e-14));
  CHECK(GaussianSf(10.0) == doctest::Approx(7.619853024160478e-24).epsilon(1e-13));
  // Deep tail goes through the log-survival asymptotic series.
  CHECK(GaussianLogSf(40.0) == doctest::Approx(-804.6084420137538).epsilon(1e-13));
  CHECK(std::exp(GaussianLogSf(5.0)) == doctest::Approx(GaussianSf(5.0)).epsilon(1e-13));
}

TEST_CASE("GaussianSf is symmetric and monotone") {
  for (double k : {-6.0, -2.5, -0.3, 0.0, 0.7, 3.0, 8.0}) {
    CHECK(GaussianSf(k) + GaussianSf(-k) == doctest::Approx(1.0).epsilon(1e-14));
  }
  double prev = 1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double k = -10.0 + 20.0 * i / 1000.0;
    const double v = GaussianSf(k);
    CHECK(v <= prev);
    prev = v;
  }
}

TEST_CASE("GaussianSfInv inverts the survival function") {
  CHECK(GaussianSfInv(0.5) == 0.0);
  CHECK(GaussianSfInv(0.05) == doctest::Approx(1.6448536269514722).epsilon(1e-14));
  for (double p : {1e-12, 1e-9, 1e-4, 0.2, 0.5, 0.8, 1.0 - 1e-9}) {
    CHECK(GaussianSf(GaussianSfInv(p)) == doctest::Approx(p).epsilon(1e-9));
  }
  CHECK(GaussianSfInv(0.0) == std::numeric_limits<double>::infinity());
  CHECK(GaussianSfInv(1.0) == -std::numeric_limits<double>::infinity());
  CHECK_THROWS_AS(GaussianSfInv(-0.1), std::domain_error);
  CHECK_THROWS_AS(GaussianSfInv(1.1), std::domain_error);
  CHECK_THROWS_AS(GaussianSfInv(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST_CASE("RegularizedGamma halves sum to one") {
  for (double a : {0.5, 1.0, 4.5, 25.0, 400.0}) {
    for (double x : {0.1, 1.0, 10.0, 300.0}) {
      CHECK(RegularizedGammaP(a, x) + RegularizedGammaQ(a, x) ==
            doctest::Approx(1.0).epsilon(1e-14));
    }
  }
  // a = 1 reduces to the exponential law.
  CHECK(RegularizedGammaQ(1.0, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
}

TEST_CASE("Central chi-squared matches Gaussian tails in one dimension") {
  // With one degree of freedom, P(Z^2 > c^2) = 2 Q(c).
  for (double c : {0.3, 1.0, 1.96, 3.5, 6.0}) {
    CHECK(Chi2Sf({1, 0.0, 1.0}, c * c) ==
          doctest::Approx(2.0 * GaussianSf(c)).epsilon(1e-13));
  }
  CHECK(Chi2Sf({1, 0.0, 1.0}, 0.0) == 1.0);
  CHECK(Chi2Sf({7, 3.0, 1.0}, 0.0) == 1.0);
}

TEST_CASE("Noncentral chi-squared matches reference values") {
  CHECK(Chi2Sf({1, 4.0, 1.0}, 9.0) == doctest::Approx(0.1586555405830289).epsilon(1e-12));
  CHECK(Chi2Sf({3, 2.5, 1.0}, 4.0) == doctest::Approx(0.5685385008130370).epsilon(1e-12));
  // Monte Carlo cross-check value 0.56854167 with standard error 4.95e-5.
  CHECK(std::fabs(Chi2Sf({3, 2.5, 1.0}, 4.0) - 0.56854167) < 3 * 4.95e-5);
  CHECK(Chi2Cdf({1, 2.0, 1.0}, 10.0) == doctest::Approx(0.9597711713464495).epsilon(1e-12));
  CHECK(Chi2Sf({5, 30.0, 1.0}, 200.0) == doctest::Approx(1.510788821830003e-17).epsilon(1e-11));
  CHECK(Chi2Cdf({50, 0.0, 1.0}, 49.33) == doctest::Approx(0.4998014988304631).epsilon(1e-12));
}

TEST_CASE("Chi2Cdf and Chi2Sf are complementary") {
  for (double x : {0.1, 1.0, 10.0}) {
    CHECK(Chi2Cdf({3, 0.0, 1.0}, x) + Chi2Sf({3, 0.0, 1.0}, x) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(Chi2Cdf({1, 2.0, 1.0}, x) + Chi2Sf({1, 2.0, 1.0}, x) ==
          doctest::Approx(1.0).epsilon(1e-15));
  }
}

TEST_CASE("Chi2 tails are monotone in x") {
  const ScaledChi2 dist{4, 6.0, 0.5};
  double prev = 1.0;
  for (int i = 1; i <= 1000; ++i) {
    const double x = 40.0 * i / 1000.0;
    const double v = Chi2Sf(dist, x);
    CHECK(v <= prev + 1e-15);
    prev = v;
  }
}

TEST_CASE("Chi2SfInv matches references and round-trips") {
  CHECK(Chi2SfInv({1, 0.0, 1.0}, 0.05) == doctest::Approx(3.841458820694124).epsilon(1e-10));
  CHECK(Chi2CdfInv({1, 0.0, 1.0}, 0.95) == doctest::Approx(3.841458820694124).epsilon(1e-10));
  CHECK(Chi2SfInv({10, 7.0, 4.0}, 1e-4) == doctest::Approx(215.4926089909374).epsilon(1e-9));
  CHECK(Chi2SfInv({1, 0.0, 1.0}, 1.0) == 0.0);
  CHECK(Chi2Cdf({50, 0.0, 1.0}, Chi2CdfInv({50, 0.0, 1.0}, 0.4998)) ==
        doctest::Approx(0.4998).epsilon(1e-8));
  for (double p : {1e-12, 1e-6, 0.01, 0.3, 0.7, 0.99, 1.0 - 1e-12}) {
    for (ScaledChi2 dist : {ScaledChi2{1, 0.0, 1.0}, ScaledChi2{3, 2.5, 1.0},
                            ScaledChi2{10, 7.0, 4.0}, ScaledChi2{50, 20.0, 0.02}}) {
      CHECK(Chi2Sf(dist, Chi2SfInv(dist, p)) == doctest::Approx(p).epsilon(1e-7));
      CHECK(Chi2Cdf(dist, Chi2CdfInv(dist, p)) == doctest::Approx(p).epsilon(1e-7));
    }
  }
}

TEST_CASE("Chi2SfInv is monotone in p") {
  const ScaledChi2 dist{2, 3.0, 1.5};
  double prev = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 1000; ++i) {
    const double p = static_cast<double>(i) / 1001.0;
    const double v = Chi2SfInv(dist, p);
    CHECK(v <= prev);
    prev = v;
  }
}

TEST_CASE("Scale parameter commutes exactly with evaluation") {
  // Scaling by a power of two must not change a single bit.
  CHECK(Chi2Sf({3, 2.5, 7.0}, 4.0 * 7.0) == Chi2Sf({3, 2.5, 1.0}, 4.0));
  CHECK(Chi2Cdf({1, 4.0, 0.25}, 2.5 * 0.25) == Chi2Cdf({1, 4.0, 1.0}, 2.5));
  CHECK(Chi2SfInv({3, 2.5, 7.0}, 0.2) == doctest::Approx(7.0 * Chi2SfInv({3, 2.5, 1.0}, 0.2))
                                              .epsilon(1e-12));
}

TEST_CASE("MarcumQHalf agrees with the noncentral chi-squared tail") {
  // Q_{1/2}(a, b) = P(chi2_1(a^2) > b^2) = Q(b - a) + Q(b + a).
  CHECK(MarcumQHalf(0.0, 1.3) == doctest::Approx(2.0 * GaussianSf(1.3)).epsilon(1e-13));
  CHECK(MarcumQHalf(1.0, 1.0) == doctest::Approx(0.5 + GaussianSf(2.0)).epsilon(1e-13));
  CHECK(MarcumQHalf(2.0, 3.0) == doctest::Approx(0.1586555405830289).epsilon(1e-12));
  CHECK(MarcumQHalf(1.0, 4.0) == doctest::Approx(1.3501846832019726e-3).epsilon(1e-12));
  for (int i = 0; i < 20; ++i) {
    for (int j = 1; j <= 20; ++j) {
      const double a = 0.3 * i;
      const double b = 0.4 * j;
      CHECK(MarcumQHalf(a, b) ==
            doctest::Approx(Chi2Sf({1, a * a, 1.0}, b * b)).epsilon(1e-12));
    }
  }
}

TEST_CASE("Special functions reject invalid arguments") {
  CHECK_THROWS_AS(Chi2Sf({0, 0.0, 1.0}, 1.0), std::domain_error);
  CHECK_THROWS_AS(Chi2Sf({1, -1.0, 1.0}, 1.0), std::domain_error);
  CHECK_THROWS_AS(Chi2Sf({1, 0.0, 0.0}, 1.0), std::domain_error);
  CHECK_THROWS_AS(Chi2Sf({1, 0.0, 1.0}, -1.0), std::domain_error);
  CHECK_THROWS_AS(Chi2SfInv({1, 0.0, 1.0}, -0.1), std::domain_error);
  CHECK_THROWS_AS(Chi2SfInv({1, 0.0, 1.0}, 1.5), std::domain_error);
  CHECK_THROWS_AS(RegularizedGammaP(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(RegularizedGammaP(1.0, -1.0), std::domain_error);
}

}  // namespace
}  // namespace rocdp
