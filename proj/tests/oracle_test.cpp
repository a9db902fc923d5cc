// Copyright 2026 The slitspin Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "slitspin/errors.hpp"
#include "slitspin/oracle.hpp"
#include "test_oracles.hpp"

namespace slitspin::oracle {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(ClassicalIntensity, Examples) {
  EXPECT_NEAR(classical_intensity(WavePhaseSet({0, 0})), 1.0, 1e-15);
  EXPECT_NEAR(classical_intensity(WavePhaseSet({0, kPi})), 0.0, 1e-15);
  EXPECT_NEAR(classical_intensity(WavePhaseSet({0, 2 * kPi / 3, 4 * kPi / 3})), 0.0, 1e-15);
}

TEST(ClassicalIntensity, BoundedAndShiftInvariant) {
  auto rng = slitspin::testing::rng(51);
  for (int k = 0; k < 2000; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 6);
    std::vector<double> phases(n);
    for (auto& p : phases) p = slitspin::testing::uniform(rng, -10, 10);
    const double base = classical_intensity(WavePhaseSet(phases));
    EXPECT_GE(base, 0.0);
    EXPECT_LE(base, 1.0 + 1e-15);
    const double shift = slitspin::testing::uniform(rng, -10, 10);
    for (auto& p : phases) p += shift;
    EXPECT_NEAR(classical_intensity(WavePhaseSet(phases)), base, 1e-12);
  }
}

TEST(ClassicalIntensity, FullOnlyWhenPhasesAgreeModTwoPi) {
  EXPECT_NEAR(classical_intensity(WavePhaseSet({0.3, 0.3 + 2 * kPi, 0.3 - 4 * kPi})), 1.0, 1e-14);
  EXPECT_LT(classical_intensity(WavePhaseSet({0.3, 0.31, 0.3})), 1.0);
}

TEST(IndependentIntensity, IsOneOverN) {
  EXPECT_NEAR(independent_intensity(WavePhaseSet({0.1, 2.0})), 0.5, 1e-15);
  EXPECT_NEAR(independent_intensity(WavePhaseSet({0.1, 2.0, -3.0})), 1.0 / 3, 1e-15);
  EXPECT_NEAR(independent_intensity(WavePhaseSet({0.1, 2.0, -3.0, 7.0})), 0.25, 1e-15);
}

TEST(PairwiseIdentity, Examples) {
  auto check = pairwise_identity_check(WavePhaseSet({0, 0}));
  EXPECT_NEAR(check.lhs, 4.0, 1e-15);
  EXPECT_NEAR(check.rhs, 4.0, 1e-15);
  EXPECT_NEAR(check.diff, 0.0, 1e-15);
  // Direct evaluation: 3 + 2(1/2 - 1 - 1/2) = 1 and |1 + e^{i pi/3} - 1|^2 = 1.
  check = pairwise_identity_check(WavePhaseSet({0, kPi / 3, kPi}));
  EXPECT_NEAR(check.lhs, 1.0, 1e-12);
  EXPECT_NEAR(check.rhs, 1.0, 1e-12);
  EXPECT_LE(check.diff, 1e-12);
}

TEST(PairwiseIdentity, RandomPhaseSets) {
  auto rng = slitspin::testing::rng(52);
  double worst = 0.0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (int k = 0; k < 10000; ++k) {
      std::vector<double> phases(n);
      for (auto& p : phases) p = slitspin::testing::uniform(rng, -30, 30);
      worst = std::max(worst, pairwise_identity_check(WavePhaseSet(phases)).diff);
    }
  }
  EXPECT_LE(worst, 1e-9);
}

TEST(WavePhaseSet, RejectsDegenerateInput) {
  EXPECT_THROW(WavePhaseSet({}), InvalidInputError);
  EXPECT_THROW(WavePhaseSet({0.0}), InvalidInputError);
  EXPECT_THROW(WavePhaseSet({0.0, INFINITY}), InvalidInputError);
}

}  // namespace
}  // namespace slitspin::oracle
