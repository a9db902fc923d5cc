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
#include <limits>

#include "slitspin/errors.hpp"
#include "slitspin/qstate.hpp"
#include "test_oracles.hpp"

namespace slitspin {
namespace {

constexpr double kTol = 1e-12;
const double kR = 1.0 / std::sqrt(2.0);

void expect_state(const TwoSpinState& s, std::array<Amplitude, 4> want, double tol = kTol) {
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(s[i].real(), want[i].real(), tol) << "i=" << i << " (real)";
    EXPECT_NEAR(s[i].imag(), want[i].imag(), tol) << "i=" << i << " (imag)";
  }
}

TEST(Tensor, BasisKets) {
  expect_state(tensor(Spinor::up(), Spinor::up()), {1, 0, 0, 0});
  expect_state(tensor(Spinor::down(), Spinor::up()), {0, 0, 1, 0});
  expect_state(tensor(Spinor::up(), Spinor::down()), {0, 1, 0, 0});
}

TEST(Tensor, IsLinearInFirstFactor) {
  expect_state(tensor(Spinor{kR, kR}, Spinor::up()), {kR, 0, kR, 0});
}

TEST(Tensor, RejectsNonFinite) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(tensor(Spinor{nan, 0}, Spinor::up()), InvalidInputError);
  EXPECT_THROW(tensor(Spinor::up(), Spinor{0, Amplitude(0, INFINITY)}), InvalidInputError);
}

TEST(Tensor, NormIsMultiplicative) {
  auto g = testing::rng(11);
  for (int k = 0; k < 1000; ++k) {
    const Spinor a{{testing::uniform(g, -2, 2), testing::uniform(g, -2, 2)},
                   {testing::uniform(g, -2, 2), testing::uniform(g, -2, 2)}};
    const Spinor b{{testing::uniform(g, -2, 2), testing::uniform(g, -2, 2)},
                   {testing::uniform(g, -2, 2), testing::uniform(g, -2, 2)}};
    const double want = a.norm_squared() * b.norm_squared();
    EXPECT_NEAR(tensor(a, b).norm_squared(), want, kTol * std::max(1.0, want));
  }
}

TEST(Inner, Examples) {
  const auto u = basis_u();
  const auto v = basis_v();
  EXPECT_NEAR(std::abs(inner(u, u) - 1.0), 0.0, kTol);
  EXPECT_NEAR(std::abs(inner(v, v) - 1.0), 0.0, kTol);
  EXPECT_NEAR(std::abs(inner(u, v)), 0.0, kTol);
  EXPECT_NEAR(std::abs(inner(TwoSpinState::product_ket(ProductKet::kPlusPlus), u) - kR), 0.0, kTol);
  EXPECT_NEAR(std::abs(inner(TwoSpinState::product_ket(ProductKet::kPlusMinus), v) - kR), 0.0, kTol);
}

TEST(Inner, ConjugateLinearInFirstArgument) {
  const TwoSpinState s{{Amplitude(1, 2), 0.5, Amplitude(0, -1), 3}};
  const TwoSpinState t{{2, Amplitude(1, 1), 1, Amplitude(0, 4)}};
  const Amplitude i(0, 1);
  EXPECT_NEAR(std::abs(inner(i * s, t) - (-i) * inner(s, t)), 0.0, kTol);
  EXPECT_NEAR(std::abs(inner(s, i * t) - i * inner(s, t)), 0.0, kTol);
  EXPECT_NEAR(inner(s, s).real(), s.norm_squared(), kTol);
  EXPECT_NEAR(inner(s, s).imag(), 0.0, kTol);
}

TEST(Basis, Definitions) {
  expect_state(basis_u(), {0.7071067811865476, 0, 0, 0.7071067811865476});
  expect_state(basis_v(), {0, 0.7071067811865476, -0.7071067811865476, 0});
  EXPECT_TRUE(basis_u().is_normalized());
  EXPECT_TRUE(basis_v().is_normalized());
}

TEST(DecomposeUv, Examples) {
  auto parts = decompose_uv(basis_u());
  EXPECT_NEAR(std::abs(parts.c_u - 1.0), 0.0, kTol);
  EXPECT_NEAR(std::abs(parts.c_v), 0.0, kTol);
  EXPECT_NEAR(parts.residual_norm, 0.0, kTol);

  parts = decompose_uv(std::cos(0.3) * basis_u() - std::sin(0.3) * basis_v());
  EXPECT_NEAR(parts.c_u.real(), std::cos(0.3), kTol);
  EXPECT_NEAR(parts.c_v.real(), -std::sin(0.3), kTol);
  EXPECT_NEAR(parts.residual_norm, 0.0, kTol);
}

TEST(DecomposeUv, ProductKetAgainstGramSchmidt) {
  const auto parts = decompose_uv(TwoSpinState::product_ket(ProductKet::kPlusPlus));
  const auto oracle = testing::gram_schmidt_project({1, 0, 0, 0});
  EXPECT_NEAR(std::abs(parts.c_u - oracle.c_u), 0.0, kTol);
  EXPECT_NEAR(std::abs(parts.c_v - oracle.c_v), 0.0, kTol);
  EXPECT_NEAR(parts.residual_norm, oracle.residual, kTol);
  // Frozen from the oracle: (1/sqrt2, 0, 1/sqrt2).
  EXPECT_NEAR(parts.c_u.real(), kR, kTol);
  EXPECT_NEAR(std::abs(parts.c_v), 0.0, kTol);
  EXPECT_NEAR(parts.residual_norm, kR, kTol);
}

TEST(DecomposeUv, ReconstructsRandomStates) {
  auto g = testing::rng(12);
  for (int k = 0; k < 1000; ++k) {
    TwoSpinState s;
    for (auto& a : s.amplitudes) a = {testing::uniform(g, -1, 1), testing::uniform(g, -1, 1)};
    const auto parts = decompose_uv(s);
    const TwoSpinState in_span = from_uv(parts.c_u, parts.c_v);
    const TwoSpinState residual = s - in_span;
    EXPECT_NEAR(residual.norm(), parts.residual_norm, kTol);
    EXPECT_LE((in_span + residual).max_abs_diff(s), kTol);
    // The residual is orthogonal to both invariant states.
    EXPECT_LE(std::abs(inner(basis_u(), residual)), kTol);
    EXPECT_LE(std::abs(inner(basis_v(), residual)), kTol);
  }
}

TEST(Ensemble, EnforcesInvariants) {
  const auto pm = TwoSpinState::product_ket(ProductKet::kPlusMinus);
  const auto mp = TwoSpinState::product_ket(ProductKet::kMinusPlus);
  EXPECT_NO_THROW(Ensemble({{0.5, pm}, {0.5, mp}}));
  EXPECT_NO_THROW(Ensemble({{1.0, Spinor::up()}}));
  EXPECT_THROW(Ensemble({{0.5, pm}, {0.4, mp}}), InvalidInputError);
  EXPECT_THROW(Ensemble({{1.5, pm}, {-0.5, mp}}), InvalidInputError);
  EXPECT_THROW(Ensemble({{1.0, 2.0 * pm}}), InvalidInputError);
  EXPECT_THROW(Ensemble(std::vector<Ensemble::Entry>{}), InvalidInputError);
}

}  // namespace
}  // namespace slitspin
