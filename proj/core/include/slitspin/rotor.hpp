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

#pragma once

#include <array>

#include "slitspin/qstate.hpp"

namespace slitspin {

/// Planar rotation angle in radians. Never reduced modulo 2*pi.
struct RotationAngle {
  double radians = 0.0;

  constexpr RotationAngle() = default;
  constexpr explicit RotationAngle(double r) : radians(r) {}

  friend constexpr RotationAngle operator+(RotationAngle a, RotationAngle b) {
    return RotationAngle{a.radians + b.radians};
  }
  friend constexpr RotationAngle operator-(RotationAngle a, RotationAngle b) {
    return RotationAngle{a.radians - b.radians};
  }
  friend constexpr bool operator==(RotationAngle, RotationAngle) = default;
};

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// [[cos a, sin a], [-sin a, cos a]].
Matrix2 rotation_matrix(RotationAngle a);

/// R(alpha) on the first tensor factor and R(beta) on the second.
struct PairRotation {
  RotationAngle alpha;
  RotationAngle beta;

  /// Rotation that acts on the second factor only, by beta - alpha. Equal on
  /// span{u, v} to the full pair rotation.
  PairRotation reduced() const { return {RotationAngle{}, beta - alpha}; }
};

/// The literal operator R(alpha) (x) R(beta) on the whole 4-dim space.
TwoSpinState apply_pair(const PairRotation& rotation, const TwoSpinState& s);

/// Real coordinates in the {u, v} basis.
struct UvCoefficients {
  double c_u;
  double c_v;
};

/// Coordinates of (R(alpha), R(beta)) u: (cos(beta-alpha), -sin(beta-alpha)).
UvCoefficients pair_on_u(RotationAngle alpha, RotationAngle beta);

/// Coordinates of (R(alpha), R(beta)) v: (sin(beta-alpha), cos(beta-alpha)).
UvCoefficients pair_on_v(RotationAngle alpha, RotationAngle beta);

/// Largest residual outside span{u, v} accepted by compose_pair_state.
inline constexpr double kUvSpanTolerance = 1e-10;

/// Carries a pair state from one aperture pair to the next: applies
/// (R(beta), R(gamma)). When psi = cos(p) u - sin(p) v the result is
/// cos(p + gamma - beta) u - sin(p + gamma - beta) v.
/// Throws NotInUvSpanError if psi has a component outside span{u, v}.
TwoSpinState compose_pair_state(const TwoSpinState& psi, RotationAngle beta,
                                RotationAngle gamma);

/// cos(phi) u - sin(phi) v, the pair state for relative rotation phi.
TwoSpinState pair_state(double phi);

}  // namespace slitspin
