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

#include "slitspin/rotor.hpp"

#include <cmath>
#include <sstream>

#include "slitspin/errors.hpp"

namespace slitspin {

Matrix2 rotation_matrix(RotationAngle a) {
  const double c = std::cos(a.radians);
  const double s = std::sin(a.radians);
  return {{{c, s}, {-s, c}}};
}

TwoSpinState apply_pair(const PairRotation& rotation, const TwoSpinState& s) {
  const Matrix2 first = rotation_matrix(rotation.alpha);
  const Matrix2 second = rotation_matrix(rotation.beta);
  TwoSpinState out;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      Amplitude sum = 0.0;
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) {
          sum += first[i][k] * second[j][l] * s[2 * k + l];
        }
      }
      out[2 * i + j] = sum;
    }
  }
  return out;
}

UvCoefficients pair_on_u(RotationAngle alpha, RotationAngle beta) {
  const double diff = (beta - alpha).radians;
  return {std::cos(diff), -std::sin(diff)};
}

UvCoefficients pair_on_v(RotationAngle alpha, RotationAngle beta) {
  const double diff = (beta - alpha).radians;
  return {std::sin(diff), std::cos(diff)};
}

TwoSpinState compose_pair_state(const TwoSpinState& psi, RotationAngle beta,
                                RotationAngle gamma) {
  const UvDecomposition parts = decompose_uv(psi);
  if (!(parts.residual_norm <= kUvSpanTolerance)) {
    std::ostringstream msg;
    msg << "compose_pair_state: residual " << parts.residual_norm
        << " outside span{u, v} exceeds " << kUvSpanTolerance;
    throw NotInUvSpanError(msg.str());
  }
  return apply_pair(PairRotation{beta, gamma}, psi);
}

TwoSpinState pair_state(double phi) { return from_uv(std::cos(phi), -std::sin(phi)); }

}  // namespace slitspin
