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

// Classical wave reference. Works on raw per-slit phases only, so it shares
// no code with the spin-pair model it is used to check.

#include <cstddef>
#include <vector>

namespace slitspin::oracle {

/// Phase of each slit's unit phasor at one screen point.
class WavePhaseSet {
 public:
  /// Throws InvalidInputError for fewer than two phases or a non-finite one.
  explicit WavePhaseSet(std::vector<double> phases);

  const std::vector<double>& phases() const { return phases_; }
  std::size_t size() const { return phases_.size(); }

 private:
  std::vector<double> phases_;
};

/// |sum_k exp(i phi_k)|^2 / N^2.
double classical_intensity(const WavePhaseSet& ws);

/// sum_k |exp(i phi_k)|^2 / N^2 = 1/N.
double independent_intensity(const WavePhaseSet& ws);

struct PairwiseCheck {
  double lhs;  ///< N + 2 sum_{i<j} cos(phi_i - phi_j)
  double rhs;  ///< |sum_k exp(i phi_k)|^2
  double diff;
};

PairwiseCheck pairwise_identity_check(const WavePhaseSet& ws);

}  // namespace slitspin::oracle
