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

#include "slitspin/oracle.hpp"

#include <cmath>
#include <complex>

#include "slitspin/errors.hpp"

namespace slitspin::oracle {
namespace {

double phasor_sum_norm(const std::vector<double>& phases) {
  std::complex<double> sum = 0.0;
  for (double phase : phases) sum += std::polar(1.0, phase);
  return std::norm(sum);
}

}  // namespace

WavePhaseSet::WavePhaseSet(std::vector<double> phases) : phases_(std::move(phases)) {
  if (phases_.size() < 2) throw InvalidInputError("wave phase set needs at least 2 slits");
  for (double phase : phases_) {
    if (!std::isfinite(phase)) throw InvalidInputError("wave phase is not finite");
  }
}

double classical_intensity(const WavePhaseSet& ws) {
  const double n = static_cast<double>(ws.size());
  return phasor_sum_norm(ws.phases()) / (n * n);
}

double independent_intensity(const WavePhaseSet& ws) {
  double sum = 0.0;
  for (double phase : ws.phases()) sum += std::norm(std::polar(1.0, phase));
  const double n = static_cast<double>(ws.size());
  return sum / (n * n);
}

PairwiseCheck pairwise_identity_check(const WavePhaseSet& ws) {
  const auto& phases = ws.phases();
  double pair_sum = 0.0;
  for (std::size_t i = 0; i < phases.size(); ++i) {
    for (std::size_t j = i + 1; j < phases.size(); ++j) pair_sum += std::cos(phases[i] - phases[j]);
  }
  const double lhs = static_cast<double>(phases.size()) + 2.0 * pair_sum;
  const double rhs = phasor_sum_norm(phases);
  return {lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace slitspin::oracle
