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

#include "slitspin/fringe.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "slitspin/errors.hpp"
#include "slitspin/rotor.hpp"

namespace slitspin {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
/// Distance from u below which detect_at_slit accepts its input.
constexpr double kCollapseTolerance = 1e-10;

double clamp_unit(double x) { return std::clamp(x, 0.0, 1.0); }

/// Rotated measurement basis vector: R(axis)|+> for outcome 0, R(axis)|-> for 1.
std::array<double, 2> axis_vector(double axis_angle, std::size_t outcome) {
  const Matrix2 r = rotation_matrix(RotationAngle{axis_angle});
  return {r[0][outcome], r[1][outcome]};
}

double point_intensity(const SlitGeometry& g, const ScreenPoint& p, const ModelOptions& options) {
  if (g.slit_count() == 2) {
    const PairState ps = two_slit_state_at(g, p, options.convention, options.source);
    if (options.stage) {
      const Ensemble e =
          measure_factor(ps.to_state(), options.stage->factor, options.stage->axis_angle);
      return clamp_unit(ensemble_transmission(e, options.transmitted));
    }
    return transmission_probability(ps, options.transmitted);
  }
  const double multi = multi_slit_intensity(g, p, options.convention, options.source);
  return options.transmitted == TransmittedChoice::kU ? multi : 1.0 - multi;
}

}  // namespace

double effective_phase(PhaseConvention convention, double phi) {
  return convention == PhaseConvention::kHalf ? 0.5 * phi : phi;
}

double pair_angle(const SlitGeometry& g, const ScreenPoint& p, std::size_t i, std::size_t j,
                  PhaseSource source) {
  return source == PhaseSource::kOptical ? pair_phase(g, p, i, j) : subtended_angle(g, p, i, j);
}

PairState PairState::from_phase(double phi_eff) {
  return {phi_eff, std::cos(phi_eff), -std::sin(phi_eff)};
}

TwoSpinState PairState::to_state() const { return from_uv(c_u, c_v); }

PairState two_slit_state_at(const SlitGeometry& g, const ScreenPoint& p,
                            PhaseConvention convention, PhaseSource source) {
  if (g.slit_count() != 2) {
    throw GeometryError("two-slit pair state needs exactly 2 slits, got " +
                        std::to_string(g.slit_count()));
  }
  return PairState::from_phase(effective_phase(convention, pair_angle(g, p, 1, 2, source)));
}

double transmission_probability(const PairState& ps, TransmittedChoice choice) {
  const double c = choice == TransmittedChoice::kU ? ps.c_u : ps.c_v;
  return clamp_unit(c * c);
}

FringeProfile::FringeProfile(std::vector<FringeSample> samples, double i0)
    : samples_(std::move(samples)), i0_(i0) {
  if (!(i0_ > 0.0) || !std::isfinite(i0_)) throw InvalidInputError("profile: i0 must be positive");
  for (std::size_t k = 0; k < samples_.size(); ++k) {
    if (k > 0 && !(samples_[k].theta > samples_[k - 1].theta)) {
      throw InvalidInputError("profile: thetas must be strictly increasing");
    }
    const double value = samples_[k].intensity;
    if (!(value >= 0.0 && value <= i0_)) {
      throw InvalidInputError("profile: intensity outside [0, i0]");
    }
  }
}

double FringeProfile::max_intensity() const {
  double best = 0.0;
  for (const auto& s : samples_) best = std::max(best, s.intensity);
  return best;
}

double FringeProfile::min_intensity() const {
  if (samples_.empty()) return 0.0;
  double worst = samples_.front().intensity;
  for (const auto& s : samples_) worst = std::min(worst, s.intensity);
  return worst;
}

double FringeProfile::visibility() const {
  const double hi = max_intensity();
  const double lo = min_intensity();
  return hi + lo > 0.0 ? (hi - lo) / (hi + lo) : 0.0;
}

FringeProfile intensity_profile(const SlitGeometry& g, std::span<const double> thetas,
                                const ModelOptions& options,
                                std::span<const std::size_t> detection) {
  if (thetas.empty()) throw InvalidInputError("theta grid is empty");
  for (std::size_t k = 1; k < thetas.size(); ++k) {
    if (!(thetas[k] > thetas[k - 1])) {
      throw InvalidInputError("theta grid must be strictly increasing");
    }
  }
  for (std::size_t slit : detection) {
    if (slit < 1 || slit > g.slit_count()) {
      throw SlitIndexError("detector slit " + std::to_string(slit) + " out of range 1.." +
                           std::to_string(g.slit_count()));
    }
  }
  if (options.stage && g.slit_count() != 2) {
    throw GeometryError("measurement stage needs exactly 2 slits");
  }

  const double n = static_cast<double>(g.slit_count());
  std::vector<FringeSample> samples;
  samples.reserve(thetas.size());
  for (double theta : thetas) {
    const ScreenPoint p(theta);
    // A detector leaves independent single-slit contributions of 1/N each.
    const double fraction = detection.empty() ? point_intensity(g, p, options) : 1.0 / n;
    samples.push_back({theta, options.i0 * fraction});
  }
  return FringeProfile(std::move(samples), options.i0);
}

DetectedSpinor detect_at_slit(const TwoSpinState& s, std::size_t slit) {
  if (slit != 1 && slit != 2) {
    throw SlitIndexError("detector slit must be 1 or 2, got " + std::to_string(slit));
  }
  const double distance = s.max_abs_diff(basis_u());
  if (!(distance <= kCollapseTolerance)) {
    std::ostringstream msg;
    msg << "which-way collapse is defined only on u; input differs by " << distance;
    throw UnsupportedCollapseError(msg.str());
  }
  return {Spinor{kInvSqrt2, kInvSqrt2}, slit};
}

Ensemble measure_factor(const TwoSpinState& s, int factor, double axis_angle) {
  if (factor != 1 && factor != 2) {
    throw InvalidInputError("measured factor must be 1 or 2, got " + std::to_string(factor));
  }
  if (!s.is_finite() || !std::isfinite(axis_angle)) {
    throw InvalidInputError("measure_factor: non-finite input");
  }
  const double total = s.norm_squared();
  if (!(total > 0.0)) throw InvalidInputError("measure_factor: zero-norm state");

  std::vector<Ensemble::Entry> entries;
  for (std::size_t outcome = 0; outcome < 2; ++outcome) {
    const auto b = axis_vector(axis_angle, outcome);
    TwoSpinState projected;
    for (std::size_t other = 0; other < 2; ++other) {
      // Component of the measured factor along b, with the other factor fixed.
      const auto at = [&](std::size_t measured) {
        return factor == 1 ? 2 * measured + other : 2 * other + measured;
      };
      const Amplitude overlap = b[0] * s[at(0)] + b[1] * s[at(1)];
      projected[at(0)] = b[0] * overlap;
      projected[at(1)] = b[1] * overlap;
    }
    const double mass = projected.norm_squared();
    const double weight = std::min(mass / total, 1.0);
    if (weight <= kNegligibleWeight) continue;
    projected *= 1.0 / std::sqrt(mass);
    entries.push_back({weight, projected});
  }
  return Ensemble(std::move(entries));
}

double ensemble_transmission(const Ensemble& e, TransmittedChoice choice) {
  const TwoSpinState target = choice == TransmittedChoice::kU ? basis_u() : basis_v();
  double sum = 0.0;
  for (const auto& entry : e.entries()) {
    const auto* state = std::get_if<TwoSpinState>(&entry.state);
    if (state == nullptr) {
      throw InvalidInputError("ensemble_transmission: entry is a single-spin state");
    }
    sum += entry.weight * std::norm(inner(target, *state));
  }
  return sum;
}

double multi_slit_intensity(const SlitGeometry& g, const ScreenPoint& p,
                            PhaseConvention convention, PhaseSource source) {
  const std::size_t n = g.slit_count();
  double pair_sum = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      pair_sum += std::cos(2.0 * effective_phase(convention, pair_angle(g, p, i, j, source)));
    }
  }
  const double count = static_cast<double>(n);
  return clamp_unit((count + 2.0 * pair_sum) / (count * count));
}

}  // namespace slitspin
