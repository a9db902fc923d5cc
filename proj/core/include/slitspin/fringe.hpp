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

// Screen-level model: the pair state reaching each screen point, the
// probability that it registers, which-way collapse, and projective spin
// measurement of one tensor factor.
//
// At a screen point the two apertures leave the pair in
//   cos(phi) u - sin(phi) v,
// where phi is the effective relative rotation. One of u, v registers on the
// screen and the other is absorbed; which one is a free choice.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "slitspin/geometry.hpp"
#include "slitspin/qstate.hpp"

namespace slitspin {

/// How the optical phase maps onto the rotation angle of the pair state.
enum class PhaseConvention {
  /// phi_eff = phi; intensity cos^2(phi), maxima at d sin(theta) = m lambda / 2.
  kPaper,
  /// phi_eff = phi / 2; intensity cos^2(phi / 2), the classical two-slit pattern.
  kHalf,
};

/// Which invariant pair state registers on the screen.
enum class TransmittedChoice { kU, kV };

/// Source of the raw pair angle phi_ij.
enum class PhaseSource {
  /// 2*pi*(a_j - a_i)/lambda * sin(theta).
  kOptical,
  /// Geometric angle between the two rays meeting at the screen point.
  kSubtended,
};

double effective_phase(PhaseConvention convention, double phi);

/// Raw pair angle between slits i and j (1-based) under `source`.
double pair_angle(const SlitGeometry& g, const ScreenPoint& p, std::size_t i, std::size_t j,
                  PhaseSource source);

/// cos(phi) u - sin(phi) v, kept as its angle and real coordinates.
struct PairState {
  double phi;
  double c_u;
  double c_v;

  static PairState from_phase(double phi_eff);
  TwoSpinState to_state() const;
};

/// Throws GeometryError unless g has exactly two slits.
PairState two_slit_state_at(const SlitGeometry& g, const ScreenPoint& p,
                            PhaseConvention convention,
                            PhaseSource source = PhaseSource::kOptical);

/// c_u^2 when u is transmitted, c_v^2 when v is.
double transmission_probability(const PairState& ps, TransmittedChoice choice);

/// Ideal spin measurement on one factor (1 or 2) of the pair, along the
/// basis R(axis_angle){|+>, |->}.
struct MeasurementStage {
  int factor = 1;
  double axis_angle = 0.0;
};

struct ModelOptions {
  PhaseConvention convention = PhaseConvention::kHalf;
  TransmittedChoice transmitted = TransmittedChoice::kU;
  PhaseSource source = PhaseSource::kOptical;
  /// Intensity of the central maximum.
  double i0 = 1.0;
  /// Measurement applied to the pair between the slits and the screen.
  /// Only defined for two slits.
  std::optional<MeasurementStage> stage;
};

struct FringeSample {
  double theta;
  double intensity;
};

/// Screen-angle to intensity curve. Construction enforces strictly
/// increasing angles, i0 > 0, and intensities within [0, i0].
class FringeProfile {
 public:
  FringeProfile(std::vector<FringeSample> samples, double i0);

  std::span<const FringeSample> samples() const { return samples_; }
  double i0() const { return i0_; }
  double max_intensity() const;
  double min_intensity() const;
  /// (max - min) / (max + min); 0 for an all-dark profile.
  double visibility() const;

 private:
  std::vector<FringeSample> samples_;
  double i0_;
};

/// Intensity over a strictly increasing theta grid.
///
/// With no detection the two-slit profile is i0 times the transmission
/// probability (after the optional measurement stage), and the N-slit profile
/// is i0 times multi_slit_intensity (or its complement when v is
/// transmitted). Any detector (1-based slit numbers in `detection`) breaks
/// the pair correlation and the profile is flat at i0 / N.
///
/// Throws InvalidInputError for an empty or non-increasing grid,
/// SlitIndexError for a bad detector slit and GeometryError for angles
/// outside (-pi/2, pi/2) or a measurement stage on more than two slits.
FringeProfile intensity_profile(const SlitGeometry& g, std::span<const double> thetas,
                                const ModelOptions& options,
                                std::span<const std::size_t> detection = {});

/// Single-particle state left by a detector at slit 1 or 2.
struct DetectedSpinor {
  Spinor state;
  std::size_t slit;
};

/// Which-way collapse P_i of the transmitted state u onto
/// (|+> + |->)/sqrt2 at aperture `slit`. Defined only for u; any other input
/// throws UnsupportedCollapseError.
DetectedSpinor detect_at_slit(const TwoSpinState& s, std::size_t slit);

/// Outcomes below this weight are dropped from measurement ensembles.
inline constexpr double kNegligibleWeight = 1e-24;

/// Projective measurement of tensor factor 1 or 2 along
/// R(axis_angle){|+>, |->}. Entries are ordered (+, -) and carry the
/// normalized collapsed pair state. Throws InvalidInputError on a zero-norm
/// or non-finite input or a factor other than 1 or 2.
Ensemble measure_factor(const TwoSpinState& s, int factor, double axis_angle);

/// Sum of weight * |<transmitted|state>|^2. Throws InvalidInputError if
/// any entry is a single-spin state.
double ensemble_transmission(const Ensemble& e, TransmittedChoice choice);

/// (N + 2 sum_{i<j} cos(2 phi_eff,ij)) / N^2. For two slits this equals
/// cos^2(phi_eff); under the half convention it is the classical grating
/// pattern |sum_k exp(i phi_k)|^2 / N^2.
double multi_slit_intensity(const SlitGeometry& g, const ScreenPoint& p,
                            PhaseConvention convention,
                            PhaseSource source = PhaseSource::kOptical);

}  // namespace slitspin
