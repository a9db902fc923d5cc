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

// Far-field slit layout. Slits are numbered from 1 in order of increasing
// transverse position; screen points are addressed by the angle theta from
// the central normal.

#include <cstddef>
#include <span>
#include <vector>

namespace slitspin {

class SlitGeometry {
 public:
  /// Throws GeometryError unless there are at least two strictly
  /// increasing finite positions, wavelength > 0 and screen_distance > 0.
  SlitGeometry(std::vector<double> slit_positions, double wavelength, double screen_distance);

  /// `count` slits spaced `separation` apart, centred on the normal.
  static SlitGeometry uniform(std::size_t count, double separation, double wavelength,
                              double screen_distance);

  std::span<const double> slit_positions() const { return positions_; }
  std::size_t slit_count() const { return positions_.size(); }
  double wavelength() const { return wavelength_; }
  double screen_distance() const { return screen_distance_; }

  /// Transverse position of slit `slit` (1-based). Throws SlitIndexError.
  double position(std::size_t slit) const;

 private:
  std::vector<double> positions_;
  double wavelength_;
  double screen_distance_;
};

class ScreenPoint {
 public:
  /// Throws GeometryError unless |theta| < pi/2.
  explicit ScreenPoint(double theta);

  double theta() const { return theta_; }

 private:
  double theta_;
};

/// Angle of incidence at p of the straight ray from each slit:
/// atan((L tan(theta) - a_i) / L). Exact geometry.
std::vector<double> incidence_angles(const SlitGeometry& g, const ScreenPoint& p);

/// Optical phase 2*pi*(a_j - a_i)/lambda * sin(theta) between slits i and j.
/// Throws SlitIndexError on an out-of-range or repeated index.
double pair_phase(const SlitGeometry& g, const ScreenPoint& p, std::size_t i, std::size_t j);

/// alpha_i - alpha_j from incidence_angles. Diagnostic counterpart of pair_phase.
double subtended_angle(const SlitGeometry& g, const ScreenPoint& p, std::size_t i,
                       std::size_t j);

}  // namespace slitspin
