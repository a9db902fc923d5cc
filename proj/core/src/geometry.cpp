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

#include "slitspin/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "slitspin/errors.hpp"

namespace slitspin {
namespace {

void check_pair(const SlitGeometry& g, std::size_t i, std::size_t j) {
  const std::size_t n = g.slit_count();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw SlitIndexError("slit pair (" + std::to_string(i) + ", " + std::to_string(j) +
                         ") out of range 1.." + std::to_string(n));
  }
  if (i == j) throw SlitIndexError("slit pair needs two distinct slits, got " + std::to_string(i));
}

}  // namespace

SlitGeometry::SlitGeometry(std::vector<double> slit_positions, double wavelength,
                           double screen_distance)
    : positions_(std::move(slit_positions)),
      wavelength_(wavelength),
      screen_distance_(screen_distance) {
  if (positions_.size() < 2) {
    throw GeometryError("at least 2 slits required, got " + std::to_string(positions_.size()));
  }
  for (std::size_t k = 0; k < positions_.size(); ++k) {
    if (!std::isfinite(positions_[k])) throw GeometryError("slit position is not finite");
    if (k > 0 && !(positions_[k] > positions_[k - 1])) {
      throw GeometryError("slit positions must be strictly increasing");
    }
  }
  if (!(wavelength_ > 0.0) || !std::isfinite(wavelength_)) {
    throw GeometryError("wavelength must be positive");
  }
  if (!(screen_distance_ > 0.0) || !std::isfinite(screen_distance_)) {
    throw GeometryError("screen distance must be positive");
  }
}

SlitGeometry SlitGeometry::uniform(std::size_t count, double separation, double wavelength,
                                   double screen_distance) {
  if (!(separation > 0.0)) throw GeometryError("slit separation must be positive");
  std::vector<double> positions(count);
  const double centre = 0.5 * static_cast<double>(count) - 0.5;
  for (std::size_t k = 0; k < count; ++k) {
    positions[k] = (static_cast<double>(k) - centre) * separation;
  }
  return SlitGeometry(std::move(positions), wavelength, screen_distance);
}

double SlitGeometry::position(std::size_t slit) const {
  if (slit < 1 || slit > positions_.size()) {
    throw SlitIndexError("slit " + std::to_string(slit) + " out of range 1.." +
                         std::to_string(positions_.size()));
  }
  return positions_[slit - 1];
}

ScreenPoint::ScreenPoint(double theta) : theta_(theta) {
  if (!(std::abs(theta) < std::numbers::pi / 2)) {
    throw GeometryError("screen angle must satisfy |theta| < pi/2, got " + std::to_string(theta));
  }
}

std::vector<double> incidence_angles(const SlitGeometry& g, const ScreenPoint& p) {
  const double distance = g.screen_distance();
  const double x = distance * std::tan(p.theta());
  std::vector<double> angles;
  angles.reserve(g.slit_count());
  for (double a : g.slit_positions()) angles.push_back(std::atan((x - a) / distance));
  return angles;
}

double pair_phase(const SlitGeometry& g, const ScreenPoint& p, std::size_t i, std::size_t j) {
  check_pair(g, i, j);
  // The separation is formed first so that swapping i and j flips the sign exactly.
  const double separation = g.position(j) - g.position(i);
  return 2.0 * std::numbers::pi * separation / g.wavelength() * std::sin(p.theta());
}

double subtended_angle(const SlitGeometry& g, const ScreenPoint& p, std::size_t i,
                       std::size_t j) {
  check_pair(g, i, j);
  const double distance = g.screen_distance();
  const double x = distance * std::tan(p.theta());
  return std::atan((x - g.position(i)) / distance) - std::atan((x - g.position(j)) / distance);
}

}  // namespace slitspin
