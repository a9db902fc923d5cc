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

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "slitspin/fringe.hpp"
#include "slitspin/geometry.hpp"

namespace slitspin::cli {

enum class OutputFormat { kCsv, kJson };

/// Environment variable that redirects relative output paths.
inline constexpr const char* kOutputDirEnv = "SLITSPIN_OUTPUT_DIR";

/// Rejected configuration value. `field()` names the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All lengths in meters, all angles in radians.
struct SimulationConfig {
  double wavelength = 500e-9;
  /// Explicit slit coordinates. When empty the layout is `slit_count` slits
  /// spaced `separation` apart and centred on the normal.
  std::vector<double> slit_positions;
  std::size_t slit_count = 2;
  double separation = 2e-6;
  double screen_distance = 1.0;
  double theta_min = -0.3;
  double theta_max = 0.3;
  std::size_t samples = 1001;
  PhaseConvention phase_convention = PhaseConvention::kHalf;
  PhaseSource phase_source = PhaseSource::kOptical;
  TransmittedChoice transmitted = TransmittedChoice::kU;
  std::vector<std::size_t> detection;
  std::optional<MeasurementStage> sg_stage;
  double i0 = 1.0;
  OutputFormat output_format = OutputFormat::kCsv;
  std::string output_path = "profile.csv";

  /// Throws ConfigError on the first invariant violation.
  void validate() const;

  SlitGeometry geometry() const;
  std::vector<double> slit_coordinates() const;
  /// `samples` evenly spaced angles from theta_min to theta_max inclusive.
  std::vector<double> theta_grid() const;
  ModelOptions model_options() const;
};

/// Parses a JSON config document. Unknown keys and mistyped values are
/// rejected with the key name. The result is not yet validated.
SimulationConfig config_from_json(const nlohmann::json& doc);
SimulationConfig load_config(const std::filesystem::path& path);
nlohmann::json config_to_json(const SimulationConfig& cfg);

PhaseConvention parse_convention(const std::string& text);
PhaseSource parse_phase_source(const std::string& text);
TransmittedChoice parse_transmitted(const std::string& text);
OutputFormat parse_format(const std::string& text);
std::string to_string(PhaseConvention convention);
std::string to_string(PhaseSource source);
std::string to_string(TransmittedChoice choice);
std::string to_string(OutputFormat format);

/// Applies the output-directory override to relative paths.
std::filesystem::path resolve_output_path(const std::string& path);

}  // namespace slitspin::cli
