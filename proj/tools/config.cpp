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

#include "config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <set>

#include "slitspin/errors.hpp"

namespace slitspin::cli {
namespace {

using nlohmann::json;

double number(const json& doc, const char* key) {
  if (!doc.is_number()) throw ConfigError(key, "expected a number");
  return doc.get<double>();
}

std::size_t count(const json& doc, const char* key) {
  if (!doc.is_number_integer() || doc.get<long long>() < 0) {
    throw ConfigError(key, "expected a non-negative integer");
  }
  return doc.get<std::size_t>();
}

std::string text(const json& doc, const char* key) {
  if (!doc.is_string()) throw ConfigError(key, "expected a string");
  return doc.get<std::string>();
}

template <typename Parse>
auto parse_field(const json& doc, const char* key, Parse parse) {
  const std::string value = text(doc, key);
  try {
    return parse(value);
  } catch (const ConfigError& e) {
    throw ConfigError(key, e.what());
  }
}

}  // namespace

PhaseConvention parse_convention(const std::string& value) {
  if (value == "paper") return PhaseConvention::kPaper;
  if (value == "half") return PhaseConvention::kHalf;
  throw ConfigError("phase_convention", "expected 'paper' or 'half', got '" + value + "'");
}

PhaseSource parse_phase_source(const std::string& value) {
  if (value == "optical") return PhaseSource::kOptical;
  if (value == "subtended") return PhaseSource::kSubtended;
  throw ConfigError("phase_source", "expected 'optical' or 'subtended', got '" + value + "'");
}

TransmittedChoice parse_transmitted(const std::string& value) {
  if (value == "u") return TransmittedChoice::kU;
  if (value == "v") return TransmittedChoice::kV;
  throw ConfigError("transmitted", "expected 'u' or 'v', got '" + value + "'");
}

OutputFormat parse_format(const std::string& value) {
  if (value == "csv") return OutputFormat::kCsv;
  if (value == "json") return OutputFormat::kJson;
  throw ConfigError("output_format", "expected 'csv' or 'json', got '" + value + "'");
}

std::string to_string(PhaseConvention convention) {
  return convention == PhaseConvention::kPaper ? "paper" : "half";
}
std::string to_string(PhaseSource source) {
  return source == PhaseSource::kOptical ? "optical" : "subtended";
}
std::string to_string(TransmittedChoice choice) {
  return choice == TransmittedChoice::kU ? "u" : "v";
}
std::string to_string(OutputFormat format) {
  return format == OutputFormat::kCsv ? "csv" : "json";
}

SimulationConfig config_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("<root>", "config must be a JSON object");
  SimulationConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    const char* k = key.c_str();
    if (key == "wavelength") {
      cfg.wavelength = number(value, k);
    } else if (key == "slit_positions") {
      if (!value.is_array()) throw ConfigError(key, "expected an array of numbers");
      cfg.slit_positions.clear();
      for (const auto& item : value) cfg.slit_positions.push_back(number(item, k));
    } else if (key == "slit_count") {
      cfg.slit_count = count(value, k);
    } else if (key == "separation") {
      cfg.separation = number(value, k);
    } else if (key == "screen_distance") {
      cfg.screen_distance = number(value, k);
    } else if (key == "theta_min") {
      cfg.theta_min = number(value, k);
    } else if (key == "theta_max") {
      cfg.theta_max = number(value, k);
    } else if (key == "samples") {
      cfg.samples = count(value, k);
    } else if (key == "phase_convention") {
      cfg.phase_convention = parse_field(value, k, parse_convention);
    } else if (key == "phase_source") {
      cfg.phase_source = parse_field(value, k, parse_phase_source);
    } else if (key == "transmitted") {
      cfg.transmitted = parse_field(value, k, parse_transmitted);
    } else if (key == "detection") {
      if (!value.is_array()) throw ConfigError(key, "expected an array of slit numbers");
      cfg.detection.clear();
      for (const auto& item : value) cfg.detection.push_back(count(item, k));
    } else if (key == "sg_stage") {
      if (value.is_null()) {
        cfg.sg_stage.reset();
        continue;
      }
      if (!value.is_object()) throw ConfigError(key, "expected {\"factor\": 1|2, \"axis_angle\": x}");
      MeasurementStage stage;
      for (const auto& [sub, sub_value] : value.items()) {
        if (sub == "factor") {
          stage.factor = static_cast<int>(count(sub_value, "sg_stage.factor"));
        } else if (sub == "axis_angle") {
          stage.axis_angle = number(sub_value, "sg_stage.axis_angle");
        } else {
          throw ConfigError("sg_stage." + sub, "unknown key");
        }
      }
      cfg.sg_stage = stage;
    } else if (key == "i0") {
      cfg.i0 = number(value, k);
    } else if (key == "output_format") {
      cfg.output_format = parse_field(value, k, parse_format);
    } else if (key == "output_path") {
      cfg.output_path = text(value, k);
    } else {
      throw ConfigError(key, "unknown key");
    }
  }
  return cfg;
}

SimulationConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("<root>", std::string("malformed JSON: ") + e.what());
  }
  return config_from_json(doc);
}

json config_to_json(const SimulationConfig& cfg) {
  json doc = {
      {"wavelength", cfg.wavelength},
      {"screen_distance", cfg.screen_distance},
      {"theta_min", cfg.theta_min},
      {"theta_max", cfg.theta_max},
      {"samples", cfg.samples},
      {"phase_convention", to_string(cfg.phase_convention)},
      {"phase_source", to_string(cfg.phase_source)},
      {"transmitted", to_string(cfg.transmitted)},
      {"detection", cfg.detection},
      {"i0", cfg.i0},
      {"output_format", to_string(cfg.output_format)},
      {"output_path", cfg.output_path},
  };
  if (cfg.slit_positions.empty()) {
    doc["slit_count"] = cfg.slit_count;
    doc["separation"] = cfg.separation;
  } else {
    doc["slit_positions"] = cfg.slit_positions;
  }
  if (cfg.sg_stage) {
    doc["sg_stage"] = {{"factor", cfg.sg_stage->factor}, {"axis_angle", cfg.sg_stage->axis_angle}};
  }
  return doc;
}

void SimulationConfig::validate() const {
  const auto finite_positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!finite_positive(wavelength)) throw ConfigError("wavelength", "must be positive");
  if (!finite_positive(screen_distance)) throw ConfigError("screen_distance", "must be positive");
  if (slit_positions.empty()) {
    if (slit_count < 2) throw ConfigError("slit_count", "at least 2 slits required");
    if (!finite_positive(separation)) throw ConfigError("separation", "must be positive");
  } else {
    if (slit_positions.size() < 2) throw ConfigError("slit_positions", "at least 2 slits required");
    for (std::size_t k = 0; k < slit_positions.size(); ++k) {
      if (!std::isfinite(slit_positions[k])) throw ConfigError("slit_positions", "must be finite");
      if (k > 0 && !(slit_positions[k] > slit_positions[k - 1])) {
        throw ConfigError("slit_positions", "must be strictly increasing");
      }
    }
  }
  constexpr double kHalfPi = std::numbers::pi / 2;
  if (!(std::abs(theta_min) < kHalfPi)) throw ConfigError("theta_min", "must lie in (-pi/2, pi/2)");
  if (!(std::abs(theta_max) < kHalfPi)) throw ConfigError("theta_max", "must lie in (-pi/2, pi/2)");
  if (!(theta_max > theta_min)) throw ConfigError("theta_max", "must exceed theta_min");
  if (samples < 2) throw ConfigError("samples", "at least 2 samples required");
  const std::size_t n = slit_positions.empty() ? slit_count : slit_positions.size();
  std::set<std::size_t> seen;
  for (std::size_t slit : detection) {
    if (slit < 1 || slit > n) {
      throw ConfigError("detection", "slit " + std::to_string(slit) + " out of range 1.." +
                                         std::to_string(n));
    }
    if (!seen.insert(slit).second) {
      throw ConfigError("detection", "slit " + std::to_string(slit) + " listed twice");
    }
  }
  if (sg_stage) {
    if (sg_stage->factor != 1 && sg_stage->factor != 2) {
      throw ConfigError("sg_stage.factor", "must be 1 or 2");
    }
    if (!std::isfinite(sg_stage->axis_angle)) {
      throw ConfigError("sg_stage.axis_angle", "must be finite");
    }
    if (n != 2) throw ConfigError("sg_stage", "measurement stage needs exactly 2 slits");
  }
  if (!finite_positive(i0)) throw ConfigError("i0", "must be positive");
  if (output_path.empty()) throw ConfigError("output_path", "must not be empty");
}

std::vector<double> SimulationConfig::slit_coordinates() const {
  if (!slit_positions.empty()) return slit_positions;
  std::vector<double> positions(slit_count);
  const double centre = 0.5 * static_cast<double>(slit_count) - 0.5;
  for (std::size_t k = 0; k < slit_count; ++k) {
    positions[k] = (static_cast<double>(k) - centre) * separation;
  }
  return positions;
}

SlitGeometry SimulationConfig::geometry() const {
  try {
    return SlitGeometry(slit_coordinates(), wavelength, screen_distance);
  } catch (const GeometryError& e) {
    throw ConfigError("slit_positions", e.what());
  }
}

std::vector<double> SimulationConfig::theta_grid() const {
  std::vector<double> grid(samples);
  const double last = static_cast<double>(samples - 1);
  for (std::size_t k = 0; k < samples; ++k) {
    // Both weights are exact ratios, so a symmetric range yields a grid that
    // is exactly antisymmetric about its midpoint.
    const double lower_weight = static_cast<double>(samples - 1 - k) / last;
    const double upper_weight = static_cast<double>(k) / last;
    grid[k] = theta_min * lower_weight + theta_max * upper_weight;
  }
  grid.back() = theta_max;
  return grid;
}

ModelOptions SimulationConfig::model_options() const {
  ModelOptions options;
  options.convention = phase_convention;
  options.transmitted = transmitted;
  options.source = phase_source;
  options.i0 = i0;
  options.stage = sg_stage;
  return options;
}

std::filesystem::path resolve_output_path(const std::string& path) {
  std::filesystem::path out(path);
  const char* dir = std::getenv(kOutputDirEnv);
  if (dir != nullptr && *dir != '\0' && out.is_relative()) return std::filesystem::path(dir) / out;
  return out;
}

}  // namespace slitspin::cli
