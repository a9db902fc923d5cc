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

// slitspin: fringe profiles from the spin-pair coupling model.
//
//   slitspin simulate [--config cfg.json] [overrides]
//   slitspin compare  [--config cfg.json] [overrides]
//   slitspin geometry [--config cfg.json] [overrides]
//   slitspin verify   [--mutate <law>]

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "config.hpp"
#include "runner.hpp"
#include "slitspin/errors.hpp"
#include "verify.hpp"

namespace {

using namespace slitspin::cli;

/// Flag values that take precedence over the config file.
struct Overrides {
  std::string config_path;
  std::optional<double> wavelength;
  std::optional<std::vector<double>> slit_positions;
  std::optional<std::size_t> slit_count;
  std::optional<double> separation;
  std::optional<double> screen_distance;
  std::optional<double> theta_min;
  std::optional<double> theta_max;
  std::optional<std::size_t> samples;
  std::optional<std::string> convention;
  std::optional<std::string> phase_source;
  std::optional<std::string> transmitted;
  std::optional<std::vector<std::size_t>> detection;
  bool no_detection = false;
  std::optional<int> sg_factor;
  std::optional<double> sg_axis;
  std::optional<double> i0;
  std::optional<std::string> format;
  std::optional<std::string> output;
};

void add_config_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("-c,--config", o.config_path, "JSON config file");
  cmd->add_option("--wavelength", o.wavelength, "Wavelength in meters");
  cmd->add_option("--slit-positions", o.slit_positions, "Slit coordinates in meters")->delimiter(',');
  cmd->add_option("--slit-count", o.slit_count, "Number of equally spaced slits");
  cmd->add_option("--separation", o.separation, "Slit spacing in meters");
  cmd->add_option("--screen-distance", o.screen_distance, "Aperture-to-screen distance in meters");
  cmd->add_option("--theta-min", o.theta_min, "First screen angle in radians");
  cmd->add_option("--theta-max", o.theta_max, "Last screen angle in radians");
  cmd->add_option("--samples", o.samples, "Number of screen angles");
  cmd->add_option("--convention", o.convention, "Phase convention: paper|half");
  cmd->add_option("--phase-source", o.phase_source, "Pair angle: optical|subtended");
  cmd->add_option("--transmitted", o.transmitted, "Registered pair state: u|v");
  cmd->add_option("--detect", o.detection, "Slits carrying a which-way detector")->delimiter(',');
  cmd->add_flag("--no-detect", o.no_detection, "Clear detectors set in the config file");
  cmd->add_option("--sg-factor", o.sg_factor, "Measured factor (1|2) of the spin stage");
  cmd->add_option("--sg-axis", o.sg_axis, "Axis angle of the spin stage in radians");
  cmd->add_option("--i0", o.i0, "Central intensity scale");
  cmd->add_option("--format", o.format, "Output format: csv|json");
  cmd->add_option("-o,--output", o.output, "Output file");
}

SimulationConfig build_config(const Overrides& o) {
  SimulationConfig cfg = o.config_path.empty() ? SimulationConfig{} : load_config(o.config_path);
  if (o.wavelength) cfg.wavelength = *o.wavelength;
  if (o.slit_positions) cfg.slit_positions = *o.slit_positions;
  if (o.slit_count || o.separation) cfg.slit_positions.clear();
  if (o.slit_count) cfg.slit_count = *o.slit_count;
  if (o.separation) cfg.separation = *o.separation;
  if (o.screen_distance) cfg.screen_distance = *o.screen_distance;
  if (o.theta_min) cfg.theta_min = *o.theta_min;
  if (o.theta_max) cfg.theta_max = *o.theta_max;
  if (o.samples) cfg.samples = *o.samples;
  if (o.convention) cfg.phase_convention = parse_convention(*o.convention);
  if (o.phase_source) cfg.phase_source = parse_phase_source(*o.phase_source);
  if (o.transmitted) cfg.transmitted = parse_transmitted(*o.transmitted);
  if (o.no_detection) cfg.detection.clear();
  if (o.detection) cfg.detection = *o.detection;
  if (o.sg_factor || o.sg_axis) {
    slitspin::MeasurementStage stage = cfg.sg_stage.value_or(slitspin::MeasurementStage{});
    if (o.sg_factor) stage.factor = *o.sg_factor;
    if (o.sg_axis) stage.axis_angle = *o.sg_axis;
    cfg.sg_stage = stage;
  }
  if (o.i0) cfg.i0 = *o.i0;
  if (o.format) cfg.output_format = parse_format(*o.format);
  if (o.output) cfg.output_path = *o.output;
  cfg.validate();
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spin-pair coupling model of multi-slit interference"};
  app.require_subcommand(1);

  Overrides simulate_opts, compare_opts, geometry_opts;
  auto* simulate = app.add_subcommand("simulate", "Write the fringe profile");
  add_config_options(simulate, simulate_opts);
  auto* compare = app.add_subcommand("compare", "Tabulate the model against the classical wave oracle");
  add_config_options(compare, compare_opts);
  auto* geometry = app.add_subcommand("geometry", "Dump incidence angles and pair phases per angle");
  add_config_options(geometry, geometry_opts);

  auto* verify = app.add_subcommand("verify", "Check every identity and oracle law");
  std::optional<std::string> mutate;
  bool list = false;
  verify->add_option("--mutate", mutate, "Inject a fault into the named law");
  verify->add_flag("--list", list, "Print the law names and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (*simulate) {
      const SimulationConfig cfg = build_config(simulate_opts);
      const auto profile = run_simulate(cfg);
      std::cout << "wrote " << profile.samples().size() << " samples to "
                << resolve_output_path(cfg.output_path).string()
                << " (visibility " << format_double(profile.visibility()) << ")\n";
    } else if (*compare) {
      const SimulationConfig cfg = build_config(compare_opts);
      const auto result = run_compare(cfg);
      std::cout << "max_abs_diff=" << format_double(result.max_abs_diff) << "\n";
    } else if (*geometry) {
      const SimulationConfig cfg = build_config(geometry_opts);
      run_geometry(cfg);
      std::cout << "wrote geometry table to " << resolve_output_path(cfg.output_path).string() << "\n";
    } else if (*verify) {
      if (list) {
        for (const auto& name : law_names()) std::cout << name << "\n";
        return kExitOk;
      }
      VerifyOptions options;
      options.mutate = mutate;
      const auto results = run_verify(options);
      std::cout << render_report(results);
      return all_passed(results) ? kExitOk : kExitVerifyFailed;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const slitspin::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitOk;
}
