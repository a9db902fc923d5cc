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

#include "runner.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <system_error>

#include "json.hpp"
#include "slitspin/errors.hpp"
#include "slitspin/geometry.hpp"
#include "slitspin/oracle.hpp"

#include <unistd.h>

namespace slitspin::cli {
namespace {

using nlohmann::json;

std::string to_text(const json& doc) { return doc.dump(2) + "\n"; }

/// Per-slit phases 2*pi*a_k*sin(theta)/lambda straight from the config,
/// bypassing the geometry module.
oracle::WavePhaseSet oracle_phases(const std::vector<double>& positions, double wavelength,
                                   double theta) {
  std::vector<double> phases;
  phases.reserve(positions.size());
  for (double a : positions) {
    phases.push_back(2.0 * std::numbers::pi * a * std::sin(theta) / wavelength);
  }
  return oracle::WavePhaseSet(std::move(phases));
}

}  // namespace

std::string format_double(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot move output into " + path.string() + ": " + ec.message());
  }
}

FringeProfile compute_profile(const SimulationConfig& cfg) {
  cfg.validate();
  const SlitGeometry g = cfg.geometry();
  const std::vector<double> grid = cfg.theta_grid();
  return intensity_profile(g, grid, cfg.model_options(), cfg.detection);
}

std::string render_profile(const FringeProfile& profile, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    json samples = json::array();
    for (const auto& s : profile.samples()) {
      samples.push_back({{"theta", s.theta}, {"intensity", s.intensity}});
    }
    return to_text({{"i0", profile.i0()}, {"samples", std::move(samples)}});
  }
  std::string out = "theta,intensity\n";
  for (const auto& s : profile.samples()) {
    out += format_double(s.theta) + "," + format_double(s.intensity) + "\n";
  }
  return out;
}

FringeProfile run_simulate(const SimulationConfig& cfg) {
  FringeProfile profile = compute_profile(cfg);
  write_file_atomic(resolve_output_path(cfg.output_path), render_profile(profile, cfg.output_format));
  return profile;
}

CompareResult compute_compare(const SimulationConfig& cfg) {
  const FringeProfile profile = compute_profile(cfg);
  const std::vector<double> positions = cfg.slit_coordinates();
  CompareResult result;
  result.rows.reserve(profile.samples().size());
  for (const auto& s : profile.samples()) {
    const auto phases = oracle_phases(positions, cfg.wavelength, s.theta);
    const double fraction = cfg.detection.empty() ? oracle::classical_intensity(phases)
                                                  : oracle::independent_intensity(phases);
    const double predicted = cfg.i0 * fraction;
    const double diff = std::abs(s.intensity - predicted);
    result.rows.push_back({s.theta, s.intensity, predicted, diff});
    result.max_abs_diff = std::max(result.max_abs_diff, diff);
  }
  return result;
}

std::string render_compare(const CompareResult& result, OutputFormat format) {
  if (format == OutputFormat::kJson) {
    json rows = json::array();
    for (const auto& r : result.rows) {
      rows.push_back(
          {{"theta", r.theta}, {"intensity", r.model}, {"oracle", r.oracle}, {"abs_diff", r.abs_diff}});
    }
    return to_text({{"samples", std::move(rows)}, {"max_abs_diff", result.max_abs_diff}});
  }
  std::string out = "theta,intensity,oracle,abs_diff\n";
  for (const auto& r : result.rows) {
    out += format_double(r.theta) + "," + format_double(r.model) + "," + format_double(r.oracle) +
           "," + format_double(r.abs_diff) + "\n";
  }
  return out;
}

CompareResult run_compare(const SimulationConfig& cfg) {
  CompareResult result = compute_compare(cfg);
  write_file_atomic(resolve_output_path(cfg.output_path), render_compare(result, cfg.output_format));
  return result;
}

std::string render_geometry(const SimulationConfig& cfg) {
  cfg.validate();
  const SlitGeometry g = cfg.geometry();
  const std::size_t n = g.slit_count();
  const std::vector<double> grid = cfg.theta_grid();

  if (cfg.output_format == OutputFormat::kJson) {
    json samples = json::array();
    for (double theta : grid) {
      const ScreenPoint p(theta);
      json pairs = json::array();
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j) {
          pairs.push_back({{"i", i},
                           {"j", j},
                           {"phi", pair_phase(g, p, i, j)},
                           {"subtended", subtended_angle(g, p, i, j)}});
        }
      }
      samples.push_back({{"theta", theta}, {"alpha", incidence_angles(g, p)}, {"pairs", pairs}});
    }
    return to_text({{"slit_positions", g.slit_positions()},
                    {"wavelength", g.wavelength()},
                    {"screen_distance", g.screen_distance()},
                    {"samples", std::move(samples)}});
  }

  std::string out = "theta";
  for (std::size_t i = 1; i <= n; ++i) out += ",alpha_" + std::to_string(i);
  for (const char* prefix : {"phi", "subtended"}) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        out += std::string(",") + prefix + "_" + std::to_string(i) + "_" + std::to_string(j);
      }
    }
  }
  out += "\n";
  for (double theta : grid) {
    const ScreenPoint p(theta);
    out += format_double(theta);
    for (double alpha : incidence_angles(g, p)) out += "," + format_double(alpha);
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) out += "," + format_double(pair_phase(g, p, i, j));
    }
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        out += "," + format_double(subtended_angle(g, p, i, j));
      }
    }
    out += "\n";
  }
  return out;
}

void run_geometry(const SimulationConfig& cfg) {
  write_file_atomic(resolve_output_path(cfg.output_path), render_geometry(cfg));
}

}  // namespace slitspin::cli
