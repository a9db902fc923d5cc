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

// Subcommand bodies. Each returns its data and writes nothing except
// through write_file_atomic, so tests can call them directly.

#include <filesystem>
#include <string>
#include <vector>

#include "config.hpp"
#include "slitspin/fringe.hpp"

namespace slitspin::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitConfigError = 2,
  kExitIoError = 3,
};

/// Writes to a sibling temporary and renames it over `path`.
/// Throws IoError on failure; `path` is never left half-written.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// %.17g: enough digits to read back the same double.
std::string format_double(double x);

FringeProfile compute_profile(const SimulationConfig& cfg);
std::string render_profile(const FringeProfile& profile, OutputFormat format);

/// Validates cfg, computes the profile and writes it to the resolved output path.
FringeProfile run_simulate(const SimulationConfig& cfg);

struct CompareRow {
  double theta;
  double model;
  double oracle;
  double abs_diff;
};

struct CompareResult {
  std::vector<CompareRow> rows;
  double max_abs_diff = 0.0;
};

/// Model profile next to the classical phasor-sum prediction at the same
/// angles (or the independent-slit prediction when a detector is present).
CompareResult compute_compare(const SimulationConfig& cfg);
std::string render_compare(const CompareResult& result, OutputFormat format);
CompareResult run_compare(const SimulationConfig& cfg);

/// Per-angle incidence angles, optical pair phases and subtended angles.
std::string render_geometry(const SimulationConfig& cfg);
void run_geometry(const SimulationConfig& cfg);

}  // namespace slitspin::cli
