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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace slitspin::cli {

struct LawResult {
  std::string name;
  double max_error;
  double tolerance;
  std::size_t trials;
  bool passed;
};

struct VerifyOptions {
  /// Name of one law whose model side gets a deliberate fault, to show
  /// that the suite can fail.
  std::optional<std::string> mutate;
  std::uint64_t seed = 20260101;
};

/// Names of every law run_verify checks, in report order.
std::vector<std::string> law_names();

/// Runs every identity and oracle check. Throws std::invalid_argument if
/// options.mutate does not name a law.
std::vector<LawResult> run_verify(const VerifyOptions& options = {});

std::string render_report(const std::vector<LawResult>& results);

bool all_passed(const std::vector<LawResult>& results);

}  // namespace slitspin::cli
