// Copyright 2026 The tempctx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "report.hpp"

namespace tempctx::cli {

// Each command returns a complete report; none of them print or exit.

Report cmd_verify_temporal(const std::string& theta1 = "0",
                           const std::string& theta2 = "pi/2");

Report cmd_verify_spatial();

struct SimulateOptions {
  std::string variant = "temporal";
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  /// up, down, plus, singlet, random (uses seed) or random:N. Empty picks
  /// up for temporal and singlet for spatial runs.
  std::string state;
  std::string theta1 = "0";
  std::string theta2 = "pi/2";
};

/// Trial records go to `csv` when it is non-null.
Report cmd_simulate(const SimulateOptions& options, std::ostream* csv = nullptr);

Report cmd_scan(std::uint64_t grid = 360, const std::string& theta1 = "0");

/// `expect` is "sat", "unsat" or empty (no expectation).
Report cmd_nchv(const std::string& path, const std::string& expect = "");

}  // namespace tempctx::cli
