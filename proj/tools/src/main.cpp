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

// tempctx: verify the temporal and spatial contextuality constructions,
// simulate sequential measurements and decide sign-constraint systems.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using tempctx::cli::Report;

int emit(const Report& report, const std::string& json_path) {
  const std::string text = tempctx::cli::render(report.document);
  std::cout << text;
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    out << text;
    if (!out) {
      std::cerr << "tempctx: cannot write " << json_path << "\n";
      return tempctx::cli::kUsage;
    }
  }
  if (report.exit_code == tempctx::cli::kUsage && report.document.contains("error")) {
    std::cerr << "tempctx: " << report.document["error"].get<std::string>() << "\n";
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Temporal and spatial Peres contextuality checker"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tempctx 0.1.0");

  std::string json_path;
  std::string theta1 = "0";
  std::string theta2 = "pi/2";

  auto* temporal = app.add_subcommand("verify-temporal", "Check the time-separated contexts");
  temporal->add_option("--theta1", theta1, "First precession angle, e.g. 0 or pi/4")
      ->capture_default_str();
  temporal->add_option("--theta2", theta2, "Second precession angle, e.g. pi/2")
      ->capture_default_str();
  temporal->add_option("--json", json_path, "Also write the report to this file");

  auto* spatial = app.add_subcommand("verify-spatial", "Check the two-particle singlet contexts");
  spatial->add_option("--json", json_path, "Also write the report to this file");

  tempctx::cli::SimulateOptions sim;
  std::string csv_path;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo of sequential measurements");
  simulate->add_option("variant", sim.variant, "temporal or spatial")
      ->check(CLI::IsMember({"temporal", "spatial"}))
      ->capture_default_str();
  simulate->add_option("--trials", sim.trials, "Trials per context")->capture_default_str();
  simulate->add_option("--seed", sim.seed, "64-bit seed")->capture_default_str();
  simulate->add_option("--state", sim.state,
                       "up, down, plus, singlet, random or random:N");
  simulate->add_option("--theta1", sim.theta1, "First precession angle")->capture_default_str();
  simulate->add_option("--theta2", sim.theta2, "Second precession angle")->capture_default_str();
  simulate->add_option("--csv", csv_path, "Write per-trial records as CSV");
  simulate->add_option("--json", json_path, "Also write the report to this file");

  std::uint64_t grid = 360;
  std::string scan_theta1 = "0";
  auto* scan = app.add_subcommand("scan", "Sweep the time separation over a uniform grid");
  scan->add_option("--grid", grid, "Number of grid points")->capture_default_str();
  scan->add_option("--theta1", scan_theta1, "Fixed first angle")->capture_default_str();
  scan->add_option("--json", json_path, "Also write the report to this file");

  std::string system_path;
  std::string expect;
  auto* nchv = app.add_subcommand("nchv", "Decide a sign-constraint system from a JSON file");
  nchv->add_option("file", system_path, "Constraint system JSON")->required();
  nchv->add_option("--expect", expect, "Expected outcome")
      ->check(CLI::IsMember({"sat", "unsat"}));
  nchv->add_option("--json", json_path, "Also write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tempctx::cli::kUsage;
  }

  if (temporal->parsed()) {
    return emit(tempctx::cli::cmd_verify_temporal(theta1, theta2), json_path);
  }
  if (spatial->parsed()) return emit(tempctx::cli::cmd_verify_spatial(), json_path);
  if (simulate->parsed()) {
    if (csv_path.empty()) return emit(tempctx::cli::cmd_simulate(sim), json_path);
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) {
      std::cerr << "tempctx: cannot write " << csv_path << "\n";
      return tempctx::cli::kUsage;
    }
    return emit(tempctx::cli::cmd_simulate(sim, &csv), json_path);
  }
  if (scan->parsed()) return emit(tempctx::cli::cmd_scan(grid, scan_theta1), json_path);
  return emit(tempctx::cli::cmd_nchv(system_path, expect), json_path);
}
