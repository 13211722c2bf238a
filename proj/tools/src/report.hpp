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

#include <string>
#include <string_view>

#include <json.hpp>

namespace tempctx::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2 };

/// A finished command: the report document and the process exit code.
struct Report {
  Json document;
  int exit_code = kPass;
};

/// Skeleton with schema_version, command, parameters and empty results.
Json report_skeleton(std::string_view command, Json parameters);

/// Sets the verdict and returns the matching exit code (0 or 1).
Report finish(Json document, bool passed);

/// Usage or rejection outcome: verdict "fail", exit code 2.
Report usage_error(Json document, std::string_view message);

/**
 * Renders `value` with two-space indentation and a trailing newline.
 * Floating-point numbers are printed with 17 significant digits ("%.17g");
 * integral doubles keep a trailing ".0" and non-finite values become null.
 * Key order is insertion order, so equal inputs render byte-identically.
 */
std::string render(const Json& value);

}  // namespace tempctx::cli
