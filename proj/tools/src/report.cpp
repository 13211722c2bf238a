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

#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace tempctx::cli {

namespace {

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void emit(const Json& v, int depth, std::string& out) {
  const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
  const std::string close_pad(2 * static_cast<std::size_t>(depth), ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        out += Json(it.key()).dump();
        out += ": ";
        emit(it.value(), depth + 1, out);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line; they are mostly small vectors.
      const bool flat = std::none_of(v.begin(), v.end(), [](const Json& e) {
        return e.is_structured();
      });
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) out += pad;
        emit(e, depth + 1, out);
      }
      out += flat ? "]" : "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float:
      out += format_double(v.get<double>());
      return;
    default:
      out += v.dump();
      return;
  }
}

}  // namespace

Json report_skeleton(std::string_view command, Json parameters) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = std::string(command);
  doc["parameters"] = std::move(parameters);
  doc["results"] = Json::object();
  return doc;
}

Report finish(Json document, bool passed) {
  document["verdict"] = passed ? "pass" : "fail";
  return {std::move(document), passed ? kPass : kCheckFailed};
}

Report usage_error(Json document, std::string_view message) {
  document["error"] = std::string(message);
  document["verdict"] = "fail";
  return {std::move(document), kUsage};
}

std::string render(const Json& value) {
  std::string out;
  emit(value, 0, out);
  out += '\n';
  return out;
}

}  // namespace tempctx::cli
