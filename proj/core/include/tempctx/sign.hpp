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
#include <stdexcept>
#include <string>

namespace tempctx {

/// A dichotomic value: a measurement outcome, an eigenvalue of an involutory
/// observable, or a hidden-variable assignment.
class Sign {
 public:
  constexpr Sign() = default;

  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }

  static Sign from_int(int v) {
    if (v != 1 && v != -1) {
      throw std::invalid_argument("sign must be +1 or -1, got " +
                                  std::to_string(v));
    }
    return Sign(static_cast<std::int8_t>(v));
  }

  /// Nearest sign to a real number, if it lies within `tol` of +-1.
  static std::optional<Sign> near(double x, double tol) {
    if (x > 1.0 - tol && x < 1.0 + tol) return plus();
    if (x > -1.0 - tol && x < -1.0 + tol) return minus();
    return std::nullopt;
  }

  constexpr int value() const { return value_; }
  constexpr bool is_minus() const { return value_ < 0; }

  constexpr Sign operator-() const { return Sign(static_cast<std::int8_t>(-value_)); }
  constexpr Sign& operator*=(Sign o) {
    value_ = static_cast<std::int8_t>(value_ * o.value_);
    return *this;
  }
  friend constexpr Sign operator*(Sign a, Sign b) { return a *= b; }
  friend constexpr bool operator==(Sign, Sign) = default;

  std::string to_string() const { return value_ > 0 ? "+1" : "-1"; }

 private:
  constexpr explicit Sign(std::int8_t v) : value_(v) {}
  std::int8_t value_ = 1;
};

}  // namespace tempctx
