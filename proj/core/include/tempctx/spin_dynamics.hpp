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

#include <optional>
#include <string>
#include <string_view>

#include "tempctx/pauli.hpp"

namespace tempctx {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/**
 * Precession angle theta = omega * t of a spin in a z-directed field.
 *
 * The value is reduced to [0, 2pi). Angles built from an integer number of
 * quarter turns are flagged exact; their cosine and sine are returned as
 * exact values in {0, +1, -1}, so evolved observables at those angles are
 * exact Pauli terms with no rounding dust.
 *
 * The parity of the number of whole turns removed by the reduction is kept
 * because the spinor propagator has period 4pi.
 */
class PrecessionAngle {
 public:
  PrecessionAngle() = default;

  static PrecessionAngle radians(double theta);
  static PrecessionAngle quarter_turns(long long k);
  /// (numerator / denominator) * pi; exact when it is a whole quarter turn.
  static PrecessionAngle pi_fraction(long long numerator, long long denominator);

  /**
   * Parses "0", "pi", "pi/2", "3pi/2", "3*pi/4", "-pi/2", "0.25pi" or a plain
   * number of radians such as "1.234". Throws std::invalid_argument.
   */
  static PrecessionAngle parse(std::string_view text);

  double value() const { return value_; }
  bool is_exact() const { return quarter_.has_value(); }
  /// Quarter-turn index in {0,1,2,3} for exact angles.
  std::optional<int> quarter_index() const { return quarter_; }

  double cos() const;
  double sin() const;

  /// True when an odd number of whole turns was removed by the reduction.
  bool odd_turn() const { return odd_turn_; }
  /// value() + 2pi * odd_turn(), in [0, 4pi).
  double spinor_value() const;

  /// "0", "pi/2", "pi", "3pi/2" for exact angles, otherwise radians.
  std::string to_string() const;

  friend PrecessionAngle operator+(const PrecessionAngle& a,
                                   const PrecessionAngle& b);
  friend PrecessionAngle operator-(const PrecessionAngle& a,
                                   const PrecessionAngle& b);

 private:
  double value_ = 0.0;
  std::optional<int> quarter_ = 0;
  bool odd_turn_ = false;
};

/// H = (hbar * omega / 2) sigma_z. Natural units by default.
class HamiltonianSpec {
 public:
  HamiltonianSpec() = default;
  /// Throws std::invalid_argument unless omega > 0 and hbar > 0.
  HamiltonianSpec(double omega, double hbar);

  double omega() const { return omega_; }
  double hbar() const { return hbar_; }
  PauliPolynomial hamiltonian() const;

 private:
  double omega_ = 1.0;
  double hbar_ = 1.0;
};

/// sigma_x(t) = cos(theta) X - sin(theta) Y.
PauliPolynomial evolve_x(const PrecessionAngle& theta);
/// sigma_y(t) = cos(theta) Y + sin(theta) X.
PauliPolynomial evolve_y(const PrecessionAngle& theta);
/// sigma_z is conserved.
PauliPolynomial evolve_z(const PrecessionAngle& theta);
/// Dispatches on axis; throws std::invalid_argument for I.
PauliPolynomial evolve(PauliLetter axis, const PrecessionAngle& theta);

/// (1 / i hbar) [sigma_axis, H]. Throws std::invalid_argument for I.
PauliPolynomial heisenberg_rhs(PauliLetter axis,
                               const HamiltonianSpec& h = HamiltonianSpec{});

/// Schroedinger propagator exp(-i theta sigma_z / 2) = diag(e^{-i theta/2}, e^{i theta/2}).
DenseOperator propagator(const PrecessionAngle& theta);

/// Heisenberg-picture operator U^dagger A U with U = propagator(theta).
DenseOperator heisenberg_conjugate(const DenseOperator& op,
                                   const PrecessionAngle& theta);

}  // namespace tempctx
