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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

#include "tempctx/pauli.hpp"

namespace tempctx {

using Amplitudes = Eigen::Matrix<Complex, Eigen::Dynamic, 1, 0, 4, 1>;

/**
 * A normalized pure state of one spin (dimension 2) or two spins
 * (dimension 4, basis order up-up, up-down, down-up, down-down).
 *
 * Construction enforces unit norm within kNormTolerance, so every StateVector
 * in circulation is a valid quantum state.
 */
class StateVector {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// Throws std::invalid_argument if the dimension is not 2 or 4 or the norm
  /// differs from 1 by more than kNormTolerance.
  explicit StateVector(Amplitudes amplitudes);
  StateVector(std::initializer_list<Complex> amplitudes);

  /// Rescales to unit norm first. Throws on a zero vector.
  static StateVector normalized(Amplitudes amplitudes);

  Eigen::Index dim() const { return amps_.size(); }
  std::size_t site_count() const { return amps_.size() == 2 ? 1 : 2; }
  const Amplitudes& amplitudes() const { return amps_; }
  Complex operator[](Eigen::Index i) const { return amps_(i); }

  /// <psi| op |psi>.
  Complex expectation(const DenseOperator& op) const;

 private:
  Amplitudes amps_;
};

enum class StateKind { up, down, plus, singlet, random };

/// "up", "down", "plus", "singlet", "random". Throws std::invalid_argument.
StateKind parse_state_kind(std::string_view name);
std::string to_string(StateKind kind);

/**
 * Named preparation on `sites` spins. up/down/plus are product states
 * (|up up> etc. on two sites); singlet needs two sites; random draws a
 * Haar-uniform state from `seed`.
 */
StateVector make_state(StateKind kind, std::size_t sites,
                       std::uint64_t seed = 0);

}  // namespace tempctx
