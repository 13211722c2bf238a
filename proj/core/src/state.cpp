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

#include "tempctx/state.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace tempctx {

StateVector::StateVector(Amplitudes amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() != 2 && amps_.size() != 4) {
    throw std::invalid_argument("state dimension must be 2 or 4, got " +
                                std::to_string(amps_.size()));
  }
  const double norm = amps_.norm();
  if (std::abs(norm - 1.0) > kNormTolerance) {
    throw std::invalid_argument("state is not normalized (norm " +
                                std::to_string(norm) + ")");
  }
}

namespace {
Amplitudes from_list(std::initializer_list<Complex> list) {
  Amplitudes a(static_cast<Eigen::Index>(list.size()));
  Eigen::Index i = 0;
  for (Complex c : list) a(i++) = c;
  return a;
}
}  // namespace

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector(from_list(amplitudes)) {}

StateVector StateVector::normalized(Amplitudes amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("cannot normalize zero vector");
  return StateVector(Amplitudes(amplitudes / norm));
}

Complex StateVector::expectation(const DenseOperator& op) const {
  if (op.rows() != dim() || op.cols() != dim()) {
    throw std::invalid_argument("operator and state dimensions differ");
  }
  return amps_.dot(op * amps_);  // dot() conjugates the left operand
}

StateKind parse_state_kind(std::string_view name) {
  if (name == "up") return StateKind::up;
  if (name == "down") return StateKind::down;
  if (name == "plus") return StateKind::plus;
  if (name == "singlet") return StateKind::singlet;
  if (name == "random") return StateKind::random;
  throw std::invalid_argument("unknown state '" + std::string(name) +
                              "' (expected up, down, plus, singlet, random)");
}

std::string to_string(StateKind kind) {
  switch (kind) {
    case StateKind::up: return "up";
    case StateKind::down: return "down";
    case StateKind::plus: return "plus";
    case StateKind::singlet: return "singlet";
    case StateKind::random: return "random";
  }
  return "?";
}

StateVector make_state(StateKind kind, std::size_t sites, std::uint64_t seed) {
  if (sites != 1 && sites != 2) {
    throw std::invalid_argument("states span 1 or 2 sites");
  }
  const Eigen::Index dim = sites == 1 ? 2 : 4;
  const double r = 1.0 / std::sqrt(2.0);
  Amplitudes a = Amplitudes::Zero(dim);
  switch (kind) {
    case StateKind::up:
      a(0) = 1.0;
      return StateVector(a);
    case StateKind::down:
      a(dim - 1) = 1.0;
      return StateVector(a);
    case StateKind::plus:
      if (sites == 1) {
        a << r, r;
      } else {
        a << 0.5, 0.5, 0.5, 0.5;
      }
      return StateVector(a);
    case StateKind::singlet:
      if (sites != 2) {
        throw std::invalid_argument("the singlet is a two-site state");
      }
      a << 0.0, r, -r, 0.0;
      return StateVector(a);
    case StateKind::random: {
      // Independent complex Gaussians, normalized: unitarily invariant.
      std::mt19937_64 gen(seed);
      std::normal_distribution<double> normal;
      for (Eigen::Index i = 0; i < dim; ++i) {
        const double re = normal(gen);
        const double im = normal(gen);
        a(i) = Complex(re, im);
      }
      return StateVector::normalized(a);
    }
  }
  throw std::invalid_argument("unknown state kind");
}

}  // namespace tempctx
