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
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "tempctx/pauli.hpp"
#include "tempctx/sign.hpp"
#include "tempctx/spin_dynamics.hpp"
#include "tempctx/state.hpp"

namespace tempctx {

/// Temporal contexts pair one spin at two times; spatial contexts pair two
/// spins at one time.
enum class Variant { temporal, spatial };
std::string to_string(Variant v);

/// Dense commutator max-norm below which two observables count as commuting.
inline constexpr double kCommutingTolerance = 1e-10;
/// Vector-norm tolerance for eigen_action.
inline constexpr double kEigenTolerance = 1e-10;

/**
 * One spin measurement: an axis at a slot. The slot is the time label
 * (1 = t1, 2 = t2) for temporal contexts and the particle label for spatial
 * ones.
 */
class MeasurementEvent {
 public:
  /// Throws std::invalid_argument for axis I or a slot outside {1, 2}.
  MeasurementEvent(int slot, PauliLetter axis);

  int slot() const { return slot_; }
  PauliLetter axis() const { return axis_; }
  /// "sigma_x(t2)" (temporal) or "sigma_x^2" (spatial).
  std::string label(Variant v) const;

  friend bool operator==(const MeasurementEvent&,
                         const MeasurementEvent&) = default;

 private:
  int slot_;
  PauliLetter axis_;
};

/**
 * A set of co-measurable spin measurements and its joint operator.
 *
 * `operator_factors` follow the written operator order (later slot on the
 * left); the joint operator is their product. `value_factors` are the
 * single-spin observables whose predetermined values enter the hidden-variable
 * constraint for this context. They coincide with the operator factors except
 * for the third context, where the zz product is expanded into four
 * same-slot x and y factors.
 */
class Context {
 public:
  Context(int id, std::vector<MeasurementEvent> operator_factors,
          std::vector<MeasurementEvent> value_factors,
          PauliPolynomial joint_operator,
          std::optional<Sign> quantum_eigenvalue = std::nullopt);

  int id() const { return id_; }
  const std::vector<MeasurementEvent>& operator_factors() const {
    return operator_factors_;
  }
  const std::vector<MeasurementEvent>& value_factors() const {
    return value_factors_;
  }
  const PauliPolynomial& joint_operator() const { return joint_; }
  std::optional<Sign> quantum_eigenvalue() const { return eigenvalue_; }

  /// Operator factors sorted by slot: chronological for temporal contexts.
  std::vector<MeasurementEvent> measurement_order() const;
  std::string label(Variant v) const;

  Context with_eigenvalue(Sign s) const;

 private:
  int id_;
  std::vector<MeasurementEvent> operator_factors_;
  std::vector<MeasurementEvent> value_factors_;
  PauliPolynomial joint_;
  std::optional<Sign> eigenvalue_;
};

using AnglePair = std::pair<PrecessionAngle, PrecessionAngle>;

/**
 * The three contexts of a Peres-type argument. Construction verifies that
 * all joint operators commute pairwise and throws std::logic_error otherwise.
 */
class ContextSet {
 public:
  ContextSet(Variant variant, std::vector<Context> contexts,
             std::optional<AnglePair> angles = std::nullopt);

  Variant variant() const { return variant_; }
  const std::vector<Context>& contexts() const { return contexts_; }
  const Context& context(int id) const;
  const std::optional<AnglePair>& angles() const { return angles_; }
  std::size_t site_count() const { return variant_ == Variant::temporal ? 1 : 2; }

  /// Observable for one event: the Heisenberg-picture spin component at the
  /// event's time, or the single-site operator embedded in two sites.
  PauliPolynomial event_operator(const MeasurementEvent& e) const;

  /// Product of the event operators, in the given order.
  PauliPolynomial product_of(const std::vector<MeasurementEvent>& events) const;

  /// Copy with each eigenvalue set by acting on `state`. Throws
  /// std::invalid_argument if the state is not a simultaneous eigenstate.
  ContextSet with_eigenvalues_from(const StateVector& state) const;

  std::vector<Sign> eigenvalues() const;

 private:
  Variant variant_;
  std::vector<Context> contexts_;
  std::optional<AnglePair> angles_;
};

struct PairCheck {
  std::string first;
  std::string second;
  double commutator_norm = 0.0;
};

/// Hermiticity and commutation findings for the temporal construction.
struct TemporalDiagnostics {
  std::vector<bool> hermitian;         // one per context
  std::vector<PairCheck> factor_pairs;   // the two factors inside each context
  std::vector<PairCheck> context_pairs;  // joint operators of distinct contexts
  double max_commutator_norm = 0.0;

  bool all_hermitian() const;
  bool commuting() const { return max_commutator_norm < kCommutingTolerance; }
  bool accepted() const { return all_hermitian() && commuting(); }
  const PairCheck& worst_pair() const;
};

TemporalDiagnostics diagnose_temporal(const PrecessionAngle& theta1,
                                      const PrecessionAngle& theta2);

struct ContextRejection {
  std::string reason;
  PairCheck offending;
  TemporalDiagnostics diagnostics;
};

using TemporalBuild = std::variant<ContextSet, ContextRejection>;

/**
 * sigma_x(t2) sigma_y(t1), sigma_y(t2) sigma_x(t1), sigma_z(t2) sigma_z(t1).
 *
 * Accepted only when every joint operator is Hermitian and all relevant
 * commutators vanish; the eigenvalues of accepted sets come from the
 * scalar-identity form of each joint operator.
 */
TemporalBuild build_temporal_contexts(const PrecessionAngle& theta1,
                                      const PrecessionAngle& theta2);

/// sigma_x^1 sigma_x^2, sigma_y^1 sigma_y^2, sigma_z^1 sigma_z^2, eigenvalues unset.
ContextSet build_spatial_contexts();

/// lambda in {+1,-1} if op|state> = lambda|state> within `tol` (vector norm).
/// Throws std::invalid_argument on a dimension mismatch or unnormalized state.
std::optional<Sign> eigen_action(const PauliPolynomial& op,
                                 const StateVector& state,
                                 double tol = kEigenTolerance);

/// lambda if op is symbolically lambda * identity with lambda = +-1.
std::optional<Sign> scalar_identity_eigenvalue(const PauliPolynomial& op,
                                               double tol = 1e-12);

/**
 * Checks sigma_z(t2) sigma_z(t1) == sigma_x(t2) sigma_y(t2) sigma_y(t1) sigma_x(t1)
 * symbolically, along with the same-time relations x*y = i z and y*x = -i z
 * at both times it relies on.
 */
bool third_context_factorization_check(const PrecessionAngle& theta1,
                                       const PrecessionAngle& theta2);

/// True when the value factors of `ctx` multiply to its joint operator.
bool value_factorization_holds(const ContextSet& set, const Context& ctx);

struct ScanPoint {
  std::size_t index = 0;
  PrecessionAngle delta;
  bool hermitian = false;
  bool commuting = false;
  double commutator_norm = 0.0;

  bool accepted() const { return hermitian && commuting; }
};

/**
 * Sweeps theta2 - theta1 over `grid_points` uniform steps of [0, 2pi).
 * Grid points that land on a whole quarter turn are evaluated exactly.
 * Throws std::invalid_argument if grid_points is zero.
 */
std::vector<ScanPoint> scan_commuting_angles(
    std::size_t grid_points,
    const PrecessionAngle& theta1 = PrecessionAngle::quarter_turns(0));

/// Grid indices landing exactly on a quarter or three-quarter turn.
std::vector<std::size_t> quarter_turn_grid_indices(std::size_t grid_points);

}  // namespace tempctx
