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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tempctx/contexts.hpp"
#include "tempctx/sign.hpp"

namespace tempctx {

/**
 * A predetermined +-1 value m_axis^slot (temporal) or v_axis^slot (spatial).
 *
 * A hidden-variable assignment is a function of this identity alone, which is
 * what makes the model noncontextual: nothing in the data model can let a
 * value depend on the context it is measured in.
 */
struct SignVariable {
  std::string family;  // "m", "v", ...
  char axis = 'x';     // 'x', 'y' or 'z'
  int slot = 1;        // >= 1

  /// "m_x^1". Parse accepts the same form and throws std::invalid_argument.
  std::string name() const;
  static SignVariable parse(std::string_view text);

  friend auto operator<=>(const SignVariable&, const SignVariable&) = default;
};

/// Product of the listed values must equal `required`.
struct MonomialConstraint {
  std::vector<SignVariable> variables;
  Sign required;
};

/**
 * Monomial +-1 constraints over declared sign variables.
 *
 * Construction checks that every variable is declared exactly once and that
 * each constraint references declared variables only, each at most once, and
 * at least one.
 */
class ConstraintSystem {
 public:
  ConstraintSystem(std::vector<SignVariable> variables,
                   std::vector<MonomialConstraint> constraints);

  const std::vector<SignVariable>& variables() const { return variables_; }
  const std::vector<MonomialConstraint>& constraints() const { return constraints_; }
  std::size_t index_of(const SignVariable& v) const;

  /// Copy with constraint `index` (0-based) removed or its sign flipped.
  ConstraintSystem without_constraint(std::size_t index) const;
  ConstraintSystem with_flipped_sign(std::size_t index) const;

  /// {"variables": ["m_x^1", ...], "constraints": [{"vars": [...], "sign": -1}]}
  std::string to_json() const;
  /// Throws std::invalid_argument on malformed documents.
  static ConstraintSystem from_json(std::string_view text);

 private:
  std::vector<SignVariable> variables_;
  std::vector<MonomialConstraint> constraints_;
};

/**
 * One value per declared variable, stored as a bit mask (bit i set means
 * variable i takes -1).
 */
class Assignment {
 public:
  Assignment(std::uint64_t negative_mask, std::size_t variable_count)
      : mask_(negative_mask), size_(variable_count) {}

  Sign value(std::size_t i) const {
    return (mask_ >> i) & 1u ? Sign::minus() : Sign::plus();
  }
  std::size_t size() const { return size_; }
  std::uint64_t negative_mask() const { return mask_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::uint64_t mask_;
  std::size_t size_;
};

/// Re-evaluates every constraint by multiplying the assigned values.
bool satisfies(const ConstraintSystem& sys, const Assignment& a);

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr std::size_t kMaxEnumerationVariables = 24;

/**
 * One constraint per context: the value factors of the context with the
 * context's quantum eigenvalue as the required sign. Temporal sets use the
 * family "m", spatial sets "v"; variables are sorted by (axis, slot).
 * Throws std::invalid_argument if an eigenvalue is missing.
 */
ConstraintSystem constraints_from_contexts(const ContextSet& cs);

/**
 * All satisfying assignments, scanning the 2^n candidates in lexicographic
 * order: variable 0 is the most significant position and +1 precedes -1.
 * Throws CapacityError above kMaxEnumerationVariables variables.
 */
std::vector<Assignment> enumerate_assignments(const ConstraintSystem& sys);

/// Count-only variant of enumerate_assignments.
std::uint64_t count_assignments(const ConstraintSystem& sys);

/// Subset of constraints in which every variable occurs an even number of
/// times while the required signs multiply to -1.
struct ParityCertificate {
  std::vector<std::size_t> constraint_subset;  // 0-based, ascending
  Sign parity_of_signs = Sign::minus();
  bool minimal = true;  // smallest by cardinality, ties lexicographic
};

inline constexpr std::size_t kMaxMinimalCertificateConstraints = 24;

/**
 * Searches the left null space of the constraint/variable incidence matrix
 * over GF(2) for a combination with odd sign parity.
 *
 * Existence is decided by Gaussian elimination. When the system has at most
 * kMaxMinimalCertificateConstraints constraints the smallest certificate is
 * found by search in (size, lexicographic) order; larger systems get the
 * certificate read off the elimination, flagged non-minimal.
 */
std::optional<ParityCertificate> parity_certificate(const ConstraintSystem& sys);

/// True when `cert` is a valid parity certificate for `sys`.
bool verify_certificate(const ConstraintSystem& sys, const ParityCertificate& cert);

struct CrossCheckReport {
  std::uint64_t satisfying_assignments = 0;
  std::optional<ParityCertificate> certificate;
  bool satisfiable() const { return satisfying_assignments > 0; }
};

/**
 * Runs both deciders and insists they agree: a certificate exists exactly
 * when enumeration finds no assignment. Throws std::logic_error otherwise.
 */
CrossCheckReport cross_check(const ConstraintSystem& sys);

}  // namespace tempctx
