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
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tempctx/contexts.hpp"
#include "tempctx/pauli.hpp"
#include "tempctx/sign.hpp"
#include "tempctx/state.hpp"

namespace tempctx {

using Rng = std::mt19937_64;

/// Independent generator for (seed, stream, index), e.g. one per trial. The
/// engine is seeded with a SplitMix64 hash of the three values.
Rng substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

struct MeasurementResult {
  Sign outcome;
  StateVector post_state;
  double p_plus;  // Born probability of +1
};

/**
 * Ideal projective measurement of an involutory observable O.
 *
 * p(+1) = <psi|(I + O)/2|psi>, clamped to [0, 1]; the post-measurement state
 * is the normalized projection onto the observed eigenspace. Throws
 * std::invalid_argument if O is not Hermitian and involutory or the
 * dimensions differ.
 */
MeasurementResult projective_measure(const StateVector& state,
                                     const PauliPolynomial& observable, Rng& rng);

/// Same, for an observable already lowered to a dense matrix.
MeasurementResult projective_measure(const StateVector& state,
                                     const DenseOperator& observable, Rng& rng);

/// Outcomes of one two-step trial. For spatial runs, t1/t2 mean site 1/2.
struct TrialRecord {
  std::uint64_t trial = 0;
  int context_id = 0;
  Sign outcome_t1;
  Sign outcome_t2;
  Sign product;
  /// Born probability that the first measurement yields +1.
  double first_outcome_probability = 0.0;
};

struct RunSummary {
  int context_id = 0;
  std::uint64_t n_trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t product_minus = 0;
  std::uint64_t product_plus = 0;
  std::uint64_t first_plus = 0;
  /// Analytic Born probability of +1 for the first measurement.
  double first_plus_probability = 0.0;
  /// Mean of the second outcome, and <initial| O2 |initial> for comparison.
  double second_outcome_mean = 0.0;
  double second_outcome_expectation = 0.0;
  std::vector<TrialRecord> records;

  double first_outcome_frequency() const;
  /// The common product, if every trial produced the same one.
  std::optional<Sign> constant_product() const;
  /// |frequency - p| <= sigmas * sqrt(p (1 - p) / n).
  bool born_within(double sigmas = 3.0) const;
  /// |mean - expectation| <= sigmas * sqrt((1 - expectation^2) / n).
  bool heisenberg_within(double sigmas = 3.0) const;
};

/**
 * Sequential measurement of a temporal context: the initial state is
 * propagated to theta1, the t1 factor is measured, the collapsed state is
 * propagated by theta2 - theta1 and the t2 factor is measured.
 *
 * `context_id` is the 1-based id within `set`. Throws std::invalid_argument
 * for spatial sets, single-site mismatches, or a context whose factors do not
 * commute at the set's angles.
 */
RunSummary run_temporal_context(const ContextSet& set, int context_id,
                                const StateVector& initial,
                                std::uint64_t n_trials, std::uint64_t seed);

/// Measures the site-1 factor and then the site-2 factor of a spatial context.
RunSummary run_spatial_context(const ContextSet& set, int context_id,
                               const StateVector& initial,
                               std::uint64_t n_trials, std::uint64_t seed);

/// CSV with header "trial,context_id,outcome_t1,outcome_t2,product".
void write_trials_csv(std::ostream& os, std::span<const RunSummary> runs);

/// Summary as a JSON object (records omitted).
std::string summary_json(const RunSummary& run);

}  // namespace tempctx
