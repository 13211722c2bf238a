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

#include "tempctx/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "tempctx/spin_dynamics.hpp"

namespace tempctx {

namespace {

constexpr double kInvolutionTolerance = 1e-10;

bool is_involution(const DenseOperator& o) {
  const DenseOperator id = DenseOperator::Identity(o.rows(), o.cols());
  return max_norm(o - o.adjoint()) < kInvolutionTolerance &&
         max_norm(o * o - id) < kInvolutionTolerance;
}

// SplitMix64 finalizer: a bijective 64-bit mixer.
std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct Step {
  DenseOperator first;
  DenseOperator second;
};

// Shared trial loop. `first_input` is the state seen by the first
// measurement; `between` maps the collapsed state to the state seen by the
// second.
template <typename Between>
RunSummary run_two_step(int context_id, const Step& step,
                        const StateVector& first_input, const StateVector& initial,
                        const PauliPolynomial& second_heisenberg,
                        Between between, std::uint64_t n_trials,
                        std::uint64_t seed) {
  RunSummary run;
  run.context_id = context_id;
  run.n_trials = n_trials;
  run.seed = seed;
  run.second_outcome_expectation =
      initial.expectation(to_dense(second_heisenberg)).real();
  run.records.reserve(n_trials);

  double second_sum = 0.0;
  for (std::uint64_t t = 0; t < n_trials; ++t) {
    Rng rng = substream(seed, static_cast<std::uint64_t>(context_id), t);
    const MeasurementResult m1 = projective_measure(first_input, step.first, rng);
    const MeasurementResult m2 =
        projective_measure(between(m1.post_state), step.second, rng);

    TrialRecord rec;
    rec.trial = t;
    rec.context_id = context_id;
    rec.outcome_t1 = m1.outcome;
    rec.outcome_t2 = m2.outcome;
    rec.product = m1.outcome * m2.outcome;
    rec.first_outcome_probability = m1.p_plus;

    (rec.product.is_minus() ? run.product_minus : run.product_plus) += 1;
    run.first_plus += m1.outcome.is_minus() ? 0 : 1;
    run.first_plus_probability = m1.p_plus;
    second_sum += m2.outcome.value();
    run.records.push_back(rec);
  }
  if (n_trials > 0) {
    run.second_outcome_mean = second_sum / static_cast<double>(n_trials);
  }
  return run;
}

const Context& two_factor_context(const ContextSet& set, int context_id) {
  const Context& ctx = set.context(context_id);
  if (ctx.operator_factors().size() != 2) {
    throw std::invalid_argument("simulated contexts have exactly two factors");
  }
  return ctx;
}

}  // namespace

Rng substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return Rng(mix(mix(mix(seed) ^ stream) ^ index));
}

MeasurementResult projective_measure(const StateVector& state,
                                     const PauliPolynomial& observable, Rng& rng) {
  const DenseOperator o = to_dense(observable);
  if (o.rows() == state.dim() && !is_involution(o)) {
    throw std::invalid_argument("observable " + observable.to_string() +
                                " is not Hermitian and involutory");
  }
  return projective_measure(state, o, rng);
}

MeasurementResult projective_measure(const StateVector& state,
                                     const DenseOperator& o, Rng& rng) {
  if (o.rows() != state.dim() || o.cols() != state.dim()) {
    throw std::invalid_argument("observable and state dimensions differ");
  }
  if (!is_involution(o)) {
    throw std::invalid_argument("observable is not Hermitian and involutory");
  }
  const DenseOperator id = DenseOperator::Identity(o.rows(), o.cols());
  const DenseOperator proj_plus = 0.5 * (id + o);
  const double p_plus =
      std::clamp(state.expectation(proj_plus).real(), 0.0, 1.0);

  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const bool plus = uniform(rng) < p_plus;
  const DenseOperator proj = plus ? proj_plus : DenseOperator(id - proj_plus);
  const Amplitudes projected = proj * state.amplitudes();
  if (!(projected.norm() > 0.0)) {
    throw std::logic_error("selected a zero-probability measurement branch");
  }
  return {plus ? Sign::plus() : Sign::minus(),
          StateVector::normalized(projected), p_plus};
}

double RunSummary::first_outcome_frequency() const {
  return n_trials == 0 ? 0.0
                       : static_cast<double>(first_plus) / static_cast<double>(n_trials);
}

std::optional<Sign> RunSummary::constant_product() const {
  if (n_trials == 0) return std::nullopt;
  if (product_minus == n_trials) return Sign::minus();
  if (product_plus == n_trials) return Sign::plus();
  return std::nullopt;
}

bool RunSummary::born_within(double sigmas) const {
  if (n_trials == 0) return true;
  const double p = first_plus_probability;
  const double sd = std::sqrt(p * (1.0 - p) / static_cast<double>(n_trials));
  return std::abs(first_outcome_frequency() - p) <= sigmas * sd + 1e-12;
}

bool RunSummary::heisenberg_within(double sigmas) const {
  if (n_trials == 0) return true;
  const double e = second_outcome_expectation;
  const double var = std::max(0.0, 1.0 - e * e);
  const double sd = std::sqrt(var / static_cast<double>(n_trials));
  return std::abs(second_outcome_mean - e) <= sigmas * sd + 1e-12;
}

RunSummary run_temporal_context(const ContextSet& set, int context_id,
                                const StateVector& initial,
                                std::uint64_t n_trials, std::uint64_t seed) {
  if (set.variant() != Variant::temporal) {
    throw std::invalid_argument("run_temporal_context needs a temporal set");
  }
  if (initial.dim() != 2) {
    throw std::invalid_argument("temporal runs act on a single spin");
  }
  const Context& ctx = two_factor_context(set, context_id);
  const auto order = ctx.measurement_order();
  const auto& [theta1, theta2] = *set.angles();

  // The factors must be co-measurable at these angles.
  const DenseOperator h1 = to_dense(set.event_operator(order[0]));
  const DenseOperator h2 = to_dense(set.event_operator(order[1]));
  if (max_norm(h1 * h2 - h2 * h1) >= kCommutingTolerance) {
    throw std::invalid_argument("context " + std::to_string(context_id) +
                                " is rejected at these angles");
  }

  const Step step{to_dense(order[0].axis()), to_dense(order[1].axis())};
  const StateVector at_t1 = StateVector::normalized(
      Amplitudes(propagator(theta1) * initial.amplitudes()));
  const DenseOperator hop = propagator(theta2 - theta1);
  auto between = [&hop](const StateVector& s) {
    return StateVector::normalized(Amplitudes(hop * s.amplitudes()));
  };
  return run_two_step(context_id, step, at_t1, initial,
                      set.event_operator(order[1]), between, n_trials, seed);
}

RunSummary run_spatial_context(const ContextSet& set, int context_id,
                               const StateVector& initial,
                               std::uint64_t n_trials, std::uint64_t seed) {
  if (set.variant() != Variant::spatial) {
    throw std::invalid_argument("run_spatial_context needs a spatial set");
  }
  if (initial.dim() != 4) {
    throw std::invalid_argument("spatial runs act on two spins");
  }
  const Context& ctx = two_factor_context(set, context_id);
  const auto order = ctx.measurement_order();
  const PauliPolynomial second = set.event_operator(order[1]);
  const Step step{to_dense(set.event_operator(order[0])), to_dense(second)};
  auto between = [](const StateVector& s) { return s; };
  return run_two_step(context_id, step, initial, initial, second, between,
                      n_trials, seed);
}

void write_trials_csv(std::ostream& os, std::span<const RunSummary> runs) {
  os << "trial,context_id,outcome_t1,outcome_t2,product\n";
  for (const auto& run : runs) {
    for (const auto& r : run.records) {
      os << r.trial << ',' << r.context_id << ',' << r.outcome_t1.value() << ','
         << r.outcome_t2.value() << ',' << r.product.value() << '\n';
    }
  }
}

std::string summary_json(const RunSummary& run) {
  nlohmann::json j;
  j["context_id"] = run.context_id;
  j["n_trials"] = run.n_trials;
  j["seed"] = run.seed;
  j["product_histogram"] = {{"-1", run.product_minus}, {"+1", run.product_plus}};
  j["first_outcome_frequency"] = run.first_outcome_frequency();
  j["first_plus_probability"] = run.first_plus_probability;
  j["second_outcome_mean"] = run.second_outcome_mean;
  j["second_outcome_expectation"] = run.second_outcome_expectation;
  const auto constant = run.constant_product();
  j["deterministic_product"] =
      constant ? nlohmann::json(constant->value()) : nlohmann::json(nullptr);
  j["born_within_3sigma"] = run.born_within(3.0);
  return j.dump();
}

}  // namespace tempctx
