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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "tempctx/contexts.hpp"
#include "tempctx/nchv.hpp"
#include "tempctx/simulator.hpp"
#include "tempctx/spin_dynamics.hpp"
#include "tempctx/state.hpp"

namespace tempctx::cli {

namespace {

constexpr std::size_t kListedAssignments = 64;

bool all_true(const Json& checks) {
  for (const auto& [key, value] : checks.items()) {
    if (!value.get<bool>()) return false;
  }
  return true;
}

Json pair_json(const PairCheck& p) {
  return Json{{"first", p.first}, {"second", p.second}, {"commutator_norm", p.commutator_norm}};
}

Json sign_list(const std::vector<Sign>& signs) {
  Json out = Json::array();
  for (const Sign s : signs) out.push_back(s.value());
  return out;
}

Json constraint_json(const ConstraintSystem& sys) {
  Json out = Json::array();
  for (const auto& c : sys.constraints()) {
    Json vars = Json::array();
    for (const auto& v : c.variables) vars.push_back(v.name());
    out.push_back(Json{{"vars", vars}, {"sign", c.required.value()}});
  }
  return out;
}

// Shared NCHV block for the verify commands and `nchv`. Adds the decision
// data to `results` and returns whether the two deciders agreed.
bool add_nchv_results(const ConstraintSystem& sys, Json& results) {
  Json vars = Json::array();
  for (const auto& v : sys.variables()) vars.push_back(v.name());
  results["variables"] = vars;
  results["constraints"] = constraint_json(sys);
  results["assignments_total"] = std::uint64_t{1} << sys.variables().size();

  CrossCheckReport report;
  try {
    report = cross_check(sys);
  } catch (const std::logic_error& e) {
    results["assignments_found"] = nullptr;
    results["certificate"] = nullptr;
    results["decider_disagreement"] = e.what();
    return false;
  }
  results["assignments_found"] = report.satisfying_assignments;
  if (report.certificate) {
    Json subset = Json::array();
    for (const std::size_t i : report.certificate->constraint_subset) subset.push_back(i + 1);
    results["certificate"] = subset;
    results["certificate_sign"] = report.certificate->parity_of_signs.value();
    results["certificate_minimal"] = report.certificate->minimal;
    results["certificate_verified"] = verify_certificate(sys, *report.certificate);
  } else {
    results["certificate"] = nullptr;
  }
  return true;
}

Json context_entry(const ContextSet& set, const Context& ctx) {
  Json e;
  e["id"] = ctx.id();
  e["label"] = ctx.label(set.variant());
  e["joint_operator"] = ctx.joint_operator().to_string();
  const auto ev = ctx.quantum_eigenvalue();
  e["eigenvalue"] = ev ? Json(ev->value()) : Json(nullptr);
  return e;
}

std::optional<StateVector> parse_state(const std::string& text, std::size_t sites,
                                       std::uint64_t default_seed, std::string& error) {
  try {
    const std::string prefix = "random:";
    if (text.rfind(prefix, 0) == 0) {
      const std::string digits = text.substr(prefix.size());
      std::size_t used = 0;
      const auto seed = std::stoull(digits, &used);
      if (used != digits.size()) throw std::invalid_argument("bad seed");
      return make_state(StateKind::random, sites, seed);
    }
    return make_state(parse_state_kind(text), sites, default_seed);
  } catch (const std::exception&) {
    error = "unknown or unsupported state '" + text + "' for a " + std::to_string(sites) +
            "-site run";
    return std::nullopt;
  }
}

Json run_entry(const ContextSet& set, const Context& ctx, const RunSummary& run,
               std::optional<Sign> eigenvalue, bool& passed) {
  Json e;
  e["id"] = ctx.id();
  e["label"] = ctx.label(set.variant());
  e["eigenvalue"] = eigenvalue ? Json(eigenvalue->value()) : Json(nullptr);
  e["mode"] = eigenvalue ? "deterministic" : "informational";
  e["product_histogram"] = Json{{"-1", run.product_minus}, {"+1", run.product_plus}};
  const auto constant = run.constant_product();
  e["deterministic_product"] = constant ? Json(constant->value()) : Json(nullptr);
  e["first_outcome_frequency"] = run.first_outcome_frequency();
  e["first_plus_probability"] = run.first_plus_probability;
  e["second_outcome_mean"] = run.second_outcome_mean;
  e["second_outcome_expectation"] = run.second_outcome_expectation;

  Json checks;
  if (eigenvalue) {
    checks["products_match_eigenvalue"] = constant.has_value() && *constant == *eigenvalue;
  }
  checks["born_within_3sigma"] = run.born_within(3.0);
  checks["heisenberg_within_3sigma"] = run.heisenberg_within(3.0);
  passed = passed && all_true(checks);
  e["checks"] = checks;
  return e;
}

}  // namespace

Report cmd_verify_temporal(const std::string& theta1, const std::string& theta2) {
  Json doc = report_skeleton("verify-temporal", Json{{"theta1", theta1}, {"theta2", theta2}});
  PrecessionAngle t1;
  PrecessionAngle t2;
  try {
    t1 = PrecessionAngle::parse(theta1);
    t2 = PrecessionAngle::parse(theta2);
  } catch (const std::invalid_argument& e) {
    return usage_error(std::move(doc), e.what());
  }
  doc["parameters"]["theta1_radians"] = t1.value();
  doc["parameters"]["theta2_radians"] = t2.value();
  doc["parameters"]["delta"] = (t2 - t1).to_string();

  Json& results = doc["results"];
  const TemporalDiagnostics diag = diagnose_temporal(t1, t2);
  results["hermitian"] = diag.hermitian;
  results["max_commutator_norm"] = diag.max_commutator_norm;

  const TemporalBuild build = build_temporal_contexts(t1, t2);
  if (const auto* rej = std::get_if<ContextRejection>(&build)) {
    results["accepted"] = false;
    results["reason"] = rej->reason;
    results["offending_pair"] = pair_json(rej->offending);
    return usage_error(std::move(doc), rej->reason);
  }
  const ContextSet& set = std::get<ContextSet>(build);
  results["accepted"] = true;

  Json contexts = Json::array();
  for (const auto& ctx : set.contexts()) contexts.push_back(context_entry(set, ctx));
  results["contexts"] = contexts;
  const auto eigen = set.eigenvalues();
  results["eigenvalues"] = sign_list(eigen);
  const Sign product = eigen[0] * eigen[1] * eigen[2];
  results["eigenvalue_product"] = product.value();

  // Prediction from the closed forms: -sin(delta), +sin(delta), +1.
  const PrecessionAngle delta = t2 - t1;
  const auto p1 = Sign::near(-delta.sin(), 1e-12);
  const auto p2 = Sign::near(delta.sin(), 1e-12);
  const bool predicted = p1 && p2 && *p1 == eigen[0] && *p2 == eigen[1] && eigen[2] == Sign::plus();

  bool state_independent = true;
  bool up_eigenstate = true;
  bool factorization = true;
  const StateVector up = make_state(StateKind::up, 1);
  for (const auto& ctx : set.contexts()) {
    const auto scalar = scalar_identity_eigenvalue(ctx.joint_operator());
    state_independent = state_independent && scalar.has_value();
    const auto action = eigen_action(ctx.joint_operator(), up);
    up_eigenstate = up_eigenstate && action && *action == *ctx.quantum_eigenvalue();
    factorization = factorization && value_factorization_holds(set, ctx);
  }

  const ConstraintSystem sys = constraints_from_contexts(set);
  const bool agree = add_nchv_results(sys, results);

  Json checks;
  checks["hermitian"] = diag.all_hermitian();
  checks["mutually_commuting"] = diag.commuting();
  checks["state_independent"] = state_independent;
  checks["up_is_eigenstate"] = up_eigenstate;
  checks["eigenvalues_match_prediction"] = predicted;
  checks["eigenvalue_product_is_minus_one"] = product == Sign::minus();
  checks["four_factor_identity"] = third_context_factorization_check(t1, t2);
  checks["value_factorization"] = factorization;
  checks["unsat"] = agree && results["assignments_found"] == 0;
  checks["certificate"] = agree && !results["certificate"].is_null() &&
                          results["certificate_verified"].get<bool>() &&
                          results["certificate_sign"] == -1;
  checks["deciders_agree"] = agree;
  results["checks"] = checks;
  return finish(std::move(doc), all_true(checks));
}

Report cmd_verify_spatial() {
  Json doc = report_skeleton("verify-spatial", Json{{"state", "singlet"}});
  Json& results = doc["results"];
  const ContextSet bare = build_spatial_contexts();
  const StateVector singlet = make_state(StateKind::singlet, 2);

  bool commuting = true;
  double worst = 0.0;
  for (const auto& a : bare.contexts()) {
    for (const auto& b : bare.contexts()) {
      const DenseOperator da = to_dense(a.joint_operator());
      const DenseOperator db = to_dense(b.joint_operator());
      worst = std::max(worst, max_norm(da * db - db * da));
    }
  }
  commuting = worst < kCommutingTolerance;
  results["max_commutator_norm"] = worst;

  std::optional<ContextSet> set;
  try {
    set = bare.with_eigenvalues_from(singlet);
  } catch (const std::invalid_argument&) {
    set.reset();
  }
  Json contexts = Json::array();
  for (const auto& ctx : (set ? *set : bare).contexts()) {
    contexts.push_back(context_entry(bare, ctx));
  }
  results["contexts"] = contexts;

  Json checks;
  checks["mutually_commuting"] = commuting;
  checks["singlet_is_eigenstate"] = set.has_value();
  if (!set) {
    results["eigenvalues"] = nullptr;
    checks["eigenvalues_match_prediction"] = false;
    results["checks"] = checks;
    return finish(std::move(doc), false);
  }
  const auto eigen = set->eigenvalues();
  results["eigenvalues"] = sign_list(eigen);
  const Sign product = eigen[0] * eigen[1] * eigen[2];
  results["eigenvalue_product"] = product.value();

  bool factorization = true;
  for (const auto& ctx : set->contexts()) {
    factorization = factorization && value_factorization_holds(*set, ctx);
  }
  const ConstraintSystem sys = constraints_from_contexts(*set);
  const bool agree = add_nchv_results(sys, results);

  checks["eigenvalues_match_prediction"] =
      std::all_of(eigen.begin(), eigen.end(), [](Sign s) { return s == Sign::minus(); });
  checks["eigenvalue_product_is_minus_one"] = product == Sign::minus();
  checks["value_factorization"] = factorization;
  checks["unsat"] = agree && results["assignments_found"] == 0;
  checks["certificate"] = agree && !results["certificate"].is_null() &&
                          results["certificate_verified"].get<bool>() &&
                          results["certificate_sign"] == -1;
  checks["deciders_agree"] = agree;
  results["checks"] = checks;
  return finish(std::move(doc), all_true(checks));
}

Report cmd_simulate(const SimulateOptions& options, std::ostream* csv) {
  const bool temporal = options.variant == "temporal";
  const std::string state_name =
      options.state.empty() ? (temporal ? "up" : "singlet") : options.state;
  Json params;
  params["variant"] = options.variant;
  params["trials"] = options.trials;
  params["seed"] = options.seed;
  params["state"] = state_name;
  if (temporal) {
    params["theta1"] = options.theta1;
    params["theta2"] = options.theta2;
  }
  Json doc = report_skeleton("simulate", params);

  if (!temporal && options.variant != "spatial") {
    return usage_error(std::move(doc), "variant must be 'temporal' or 'spatial'");
  }
  if (options.trials == 0) {
    return usage_error(std::move(doc), "trials must be at least 1");
  }
  std::string error;
  const auto state = parse_state(state_name, temporal ? 1 : 2, options.seed, error);
  if (!state) return usage_error(std::move(doc), error);

  std::optional<ContextSet> set;
  if (temporal) {
    PrecessionAngle t1;
    PrecessionAngle t2;
    try {
      t1 = PrecessionAngle::parse(options.theta1);
      t2 = PrecessionAngle::parse(options.theta2);
    } catch (const std::invalid_argument& e) {
      return usage_error(std::move(doc), e.what());
    }
    TemporalBuild build = build_temporal_contexts(t1, t2);
    if (const auto* rej = std::get_if<ContextRejection>(&build)) {
      doc["results"]["reason"] = rej->reason;
      doc["results"]["offending_pair"] = pair_json(rej->offending);
      return usage_error(std::move(doc), rej->reason);
    }
    set = std::get<ContextSet>(std::move(build));
  } else {
    set = build_spatial_contexts();
  }

  bool passed = true;
  std::vector<RunSummary> runs;
  Json entries = Json::array();
  for (const auto& ctx : set->contexts()) {
    std::optional<Sign> eigenvalue = ctx.quantum_eigenvalue();
    if (!temporal) eigenvalue = eigen_action(ctx.joint_operator(), *state);
    RunSummary run = temporal
                         ? run_temporal_context(*set, ctx.id(), *state, options.trials, options.seed)
                         : run_spatial_context(*set, ctx.id(), *state, options.trials, options.seed);
    entries.push_back(run_entry(*set, ctx, run, eigenvalue, passed));
    runs.push_back(std::move(run));
  }
  doc["results"]["contexts"] = entries;
  if (csv != nullptr) write_trials_csv(*csv, runs);
  return finish(std::move(doc), passed);
}

Report cmd_scan(std::uint64_t grid, const std::string& theta1) {
  Json doc = report_skeleton("scan", Json{{"grid", grid}, {"theta1", theta1}});
  if (grid == 0) return usage_error(std::move(doc), "grid must be at least 1");
  PrecessionAngle t1;
  try {
    t1 = PrecessionAngle::parse(theta1);
  } catch (const std::invalid_argument& e) {
    return usage_error(std::move(doc), e.what());
  }

  const auto points = scan_commuting_angles(grid, t1);
  Json table = Json::array();
  Json accepted = Json::array();
  for (const auto& p : points) {
    table.push_back(Json{{"index", p.index},
                         {"delta", p.delta.value()},
                         {"delta_label", p.delta.to_string()},
                         {"hermitian", p.hermitian},
                         {"commuting", p.commuting},
                         {"commutator_norm", p.commutator_norm}});
    if (p.accepted()) accepted.push_back(p.index);
  }
  const auto expected_indices = quarter_turn_grid_indices(grid);
  const Json expected = expected_indices;

  Json& results = doc["results"];
  results["accepted_indices"] = accepted;
  results["expected_indices"] = expected;
  results["resolution_miss"] = expected_indices.empty();
  if (expected_indices.empty()) {
    results["note"] = "grid contains no quarter-turn or three-quarter-turn separation";
  }
  results["points"] = table;
  Json checks;
  checks["accepted_matches_expected"] = accepted == expected;
  results["checks"] = checks;
  return finish(std::move(doc), all_true(checks));
}

Report cmd_nchv(const std::string& path, const std::string& expect) {
  Json params{{"file", path}};
  if (!expect.empty()) params["expect"] = expect;
  Json doc = report_skeleton("nchv", params);
  if (!expect.empty() && expect != "sat" && expect != "unsat") {
    return usage_error(std::move(doc), "expect must be 'sat' or 'unsat'");
  }
  std::ifstream in(path);
  if (!in) return usage_error(std::move(doc), "cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();

  std::optional<ConstraintSystem> sys;
  try {
    sys = ConstraintSystem::from_json(text.str());
  } catch (const std::invalid_argument& e) {
    return usage_error(std::move(doc), e.what());
  }
  if (sys->variables().size() > kMaxEnumerationVariables) {
    return usage_error(std::move(doc), "more than " + std::to_string(kMaxEnumerationVariables) +
                                           " variables");
  }

  Json& results = doc["results"];
  const bool agree = add_nchv_results(*sys, results);
  Json checks;
  checks["deciders_agree"] = agree;
  if (agree) {
    const bool sat = results["assignments_found"].get<std::uint64_t>() > 0;
    results["satisfiable"] = sat;
    Json listed = Json::array();
    for (const auto& a : enumerate_assignments(*sys)) {
      if (listed.size() == kListedAssignments) break;
      Json row;
      for (std::size_t i = 0; i < sys->variables().size(); ++i) {
        row[sys->variables()[i].name()] = a.value(i).value();
      }
      listed.push_back(row);
    }
    results["assignments"] = listed;
    if (!expect.empty()) checks["matches_expectation"] = sat == (expect == "sat");
  }
  results["checks"] = checks;
  return finish(std::move(doc), all_true(checks));
}

}  // namespace tempctx::cli
