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

// Acceptance gate. Prints one PASS/FAIL line per criterion; tolerances and
// time limits are fixed here. With an argument N only criterion N runs.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tempctx/contexts.hpp"
#include "tempctx/nchv.hpp"
#include "tempctx/simulator.hpp"
#include "tempctx/spin_dynamics.hpp"

using namespace tempctx;

namespace {

constexpr double kEigenTol = 1e-10;
constexpr double kAcceptNorm = 1e-10;
constexpr double kRejectNorm = 0.1;
constexpr double kFiniteDifferenceStep = 1e-6;
constexpr double kFiniteDifferenceTol = 1e-6;
constexpr std::uint64_t kTrials = 10000;
constexpr int kFuzzSystems = 500;

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // <= 0 means no limit
  std::function<Outcome()> body;
};

ContextSet quarter_turn_set() {
  return std::get<ContextSet>(build_temporal_contexts(PrecessionAngle::quarter_turns(0),
                                                      PrecessionAngle::quarter_turns(1)));
}

Outcome temporal_eigenvalues() {
  Outcome out;
  const auto diag = diagnose_temporal(PrecessionAngle::quarter_turns(0),
                                      PrecessionAngle::quarter_turns(1));
  if (!diag.accepted()) return {false, "contexts not Hermitian and commuting"};
  const ContextSet set = quarter_turn_set();
  const int expected[] = {-1, 1, 1};
  for (int i = 0; i < 3; ++i) {
    const auto& joint = set.contexts()[i].joint_operator();
    if (!approx_equal(joint, PauliPolynomial::identity(1, expected[i]))) {
      return {false, "context " + std::to_string(i + 1) + " is " + joint.to_string()};
    }
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const StateVector psi = make_state(StateKind::random, 1, seed);
    for (int i = 0; i < 3; ++i) {
      const auto ev = eigen_action(set.contexts()[i].joint_operator(), psi, kEigenTol);
      if (!ev || ev->value() != expected[i]) {
        return {false, "state seed " + std::to_string(seed) + " context " + std::to_string(i + 1)};
      }
    }
  }
  out.detail = "eigenvalues (-1, +1, +1) on 100 random states";
  return out;
}

Outcome check_unsat(const ConstraintSystem& sys, const std::set<std::string>& names) {
  std::set<std::string> declared;
  for (const auto& v : sys.variables()) declared.insert(v.name());
  if (declared != names) return {false, "unexpected variable set"};
  const auto count = count_assignments(sys);
  const auto cert = parity_certificate(sys);
  if (count != 0) return {false, std::to_string(count) + " satisfying assignments"};
  if (!cert || cert->constraint_subset != std::vector<std::size_t>{0, 1, 2} ||
      cert->parity_of_signs != Sign::minus() || !verify_certificate(sys, *cert)) {
    return {false, "certificate is not {1,2,3} with sign -1"};
  }
  return {true, "0 of 16 assignments, certificate {1,2,3} sign -1"};
}

Outcome temporal_nchv(const ConstraintSystem& sys) {
  return check_unsat(sys, {"m_x^1", "m_x^2", "m_y^1", "m_y^2"});
}

Outcome spatial_baseline() {
  const StateVector singlet = make_state(StateKind::singlet, 2);
  const ContextSet bare = build_spatial_contexts();
  for (const auto& ctx : bare.contexts()) {
    const auto ev = eigen_action(ctx.joint_operator(), singlet, kEigenTol);
    if (!ev || *ev != Sign::minus()) {
      return {false, ctx.joint_operator().to_string() + " eigenvalue is not -1"};
    }
  }
  const ConstraintSystem sys = constraints_from_contexts(bare.with_eigenvalues_from(singlet));
  auto out = check_unsat(sys, {"v_x^1", "v_x^2", "v_y^1", "v_y^2"});
  if (out.ok) out.detail = "singlet eigenvalues (-1, -1, -1); " + out.detail;
  return out;
}

Outcome sequential_determinism() {
  const ContextSet set = quarter_turn_set();
  std::vector<std::pair<std::string, StateVector>> states = {
      {"up", make_state(StateKind::up, 1)},
      {"down", make_state(StateKind::down, 1)},
      {"plus", make_state(StateKind::plus, 1)}};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    states.emplace_back("random:" + std::to_string(seed), make_state(StateKind::random, 1, seed));
  }
  std::uint64_t seed = 2026;
  for (const auto& [name, psi] : states) {
    for (const auto& ctx : set.contexts()) {
      const RunSummary run = run_temporal_context(set, ctx.id(), psi, kTrials, seed++);
      const auto matches = ctx.quantum_eigenvalue()->is_minus() ? run.product_minus
                                                                : run.product_plus;
      if (matches != kTrials) {
        return {false, name + " context " + std::to_string(ctx.id()) + ": " +
                           std::to_string(matches) + "/" + std::to_string(kTrials)};
      }
      if (!run.born_within(3.0)) {
        return {false, name + " context " + std::to_string(ctx.id()) + ": Born frequency " +
                           std::to_string(run.first_outcome_frequency()) + " vs " +
                           std::to_string(run.first_plus_probability)};
      }
    }
  }
  return {true, "8 states x 3 contexts, 10000/10000 products, Born within 3 sigma"};
}

Outcome state_independence() {
  const ContextSet set = quarter_turn_set();
  for (const auto& ctx : set.contexts()) {
    if (!scalar_identity_eigenvalue(ctx.joint_operator())) {
      return {false, "context " + std::to_string(ctx.id()) + " is not a scalar"};
    }
  }
  // At a rejected pair the products are formed directly, since the
  // construction refuses to build them.
  const auto t1 = PrecessionAngle::quarter_turns(0);
  const auto t2 = PrecessionAngle::pi_fraction(1, 4);
  if (std::holds_alternative<ContextSet>(build_temporal_contexts(t1, t2))) {
    return {false, "(0, pi/4) was not rejected"};
  }
  const auto c1 = evolve_x(t2) * evolve_y(t1);
  const auto c2 = evolve_y(t2) * evolve_x(t1);
  if (scalar_identity_eigenvalue(c1) || scalar_identity_eigenvalue(c2)) {
    return {false, "scalar detected at (0, pi/4)"};
  }
  return {true, "scalars at (0, pi/2); none at (0, pi/4)"};
}

Outcome generalization_scan() {
  constexpr std::size_t kGrid = 360;
  const auto points = scan_commuting_angles(kGrid);
  const std::vector<std::size_t> zeros = {90, 270};
  std::vector<std::size_t> accepted;
  std::vector<std::size_t> weak;
  double weakest = 1e300;
  for (const auto& p : points) {
    if (p.accepted()) accepted.push_back(p.index);
    bool is_zero = false;
    bool near_zero = false;
    for (const std::size_t z : zeros) {
      const std::size_t d = p.index > z ? p.index - z : z - p.index;
      is_zero = is_zero || d == 0;
      near_zero = near_zero || d == 1;
    }
    if (is_zero) {
      if (!(p.commutator_norm < kAcceptNorm)) return {false, "norm at a zero is not below 1e-10"};
    } else if (!near_zero && !(p.commutator_norm > kRejectNorm)) {
      weak.push_back(p.index);
      weakest = std::min(weakest, p.commutator_norm);
    }
  }
  if (accepted != zeros) return {false, "accepted indices differ from {90, 270}"};
  if (!weak.empty()) {
    std::ostringstream os;
    os << "accepted {90, 270}, but norm <= 0.1 at indices";
    for (const std::size_t i : weak) os << ' ' << i;
    os.precision(6);
    os << " (min " << weakest << ")";
    return {false, os.str()};
  }
  return {true, "accepted exactly {90, 270}; other norms > 0.1 outside one step"};
}

Outcome equation_of_motion() {
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const double t = kTwoPi * k / 100.0;
    for (const PauliLetter axis : {PauliLetter::X, PauliLetter::Y}) {
      const auto fd = Complex(1.0 / (2 * kFiniteDifferenceStep)) *
                      (evolve(axis, PrecessionAngle::radians(t + kFiniteDifferenceStep)) -
                       evolve(axis, PrecessionAngle::radians(t - kFiniteDifferenceStep)));
      // Right-hand side (1/i hbar)[sigma, H], evolved term by term to t.
      const PauliPolynomial generator = heisenberg_rhs(axis);
      PauliPolynomial rhs(1);
      for (const auto& [word, coef] : generator.terms()) {
        rhs = rhs + coef * evolve(word[0], PrecessionAngle::radians(t));
      }
      for (const PauliLetter l : {PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
        worst = std::max(worst, std::abs(fd.coefficient(PauliWord{l}) -
                                         rhs.coefficient(PauliWord{l})));
      }
    }
  }
  std::ostringstream os;
  os.precision(3);
  os << "max coefficient gap " << worst << " over 100 points";
  return {worst <= kFiniteDifferenceTol, os.str()};
}

ConstraintSystem fuzz_system(std::mt19937_64& gen) {
  std::uniform_int_distribution<int> nvars(1, 10);
  std::uniform_int_distribution<int> ncons(1, 8);
  std::bernoulli_distribution coin(0.5);
  const int n = nvars(gen);
  std::vector<SignVariable> vars;
  for (int i = 0; i < n; ++i) vars.push_back({"f", "xyz"[i % 3], i / 3 + 1});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<MonomialConstraint> cons;
  const int m = ncons(gen);
  for (int k = 0; k < m; ++k) {
    std::vector<SignVariable> vs;
    for (const auto& v : vars) {
      if (coin(gen)) vs.push_back(v);
    }
    if (vs.empty()) vs.push_back(vars[pick(gen)]);
    cons.push_back({vs, coin(gen) ? Sign::plus() : Sign::minus()});
  }
  return ConstraintSystem(vars, cons);
}

Outcome cross_decider() {
  std::mt19937_64 gen(0x7e3c0de);
  int certified = 0;
  for (int i = 0; i < kFuzzSystems; ++i) {
    const ConstraintSystem sys = fuzz_system(gen);
    const auto cert = parity_certificate(sys);
    const auto count = count_assignments(sys);
    if (cert) {
      ++certified;
      if (count != 0 || !verify_certificate(sys, *cert)) {
        return {false, "counterexample at system " + std::to_string(i)};
      }
    }
    try {
      cross_check(sys);
    } catch (const std::logic_error& e) {
      return {false, std::string("deciders disagree: ") + e.what()};
    }
  }
  return {true, std::to_string(kFuzzSystems) + " systems, " + std::to_string(certified) +
                    " certified, no counterexample"};
}

}  // namespace

int main(int argc, char** argv) {
  const ConstraintSystem temporal_system = constraints_from_contexts(quarter_turn_set());
  const std::vector<Criterion> criteria = {
      {1, "temporal eigenvalue structure", 1.0, temporal_eigenvalues},
      {2, "temporal NCHV contradiction", 1e-3, [&] { return temporal_nchv(temporal_system); }},
      {3, "spatial Peres baseline", 1.0, spatial_baseline},
      {4, "sequential-measurement determinism", 5.0, sequential_determinism},
      {5, "state independence", 0.0, state_independence},
      {6, "generalization scan", 2.0, generalization_scan},
      {7, "equation-of-motion consistency", 0.0, equation_of_motion},
      {8, "cross-decider agreement", 0.0, cross_decider},
  };

  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  int failures = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds <= 0.0 || secs < c.limit_seconds;
    const bool pass = out.ok && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s [%d] %s: %s; %.6f s", pass ? "PASS" : "FAIL", c.id, c.name,
                out.detail.c_str(), secs);
    if (c.limit_seconds > 0.0) std::printf(" (limit %g s)", c.limit_seconds);
    if (!in_time) std::printf(" over time limit");
    std::printf("\n");
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
