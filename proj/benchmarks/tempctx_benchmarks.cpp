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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tempctx/contexts.hpp"
#include "tempctx/nchv.hpp"
#include "tempctx/simulator.hpp"

namespace tempctx {
namespace {

void BM_TermMultiply(benchmark::State& state) {
  const PauliTerm a = PauliTerm::parse("XY");
  const PauliTerm b = PauliTerm::parse("ZY", 1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_TermMultiply);

void BM_PolyMultiply(benchmark::State& state) {
  const auto theta = PrecessionAngle::radians(0.7);
  const PauliPolynomial x = evolve_x(theta);
  const PauliPolynomial y = evolve_y(theta);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_PolyMultiply);

void BM_BuildTemporal(benchmark::State& state) {
  const auto t1 = PrecessionAngle::quarter_turns(0);
  const auto t2 = PrecessionAngle::quarter_turns(1);
  for (auto _ : state) benchmark::DoNotOptimize(build_temporal_contexts(t1, t2));
}
BENCHMARK(BM_BuildTemporal);

void BM_Scan(benchmark::State& state) {
  const auto grid = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan_commuting_angles(grid));
}
BENCHMARK(BM_Scan)->Arg(360)->Arg(3600);

// A chain system over n variables: x_i x_{i+1} = +1 plus x_0 x_{n-1} = -1.
ConstraintSystem odd_cycle(int n) {
  std::vector<SignVariable> vars;
  for (int i = 0; i < n; ++i) vars.push_back({"c", 'x', i + 1});
  std::vector<MonomialConstraint> cons;
  for (int i = 0; i + 1 < n; ++i) cons.push_back({{vars[i], vars[i + 1]}, Sign::plus()});
  cons.push_back({{vars.front(), vars.back()}, Sign::minus()});
  return ConstraintSystem(vars, cons);
}

void BM_Enumerate(benchmark::State& state) {
  const ConstraintSystem sys = odd_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_assignments(sys));
}
BENCHMARK(BM_Enumerate)->DenseRange(4, 20, 4);

void BM_Certificate(benchmark::State& state) {
  const ConstraintSystem sys = odd_cycle(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(parity_certificate(sys));
}
BENCHMARK(BM_Certificate)->DenseRange(4, 20, 4);

void BM_TemporalTrials(benchmark::State& state) {
  const ContextSet set = std::get<ContextSet>(build_temporal_contexts(
      PrecessionAngle::quarter_turns(0), PrecessionAngle::quarter_turns(1)));
  const StateVector psi = make_state(StateKind::random, 1, 3);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_temporal_context(set, 1, psi, n, 42));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TemporalTrials)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Substream(benchmark::State& state) {
  std::uint64_t i = 0;
  for (auto _ : state) {
    Rng rng = substream(42, 1, i++);
    benchmark::DoNotOptimize(rng());
  }
}
BENCHMARK(BM_Substream);

}  // namespace
}  // namespace tempctx

BENCHMARK_MAIN();
