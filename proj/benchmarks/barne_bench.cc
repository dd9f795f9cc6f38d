// Copyright 2026 The barne-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <benchmark/benchmark.h>

#include "barne/endorsement/adapter.hpp"
#include "barne/endorsement/classify.hpp"
#include "barne/game/equilibrium.hpp"
#include "barne/sim/simulator.hpp"

namespace {

using namespace barne;
using namespace barne::endorsement;

ProtocolParams params(int n, Amendments a) {
  ProtocolParams p;
  p.n = n;
  p.quorum = 2 * n / 3;
  p.reward = 10;
  p.check_cost = 1;
  p.chain_loss = 1000;
  p.fine = 1000;
  p.trap_probability = 0.02;
  p.amendments = a;
  p.validation.quorum_bounds = false;
  return p;
}

void BM_ClassifyPoint(benchmark::State& state) {
  const ProtocolParams p = params(static_cast<int>(state.range(0)), Amendments::kFinesAndTraps);
  const int f = p.n / 5, g = p.n / 3;
  for (auto _ : state) benchmark::DoNotOptimize(classify_point(p, f, g));
}
BENCHMARK(BM_ClassifyPoint)->Arg(30)->Arg(100)->Arg(500);

void BM_SimplexScan(benchmark::State& state) {
  const ProtocolParams p = params(static_cast<int>(state.range(0)), Amendments::kBase);
  for (auto _ : state) benchmark::DoNotOptimize(simplex_scan(p));
  state.SetItemsProcessed(state.iterations() * p.n * (p.n + 1) / 2);
}
BENCHMARK(BM_SimplexScan)->Arg(30)->Arg(60)->Arg(150)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveBarneOnAdapter(benchmark::State& state) {
  ProtocolParams p = params(static_cast<int>(state.range(0)), Amendments::kFines);
  p.quorum = p.n / 2 + 1;
  const GenericGame game = as_generic_game(p);
  const int f = 1, g = p.n / 2;
  for (auto _ : state)
    benchmark::DoNotOptimize(barne_at_counts(game, f, g, id(Strategy::kHonest)));
}
BENCHMARK(BM_ExhaustiveBarneOnAdapter)->DenseRange(4, 7)->Unit(benchmark::kMicrosecond);

void BM_SimulationRounds(benchmark::State& state) {
  sim::SimConfig c;
  c.params = params(30, Amendments::kFinesAndTraps);
  c.point = {4, 10, 30};
  c.rounds = state.range(0);
  c.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(sim::run_simulation(c));
  state.SetItemsProcessed(state.iterations() * c.rounds);
}
BENCHMARK(BM_SimulationRounds)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
