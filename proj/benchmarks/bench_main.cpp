// Copyright 2026 The revgate Authors
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

#include "revgate/algebra.hpp"
#include "revgate/circuit.hpp"
#include "revgate/constructions.hpp"
#include "revgate/generation.hpp"
#include "revgate/hypergraphs.hpp"
#include "revgate/search.hpp"
#include "revgate/stabilizer_chain.hpp"

using namespace revgate;

static void BM_ChainAlt(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto gens = controlled_instance_perms(Family::P3, 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(build_chain(gens).order());
  state.SetLabel(std::to_string(gens.size()) + " generators");
}
BENCHMARK(BM_ChainAlt)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_ChainAltWithBound(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto gens = controlled_instance_perms(Family::P3, 2, n);
  ChainOptions opt;
  opt.order_bound = target_order(TargetClass::alt(), 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(build_chain(gens, opt).order());
}
BENCHMARK(BM_ChainAltWithBound)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_Factorize(benchmark::State& state) {
  const auto gens = controlled_instance_perms(Family::P3, 2, 4);
  const auto chain = build_chain(gens);
  std::mt19937_64 rng(1);
  std::vector<Code> t(16);
  std::iota(t.begin(), t.end(), 0U);
  std::vector<GatePerm> targets;
  while (targets.size() < 64) {
    std::shuffle(t.begin(), t.end(), rng);
    GatePerm g(2, 4, t);
    if (perm_parity(g) == Parity::Even) targets.push_back(g);
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(factorize(chain, targets[i++ % targets.size()]));
}
BENCHMARK(BM_Factorize);

static void BM_Components(benchmark::State& state) {
  const auto kind = static_cast<GraphKind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(components(kind, 3, 10).count());
  state.SetLabel(to_string(kind) + " q=3 n=10");
}
BENCHMARK(BM_Components)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_ToPermExpand(benchmark::State& state) {
  const auto w = [](const char* s) { return Word::parse(2, s); };
  const ThreeCycleSpec spec{w("000"), w("001"), w("010"), w("011"), w("100")};
  const auto c = expand_controls_3cycle(static_cast<unsigned>(state.range(0)), spec,
                                        Word(2, std::vector<Symbol>(state.range(0), 1)));
  for (auto _ : state) benchmark::DoNotOptimize(to_perm(c));
  state.SetLabel(std::to_string(c.size()) + " gates");
}
BENCHMARK(BM_ToPermExpand)->DenseRange(2, 4)->Unit(benchmark::kMicrosecond);

static void BM_WordCycleSearch(benchmark::State& state) {
  const InstanceSet set({controlled_rotation_def()}, 4);
  const auto target = word_cycle_targets()[0];
  for (auto _ : state) {
    benchmark::DoNotOptimize(state.range(0) == 0 ? bfs_min(target, set, 6) : mitm_min(target, set, 6));
  }
  state.SetLabel(state.range(0) == 0 ? "bfs" : "mitm");
}
BENCHMARK(BM_WordCycleSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Rotation01Search(benchmark::State& state) {
  const InstanceSet set({controlled_rotation_def()}, 5);
  const auto target = controlled_rotation(Word::parse(2, "01"));
  for (auto _ : state) benchmark::DoNotOptimize(mitm_min(target, set, 8));
}
BENCHMARK(BM_Rotation01Search)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_MAIN();
