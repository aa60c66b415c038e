/*
Copyright 2026 The pebblemp Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "pebble/generators.hpp"
#include "pebble/graph.hpp"
#include "pebble/oracles.hpp"
#include "pebble/solver.hpp"

using namespace pebble;

static void BM_VcSerial(benchmark::State &st) {
  Graph g = random_graph(static_cast<int>(st.range(0)), 0.4, 7);
  for (auto _ : st) benchmark::DoNotOptimize(vc_bruteforce_serial(g));
}
static void BM_VcParallel(benchmark::State &st) {
  Graph g = random_graph(static_cast<int>(st.range(0)), 0.4, 7);
  for (auto _ : st) benchmark::DoNotOptimize(vc_bruteforce(g));
}
BENCHMARK(BM_VcSerial)->Arg(16)->Arg(20);
BENCHMARK(BM_VcParallel)->Arg(16)->Arg(20);

static void BM_CliqueSerial(benchmark::State &st) {
  Graph g = random_graph(static_cast<int>(st.range(0)), 0.5, 11);
  for (auto _ : st) benchmark::DoNotOptimize(clique_bruteforce_serial(g, 6));
}
static void BM_CliqueParallel(benchmark::State &st) {
  Graph g = random_graph(static_cast<int>(st.range(0)), 0.5, 11);
  for (auto _ : st) benchmark::DoNotOptimize(clique_bruteforce(g, 6));
}
BENCHMARK(BM_CliqueSerial)->Arg(18)->Arg(22);
BENCHMARK(BM_CliqueParallel)->Arg(18)->Arg(22);

static void solve(benchmark::State &st, bool parallel) {
  RandomDagParams p;
  p.n = static_cast<int>(st.range(0));
  p.edge_prob = 0.4;
  p.max_in_degree = 2;
  p.seed = 3;
  CompDag d = gen_random_dag(p).dag;
  SearchOptions o;
  o.parallel = parallel;
  for (auto _ : st) benchmark::DoNotOptimize(exact_opt({2, 3, 2}, d, {}, o));
}
static void BM_SolveSerial(benchmark::State &st) { solve(st, false); }
static void BM_SolveParallel(benchmark::State &st) { solve(st, true); }
BENCHMARK(BM_SolveSerial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveParallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
