// Copyright 2026 The itemnet Authors.
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

#include "bench_graphs.hpp"
#include "itemnet/graphstats.hpp"

namespace {

using namespace itemnet;

void BM_Kcore(benchmark::State &state) {
    auto graph = bench::planted_graph(static_cast<std::size_t>(state.range(0)), 10, 0.1, 0.005, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(kcore(graph));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graph.num_edges()));
}
BENCHMARK(BM_Kcore)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_Summarize(benchmark::State &state) {
    auto graph = bench::planted_graph(static_cast<std::size_t>(state.range(0)), 10, 0.1, 0.005, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(summarize(graph));
}
BENCHMARK(BM_Summarize)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_EigenvectorCentrality(benchmark::State &state) {
    auto graph = bench::planted_graph(static_cast<std::size_t>(state.range(0)), 10, 0.1, 0.005, 9);
    for (auto _ : state)
        benchmark::DoNotOptimize(eigenvector_centrality(graph));
}
BENCHMARK(BM_EigenvectorCentrality)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

} // namespace
