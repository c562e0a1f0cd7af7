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

#include <random>

#include <benchmark/benchmark.h>

#include "bench_graphs.hpp"
#include "itemnet/bipartite.hpp"

namespace {

using namespace itemnet;

// Users watch a few items each with a skewed popularity profile.
InteractionSet make_interactions(std::size_t users, std::size_t items, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::geometric_distribution<int> length(0.05);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Interaction> rows;
    for (std::size_t u = 0; u < users; ++u) {
        int k = 1 + length(rng);
        for (int i = 0; i < k; ++i) {
            auto item = static_cast<std::size_t>(static_cast<double>(items) * unit(rng) * unit(rng));
            rows.push_back({"u" + std::to_string(u), "i" + std::to_string(item)});
        }
    }
    return InteractionSet(std::move(rows));
}

void BM_ProjectItems(benchmark::State &state) {
    auto users = static_cast<std::size_t>(state.range(0));
    std::size_t items = 2000;
    auto universe = bench::numbered(items, "i");
    auto incidence = build_incidence(make_interactions(users, items, 7), universe).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(project_items(incidence));
    state.counters["links"] = static_cast<double>(incidence.num_links());
}
BENCHMARK(BM_ProjectItems)->Arg(1000)->Arg(10000)->Arg(50000)->Unit(benchmark::kMillisecond);

void BM_Binarize(benchmark::State &state) {
    std::size_t items = 2000;
    auto universe = bench::numbered(items, "i");
    auto incidence = build_incidence(make_interactions(20000, items, 11), universe).graph;
    auto projection = project_items(incidence);
    for (auto _ : state)
        benchmark::DoNotOptimize(binarize(projection, incidence, 0.75));
}
BENCHMARK(BM_Binarize)->Unit(benchmark::kMillisecond);

} // namespace
