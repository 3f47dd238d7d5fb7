// Copyright 2026 The forge authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "forge/codes.h"
#include "forge/concat.h"
#include "forge/graph_state.h"
#include "forge/oracle.h"
#include "forge/stabilizer.h"
#include "forge/tasks.h"

namespace {

using namespace forge;

void bench_concat_levels(benchmark::State &state) {
    AuxOps base = bitflip(3);
    size_t levels = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(concat_levels(base, levels));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()));
}
BENCHMARK(bench_concat_levels)->DenseRange(1, 5);

void bench_dejmps_tower(benchmark::State &state) {
    size_t rounds = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(dejmps_tower(rounds));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()));
}
BENCHMARK(bench_dejmps_tower)->DenseRange(1, 7);

void bench_canonicalize(benchmark::State &state) {
    StabilizerTableau t = to_stabilizers(concat_levels(phaseflip(3), static_cast<size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(canonicalize(t));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()));
}
BENCHMARK(bench_canonicalize)->DenseRange(1, 4);

void bench_to_graph(benchmark::State &state) {
    StabilizerTableau t = to_stabilizers(concat_levels(bitflip(3), static_cast<size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(to_graph(t));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()));
}
BENCHMARK(bench_to_graph)->DenseRange(1, 4);

void bench_dense_oracle(benchmark::State &state) {
    StabilizerTableau t = to_stabilizers(dejmps_tower(static_cast<size_t>(state.range(0))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(state_of(t));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()));
}
BENCHMARK(bench_dense_oracle)->DenseRange(1, 3);

void bench_decode_table(benchmark::State &state) {
    AuxOps dec = bitflip(3).with_side(Side::single_output);
    for (auto _ : state) {
        for (size_t mask = 0; mask < 64; mask++) {
            std::vector<BellOutcome> outcomes(3);
            for (size_t q = 0; q < 3; q++) {
                size_t chunk = (mask >> (2 * q)) & 3;
                outcomes[q] = BellOutcome{(chunk & 2) != 0, (chunk & 1) != 0};
            }
            benchmark::DoNotOptimize(decode_correction(outcomes, dec));
        }
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * 64);
}
BENCHMARK(bench_decode_table);

}  // namespace

BENCHMARK_MAIN();
