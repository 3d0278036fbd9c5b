// Copyright 2026 The eur Authors
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

// Serial reference kernels against their OpenMP counterparts. Both variants
// produce identical output, so the ratio is the parallel speedup.

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "eur/bounds.hpp"
#include "eur/channel.hpp"
#include "eur/sweep.hpp"

namespace {

eur::SweepConfig sweep_config(benchmark::State& state) {
    auto cfg = eur::preset_config(eur::Preset::fig1);
    cfg.steps = static_cast<int>(state.range(0));
    return cfg;
}

void BM_SweepSerial(benchmark::State& state) {
    const auto cfg = sweep_config(state);
    for (auto _ : state) benchmark::DoNotOptimize(eur::run_sweep_serial(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepParallel(benchmark::State& state) {
    const auto cfg = sweep_config(state);
    for (auto _ : state) benchmark::DoNotOptimize(eur::run_sweep(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<eur::DensityMatrix> batch_states(std::size_t n) {
    const auto rho = eur::bell_diagonal_p(0.5);
    std::vector<eur::DensityMatrix> states;
    states.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double r = (std::numbers::pi / 4) * static_cast<double>(k) / static_cast<double>(n);
        states.push_back(eur::apply_to_memory(eur::unruh_channel(r), rho));
    }
    return states;
}

void BM_BatchSerial(benchmark::State& state) {
    const auto states = batch_states(static_cast<std::size_t>(state.range(0)));
    const auto q = eur::pauli_observable(eur::Axis::x);
    const auto r = eur::pauli_observable(eur::Axis::y);
    for (auto _ : state) benchmark::DoNotOptimize(eur::evaluate_eur_batch_serial(q, r, states));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BatchParallel(benchmark::State& state) {
    const auto states = batch_states(static_cast<std::size_t>(state.range(0)));
    const auto q = eur::pauli_observable(eur::Axis::x);
    const auto r = eur::pauli_observable(eur::Axis::y);
    for (auto _ : state) benchmark::DoNotOptimize(eur::evaluate_eur_batch(q, r, states));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(101)->Arg(1001)->Arg(10001)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(101)->Arg(1001)->Arg(10001)->UseRealTime();
BENCHMARK(BM_BatchSerial)->Arg(1000)->Arg(10000)->UseRealTime();
BENCHMARK(BM_BatchParallel)->Arg(1000)->Arg(10000)->UseRealTime();

BENCHMARK_MAIN();
