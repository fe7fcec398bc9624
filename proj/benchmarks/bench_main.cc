// Copyright 2026 The adaptstab Authors
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

#include <numeric>
#include <vector>

#include "adaptstab/circuit.h"
#include "adaptstab/code.h"
#include "adaptstab/correlation.h"
#include "adaptstab/densesim.h"
#include "adaptstab/metrics.h"
#include "adaptstab/prep.h"
#include "adaptstab/tableau.h"

namespace adaptstab {
namespace {

void BM_RandomCliffordSimulation(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto circuit = random_clifford_circuit(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(simulate(circuit, OutcomePolicy::random(1)));
}
BENCHMARK(BM_RandomCliffordSimulation)->RangeMultiplier(2)->Range(16, 128);

void BM_TableauMeasurement(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto base = random_stabilizer_state(n, 9);
    Rng rng(4);
    for (auto _ : state) {
        auto t = base;
        for (std::size_t q = 0; q < n; ++q) {
            benchmark::DoNotOptimize(t.measure(PauliOperator::single(n, q, PauliLetter::X), std::nullopt, rng));
        }
    }
}
BENCHMARK(BM_TableauMeasurement)->RangeMultiplier(2)->Range(16, 64);

void BM_MinWeightGenerators(benchmark::State& state) {
    const auto t = random_stabilizer_state(static_cast<std::size_t>(state.range(0)), 5);
    for (auto _ : state) benchmark::DoNotOptimize(min_weight_generators(t));
}
BENCHMARK(BM_MinWeightGenerators)->DenseRange(8, 16, 4);

void BM_GlobalPauliCorrelation(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto s = hypergraph_state(n);
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    for (auto _ : state) benchmark::DoNotOptimize(pauli_correlation_strength(s, all));
}
BENCHMARK(BM_GlobalPauliCorrelation)->DenseRange(6, 12, 3);

void BM_PrepareAndVerify(benchmark::State& state) {
    const auto code = toric_code(static_cast<std::size_t>(state.range(0)));
    VerificationOptions options;
    options.exhaustive = false;
    options.threads = 1;
    for (auto _ : state) {
        const auto plan = prepare_state(code);
        benchmark::DoNotOptimize(verify_preparation(plan.circuit, plan.target, options));
    }
}
BENCHMARK(BM_PrepareAndVerify)->DenseRange(2, 4, 1);

void BM_GhzExhaustiveVerification(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto circuit = ghz_adaptive(n, 4, 2);
    auto target = StabilizerTableau::zero_state(n);
    target.h(0);
    for (std::size_t q = 1; q < n; ++q) target.cnot(0, q);
    VerificationOptions options;
    options.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(verify_preparation(circuit, target, options));
}
BENCHMARK(BM_GhzExhaustiveVerification)->Arg(16)->Arg(32);

}  // namespace
}  // namespace adaptstab

BENCHMARK_MAIN();
