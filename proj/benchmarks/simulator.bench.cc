// Copyright 2026 The qindep Authors
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

#include "qindep/adversary.h"
#include "qindep/circuit.h"
#include "qindep/random_circuit.h"
#include "qindep/simulator.h"

namespace {

using namespace qindep;

Circuit bench_circuit(std::size_t qubits_per_register, std::size_t gates) {
    return random_circuit(SubsystemLayout{qubits_per_register, qubits_per_register, qubits_per_register}, gates, 11);
}

void BM_run(benchmark::State &state) {
    Circuit c = bench_circuit(static_cast<std::size_t>(state.range(0)), 100);
    DenseVector s = init_state(c.layout(), 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(c, s));
    }
    state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_run)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_audit(benchmark::State &state) {
    Circuit c = bench_circuit(static_cast<std::size_t>(state.range(0)), 100);
    AdversaryConfig cfg = AdversaryConfig::for_circuit(c);
    for (auto _ : state) {
        benchmark::DoNotOptimize(audit(c, cfg));
    }
}
BENCHMARK(BM_audit)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_measure_all(benchmark::State &state) {
    Circuit c = bench_circuit(6, 100);
    DenseVector s = run(c, init_state(c.layout(), 0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure_all(s, c.layout()));
    }
}
BENCHMARK(BM_measure_all)->Unit(benchmark::kMillisecond);

void BM_sample(benchmark::State &state) {
    Circuit c = bench_circuit(6, 100);
    DenseVector s = build_adversarial_initial(c, AdversaryConfig::for_circuit(c));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample(s, c.layout(), 100000, 42));
    }
}
BENCHMARK(BM_sample)->Unit(benchmark::kMillisecond);

void BM_compile_unitary(benchmark::State &state) {
    std::size_t q = static_cast<std::size_t>(state.range(0));
    Circuit c = random_circuit(SubsystemLayout{q, q, q}, 50, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compile_unitary(c));
    }
}
BENCHMARK(BM_compile_unitary)->DenseRange(1, 4, 1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
