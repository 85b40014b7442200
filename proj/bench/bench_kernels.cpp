// Copyright 2026 The plateau-lab Authors
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

#include <omp.h>

#include "plateau/autoencoder/autoencoder.hpp"
#include "plateau/core/kernels.hpp"
#include "plateau/core/haar.hpp"
#include "plateau/lab/lab.hpp"

using namespace plateau;

namespace {

Statevector random_state(int n, std::uint64_t seed) {
    Rng rng(seed);
    std::normal_distribution<double> g;
    std::vector<Complex> amps(std::size_t{1} << n);
    double norm = 0;
    for (auto &a : amps) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return Statevector(n, std::move(amps));
}

void two_qubit_args(benchmark::internal::Benchmark *b) {
    for (int n : {10, 14, 18, 20}) {
        b->Arg(n);
    }
}

} // namespace

static void BM_TwoQubitReference(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    Statevector s = random_state(n, 1);
    const CMatrix u = haar_random_unitary(4, 2).matrix();
    const std::vector<int> t{1, n - 2};
    for (auto _ : state) {
        kernels::apply_matrix_reference(s.mutable_amplitudes(), n, u, t);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_TwoQubitReference)->Apply(two_qubit_args);

static void BM_TwoQubitKernel(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    Statevector s = random_state(n, 1);
    const CMatrix u = haar_random_unitary(4, 2).matrix();
    const std::vector<int> t{1, n - 2};
    for (auto _ : state) {
        kernels::apply_matrix(s.mutable_amplitudes(), n, u, t);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_TwoQubitKernel)->Apply(two_qubit_args);

static void BM_TwoQubitKernelOneThread(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    Statevector s = random_state(n, 1);
    const CMatrix u = haar_random_unitary(4, 2).matrix();
    const std::vector<int> t{1, n - 2};
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    for (auto _ : state) {
        kernels::apply_matrix(s.mutable_amplitudes(), n, u, t);
        benchmark::ClobberMemory();
    }
    omp_set_num_threads(saved);
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_TwoQubitKernelOneThread)->Apply(two_qubit_args);

static void BM_NormReference(benchmark::State &state) {
    const Statevector s = random_state(20, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::norm_squared_reference(s.amplitudes()));
    }
}
BENCHMARK(BM_NormReference);

static void BM_Norm(benchmark::State &state) {
    const Statevector s = random_state(20, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::norm_squared(s.amplitudes()));
    }
}
BENCHMARK(BM_Norm);

// Monte-Carlo gradient sampling, serial vs the OpenMP default.
static void BM_GradientSamples(benchmark::State &state) {
    ScanConfig cfg;
    cfg.n = 8;
    cfg.L = 2;
    cfg.family = CostFamily::Local;
    cfg.target = {1, 1, 0};
    cfg.samples = 200;
    cfg.workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_gradients(cfg));
    }
}
BENCHMARK(BM_GradientSamples)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

static void BM_AutoencoderDense(benchmark::State &state) {
    const AutoencoderInstance inst = build_instance(1, static_cast<int>(state.range(0)), 2);
    const CostEvaluator eval(inst.local_spec());
    Rng rng(5);
    const ParameterVector p = ParameterVector::uniform(inst.layout, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval.exact(p));
    }
}
BENCHMARK(BM_AutoencoderDense)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

static void BM_AutoencoderLightCone(benchmark::State &state) {
    const AutoencoderInstance inst = build_instance(1, static_cast<int>(state.range(0)), 2);
    const CostEvaluator eval(inst.local_spec());
    Rng rng(5);
    const ParameterVector p = ParameterVector::uniform(inst.layout, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval.lightcone(p));
    }
}
BENCHMARK(BM_AutoencoderLightCone)->Arg(14)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
