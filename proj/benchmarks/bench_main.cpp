// SPDX-License-Identifier: Apache-2.0
//
// mimo_bands: massive MIMO channel simulation for micro- and millimeter-wave bands
// Copyright (C) 2026 The mimo_bands authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "mimo_bands/beamforming.hpp"
#include "mimo_bands/channel_models.hpp"
#include "mimo_bands/metrics.hpp"

#include <benchmark/benchmark.h>

using namespace mimo_bands;

namespace
{

void BM_GenMmWave(benchmark::State &state)
{
    const auto n_r = static_cast<std::size_t>(state.range(0));
    const auto n_t = static_cast<std::size_t>(state.range(1));
    ClusterConfig cfg;
    auto rng = make_stream(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(gen_mm_wave(n_r, n_t, cfg, rng));
}
BENCHMARK(BM_GenMmWave)->Args({16, 64})->Args({64, 256});

void BM_GenMuWave(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    auto rng = make_stream(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(gen_mu_wave(n, 4 * n, 1.0, rng));
}
BENCHMARK(BM_GenMuWave)->Arg(16)->Arg(64);

void BM_CmFdBeamformers(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    auto rng = make_stream(2);
    const auto h = gen_mu_wave(n, 4 * n, 1.0, rng).entries;
    for (auto _ : state)
        benchmark::DoNotOptimize(cm_fd_beamformers(h, 3));
}
BENCHMARK(BM_CmFdBeamformers)->Arg(16)->Arg(64);

void BM_SpectralEfficiency(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    auto rng = make_stream(3);
    const auto draw = gen_mm_wave(n, 4 * n, ClusterConfig{}, rng);
    const CMatrix h = draw.matrix.normalized();
    const auto bf = an_beamformers(flatten_paths(draw), 3, 4 * n, n);
    for (auto _ : state)
        benchmark::DoNotOptimize(spectral_efficiency(h, bf, 1.0));
}
BENCHMARK(BM_SpectralEfficiency)->Arg(16)->Arg(64);

void BM_NumericalRank(benchmark::State &state)
{
    auto rng = make_stream(4);
    const auto h = gen_mm_wave(64, 64, ClusterConfig{}, rng).matrix.entries;
    for (auto _ : state)
        benchmark::DoNotOptimize(numerical_rank(h));
}
BENCHMARK(BM_NumericalRank);

} // namespace

BENCHMARK_MAIN();
