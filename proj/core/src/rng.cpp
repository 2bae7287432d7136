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

#include "mimo_bands/rng.hpp"

#include <cmath>

namespace mimo_bands
{

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t study_id, std::uint64_t grid_index,
                          std::uint64_t trial_index)
{
    std::uint64_t h = splitmix64(master_seed);
    h = splitmix64(h ^ study_id);
    h = splitmix64(h ^ grid_index);
    h = splitmix64(h ^ trial_index);
    return h;
}

RngStream make_stream(std::uint64_t seed)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    return RngStream(seq);
}

double standard_normal(RngStream &rng)
{
    std::normal_distribution<double> dist(0.0, 1.0);
    return dist(rng);
}

double uniform(RngStream &rng, double lo, double hi)
{
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(rng);
}

cplx complex_normal(RngStream &rng, double variance)
{
    std::normal_distribution<double> dist(0.0, std::sqrt(0.5 * variance));
    const double re = dist(rng);
    const double im = dist(rng);
    return {re, im};
}

} // namespace mimo_bands
