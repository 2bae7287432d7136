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

#ifndef MIMO_BANDS_RNG_HPP
#define MIMO_BANDS_RNG_HPP

#include "mimo_bands/types.hpp"

#include <cstdint>
#include <random>

namespace mimo_bands
{

// Every random draw in the library goes through a caller-owned stream.
// Streams are never shared between workers.
using RngStream = std::mt19937_64;

// SplitMix64 finalizer. Bijective on 64-bit words.
std::uint64_t splitmix64(std::uint64_t x);

// Counter-based seed derivation: each (master, study, grid, trial) tuple maps to an
// independent seed, so trials can be evaluated in any order on any number of workers.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t study_id, std::uint64_t grid_index,
                          std::uint64_t trial_index);

RngStream make_stream(std::uint64_t seed);

inline RngStream substream(std::uint64_t master_seed, std::uint64_t study_id, std::uint64_t grid_index,
                           std::uint64_t trial_index)
{
    return make_stream(derive_seed(master_seed, study_id, grid_index, trial_index));
}

double standard_normal(RngStream &rng);
double uniform(RngStream &rng, double lo, double hi);

// Circularly-symmetric complex Gaussian, real and imaginary parts each carry variance/2.
cplx complex_normal(RngStream &rng, double variance = 1.0);

} // namespace mimo_bands

#endif
