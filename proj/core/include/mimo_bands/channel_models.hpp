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

#ifndef MIMO_BANDS_CHANNEL_MODELS_HPP
#define MIMO_BANDS_CHANNEL_MODELS_HPP

#include "mimo_bands/array_geometry.hpp"
#include "mimo_bands/propagation.hpp"
#include "mimo_bands/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

namespace mimo_bands
{

enum class Band
{
    mu_wave,
    mm_wave
};

const char *to_string(Band band);

struct ChannelMetadata
{
    std::uint64_t seed = 0;         // Filled in by the experiment harness; 0 when unknown
    // Linear power gain used to normalize to received SNR. mu-wave: beta. mm-wave: the
    // per-antenna received power averaged over the path gains, given the drawn attenuations,
    // i.e. (sum of NLOS attenuations + N_cl N_ray L_LOS) / (N_cl N_ray).
    double large_scale_gain = 1.0;
    bool los_present = false;
};

// N_R x N_T baseband channel realization.
struct ChannelMatrix
{
    CMatrix entries;
    Band band = Band::mu_wave;
    ChannelMetadata metadata;

    std::size_t n_r() const { return static_cast<std::size_t>(entries.rows()); }
    std::size_t n_t() const { return static_cast<std::size_t>(entries.cols()); }

    // entries / sqrt(large_scale_gain): the channel seen after path loss, so that a
    // transmit SNR applied to it reads as received SNR.
    CMatrix normalized() const;
};

// One propagation ray. Attenuation is stored as a raw linear power gain; the amplitude
// factor sqrt(attenuation_linear) is applied at assembly time.
struct PathComponent
{
    cplx gain{1.0, 0.0};             // alpha_{i,l}, or exp(j theta) for the LOS term
    double attenuation_linear = 1.0;
    Angle aod;
    Angle aoa;
    bool is_los = false;
};

enum class PathLengthModel
{
    link_distance,   // every path has length equal to the link distance
    excess_uniform   // link distance times U(1, max_excess_factor)
};

enum class AttenuationModel
{
    scenario,  // per-path attenuation from the scenario's path-loss row
    unit       // attenuation forced to 1 (normalization studies)
};

enum class PathGainModel
{
    rayleigh,  // alpha ~ CN(0, 1)
    unit       // alpha = 1
};

struct ClusterConfig
{
    std::size_t n_cl = 5;
    std::size_t n_ray = 10;
    double ray_angle_spread_rad = 5.0 * std::numbers::pi / 180.0;  // std-dev of the Laplacian ray offsets
    MmWaveScenario scenario = builtin_scenarios()[3];              // umi-open-square-nlos
    MmWaveScenario los_scenario = builtin_scenarios()[2];          // umi-open-square-los
    LosModel los_model{};
    double link_distance_m = 50.0;
    PathLengthModel path_length_model = PathLengthModel::link_distance;
    double max_excess_factor = 1.5;
    bool shadowing = true;
    AttenuationModel attenuation = AttenuationModel::scenario;
    PathGainModel path_gain = PathGainModel::rayleigh;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct MmWaveChannelDraw
{
    ChannelMatrix matrix;
    std::vector<PathComponent> paths;  // strongest first
    double gamma = 1.0;                // sqrt(N_T N_R / (N_cl N_ray))
    double los_scale = 1.0;            // sqrt(N_T N_R) / gamma, extra weight carried by the LOS term
};

// Path coefficient lumped with its attenuation, relative to gamma.
struct FlatPath
{
    cplx alpha;
    Angle aoa;
    Angle aod;
};

// [H]_{i,j} = sqrt(beta) g_{i,j}, g_{i,j} ~ CN(0,1) i.i.d.
ChannelMatrix gen_mu_wave(std::size_t n_r, std::size_t n_t, double beta, RngStream &rng);

// Clustered channel: gamma * sum_{i,l} alpha_{i,l} sqrt(L(r_{i,l})) a_r a_t^H, plus
// sqrt(N_T N_R L(d)) exp(j theta) a_r a_t^H when the LOS indicator fires.
MmWaveChannelDraw gen_mm_wave(std::size_t n_r, std::size_t n_t, const ClusterConfig &cfg, RngStream &rng);

// Received-power contribution used to rank paths (|lumped alpha|^2).
double path_strength(const PathComponent &path, const MmWaveChannelDraw &draw);

// Single-sum form: gamma * sum_i alpha_i a_r(aoa_i) a_t(aod_i)^H rebuilds the draw.
// Order follows draw.paths (strongest first).
std::vector<FlatPath> flatten_paths(const MmWaveChannelDraw &draw);

CMatrix reconstruct_channel(const std::vector<FlatPath> &paths, double gamma, std::size_t n_r, std::size_t n_t);

} // namespace mimo_bands

#endif
