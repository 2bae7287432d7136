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

#ifndef MIMO_BANDS_EXPERIMENTS_HPP
#define MIMO_BANDS_EXPERIMENTS_HPP

#include "mimo_bands/channel_models.hpp"
#include "mimo_bands/config.hpp"
#include "mimo_bands/propagation.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mimo_bands
{

enum class Study
{
    fig2_cm_vs_an,       // CM-FD vs analog steering on the mm-wave channel
    fig3_multiplexing,   // CM-FD spectral efficiency, mu-wave vs mm-wave, over M
    fig4_muwave_csi,     // perfect vs LMMSE-estimated CSI on the mu-wave channel
    fig6_eta             // entry-imbalance ratio eta for both bands
};

const char *to_string(Study study);
Study study_from_string(std::string_view name);
std::uint64_t study_id(Study study);

struct AntennaPair
{
    std::size_t n_r = 0;
    std::size_t n_t = 0;

    friend bool operator==(const AntennaPair &, const AntennaPair &) = default;
};

struct EstimationSettings
{
    std::size_t tau_p = 0;                  // 0 means tau_p = N_T
    double pilot_power = 1.0;
    std::optional<double> training_snr_db;  // unset: training SNR follows the data SNR point
};

struct ExperimentConfig
{
    Study study = Study::fig2_cm_vs_an;
    MuWaveLinkParams mu;
    double mu_distance_m = 75.0;
    ClusterConfig mm;
    std::vector<AntennaPair> antennas{{16, 64}, {64, 256}};
    std::vector<std::size_t> m_values{1, 3};
    std::vector<double> snr_grid_db{-10.0, -5.0, 0.0, 5.0, 10.0};
    std::size_t n_trials = 100;
    std::uint64_t master_seed = 1;
    EstimationSettings estimation;

    // Throws ConfigError naming the offending key.
    void validate() const;
};

// Builds a config from key = value entries; unknown keys are rejected.
// Scenario rows can be overridden with scenario.<name>.{n,sigma_db,b,f0_ghz}.
ExperimentConfig experiment_config_from(const KeyValueConfig &kv);

// One aggregated value of a sweep. For fig6_eta the value columns hold eta, and
// m = 0 / snr_db = 0 mark the axes that do not apply.
struct CurvePoint
{
    std::string study;
    std::size_t n_r = 0;
    std::size_t n_t = 0;
    std::size_t m = 0;
    std::string method;
    double snr_db = 0.0;
    double se_mean = 0.0;
    double se_std_err = 0.0;
    std::size_t n_trials = 0;

    friend bool operator==(const CurvePoint &, const CurvePoint &) = default;
};

// Runs every trial of every grid point. Trial t of antenna pair g draws from
// substream(master_seed, study, g, t), and per-trial results are reduced in trial order,
// so the output does not depend on `workers`. workers == 0 picks the hardware concurrency.
std::vector<CurvePoint> run_study(const ExperimentConfig &cfg, std::size_t workers = 1);

} // namespace mimo_bands

#endif
