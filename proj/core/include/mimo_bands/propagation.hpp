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

#ifndef MIMO_BANDS_PROPAGATION_HPP
#define MIMO_BANDS_PROPAGATION_HPP

#include "mimo_bands/rng.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mimo_bands
{

inline constexpr double speed_of_light_m_s = 299792458.0;

double db_to_linear(double db);
double linear_to_db(double linear);

// ---------- Sub-6 GHz large-scale fading ----------

// Inputs of the three-slope path loss with COST-Hata offset.
struct MuWaveLinkParams
{
    double f_mhz = 1900.0;      // Carrier frequency in MHz
    double h_t_m = 15.0;        // Transmitter antenna height in meters
    double h_r_m = 1.65;        // Receiver antenna height in meters
    double d0_m = 50.0;         // First breakpoint in meters
    double d1_m = 100.0;        // Second breakpoint in meters
    double sigma_sh_db = 8.0;   // Log-normal shadowing standard deviation in dB

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

// L = 46.3 + 33.9 log10 f - 13.82 log10 hT - (1.1 log10 f - 0.7) hR + 1.56 log10 f - 0.8
double cost_hata_offset(const MuWaveLinkParams &params);

// Three-slope path loss (a gain, i.e. negative) in dB:
//   d >  d1        : -L - 35 log10 d
//   d0 < d <= d1   : -L - 15 log10 d1 - 20 log10 d
//   d <= d0        : -L - 15 log10 d1 - 20 log10 d0
double mu_wave_pathloss_db(double d_m, const MuWaveLinkParams &params);

// Linear large-scale gain beta = 10^(PL/10) * 10^(0.1 sigma_sh z), z ~ N(0,1).
// One shadowing draw per call; the stream is consumed even when sigma_sh_db == 0.
double mu_wave_beta(double d_m, const MuWaveLinkParams &params, RngStream &rng);

// ---------- Millimeter-wave attenuation ----------

struct MmWaveScenario
{
    std::string name;
    double n = 2.0;                  // Path loss exponent
    double sigma_db = 0.0;           // Shadow fading standard deviation in dB
    double b = 0.0;                  // Frequency-dependence of the exponent
    std::optional<double> f0_ghz;    // Reference frequency, only meaningful when b != 0
    double f_ghz = 73.0;             // Operating carrier frequency

    void validate() const;
    double wavelength_m() const { return speed_of_light_m_s / (f_ghz * 1e9); }
};

// Attenuation in dB of a path of length r:
//   -20 log10(4 pi / lambda) - 10 n [1 - b + b f / f0] log10(r) - sigma * shadow_z
// Pass shadow_z = 0 for the median value.
double mm_wave_attenuation_db(double r_m, const MmWaveScenario &scenario, double shadow_z);

// The eight built-in scenario rows (four environments, LOS and NLOS each), in registry order.
const std::vector<MmWaveScenario> &builtin_scenarios();

// Mutable registry seeded from the built-in rows. Lookups are by kebab-case name,
// e.g. "umi-street-canyon-los".
class ScenarioRegistry
{
public:
    ScenarioRegistry();

    const std::vector<MmWaveScenario> &all() const { return scenarios_; }
    bool contains(std::string_view name) const;

    // Copy of the named row with the operating frequency set. Throws std::out_of_range.
    MmWaveScenario get(std::string_view name, double f_ghz) const;

    // Replaces fields of an existing row, or appends a new one.
    void upsert(const MmWaveScenario &scenario);

    // Name of the LOS row of the same environment ("x-nlos" -> "x-los"); identity for LOS rows.
    static std::string los_counterpart(std::string_view name);

private:
    std::vector<MmWaveScenario> scenarios_;
};

// ---------- Line-of-sight indicator ----------

enum class LosMode
{
    always,
    never,
    bernoulli
};

// Bernoulli mode uses p(d) = min(1, d1/d) (1 - exp(-d/d2)) + exp(-d/d2), the urban-micro
// LOS probability curve; d1 and d2 are configurable.
struct LosModel
{
    LosMode mode = LosMode::bernoulli;
    double d1_m = 20.0;
    double d2_m = 39.0;

    double probability(double d_m) const;
};

bool draw_los(double d_m, const LosModel &model, RngStream &rng);

} // namespace mimo_bands

#endif
