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

#include "mimo_bands/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mimo_bands
{

double db_to_linear(double db) { return std::pow(10.0, 0.1 * db); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

void MuWaveLinkParams::validate() const
{
    if (!(f_mhz > 0.0))
        throw std::invalid_argument("f_mhz: carrier frequency must be positive");
    if (!(h_t_m > 0.0))
        throw std::invalid_argument("h_t_m: transmitter height must be positive");
    if (!(h_r_m > 0.0))
        throw std::invalid_argument("h_r_m: receiver height must be positive");
    if (!(d0_m > 0.0))
        throw std::invalid_argument("d0_m: breakpoint must be positive");
    if (!(d0_m < d1_m))
        throw std::invalid_argument("d0_m: first breakpoint must be smaller than d1_m");
    if (!(sigma_sh_db >= 0.0))
        throw std::invalid_argument("sigma_sh_db: shadowing deviation must be non-negative");
}

double cost_hata_offset(const MuWaveLinkParams &params)
{
    params.validate();
    const double lf = std::log10(params.f_mhz);
    return 46.3 + 33.9 * lf - 13.82 * std::log10(params.h_t_m) - (1.1 * lf - 0.7) * params.h_r_m +
           1.56 * lf - 0.8;
}

double mu_wave_pathloss_db(double d_m, const MuWaveLinkParams &params)
{
    if (!(d_m > 0.0))
        throw std::invalid_argument("mu_wave_pathloss_db: distance must be positive");

    const double L = cost_hata_offset(params);
    if (d_m > params.d1_m)
        return -L - 35.0 * std::log10(d_m);
    if (d_m > params.d0_m)
        return -L - 15.0 * std::log10(params.d1_m) - 20.0 * std::log10(d_m);
    return -L - 15.0 * std::log10(params.d1_m) - 20.0 * std::log10(params.d0_m);
}

double mu_wave_beta(double d_m, const MuWaveLinkParams &params, RngStream &rng)
{
    const double pl_db = mu_wave_pathloss_db(d_m, params);
    const double z = standard_normal(rng);
    return db_to_linear(pl_db) * std::pow(10.0, 0.1 * params.sigma_sh_db * z);
}

void MmWaveScenario::validate() const
{
    if (!(n > 0.0))
        throw std::invalid_argument("scenario " + name + ": n must be positive");
    if (!(sigma_db >= 0.0))
        throw std::invalid_argument("scenario " + name + ": sigma_db must be non-negative");
    if (!(b >= 0.0 && b < 1.0))
        throw std::invalid_argument("scenario " + name + ": b must lie in [0, 1)");
    if (b != 0.0 && !(f0_ghz && *f0_ghz > 0.0))
        throw std::invalid_argument("scenario " + name + ": f0_ghz must be positive when b != 0");
    if (!(f_ghz > 0.0))
        throw std::invalid_argument("scenario " + name + ": f_ghz must be positive");
}

double mm_wave_attenuation_db(double r_m, const MmWaveScenario &scenario, double shadow_z)
{
    if (!(r_m > 0.0))
        throw std::invalid_argument("mm_wave_attenuation_db: path length must be positive");
    scenario.validate();

    // b c / (lambda f0) == b f / f0
    const double bracket = scenario.b == 0.0 ? 1.0 : 1.0 - scenario.b + scenario.b * scenario.f_ghz / *scenario.f0_ghz;
    const double fspl_1m = 20.0 * std::log10(4.0 * std::numbers::pi / scenario.wavelength_m());
    return -fspl_1m - 10.0 * scenario.n * bracket * std::log10(r_m) - scenario.sigma_db * shadow_z;
}

const std::vector<MmWaveScenario> &builtin_scenarios()
{
    static const std::vector<MmWaveScenario> rows = {
        {"umi-street-canyon-los", 1.98, 3.1, 0.0, std::nullopt, 73.0},
        {"umi-street-canyon-nlos", 3.19, 8.2, 0.0, std::nullopt, 73.0},
        {"umi-open-square-los", 1.85, 4.2, 0.0, std::nullopt, 73.0},
        {"umi-open-square-nlos", 2.89, 7.1, 0.0, std::nullopt, 73.0},
        {"inh-indoor-office-los", 1.73, 3.02, 0.0, std::nullopt, 73.0},
        {"inh-indoor-office-nlos", 3.19, 8.29, 0.06, 24.2, 73.0},
        {"inh-shopping-mall-los", 1.73, 2.01, 0.0, std::nullopt, 73.0},
        {"inh-shopping-mall-nlos", 2.59, 7.40, 0.01, 39.5, 73.0},
    };
    return rows;
}

ScenarioRegistry::ScenarioRegistry() : scenarios_(builtin_scenarios()) {}

bool ScenarioRegistry::contains(std::string_view name) const
{
    return std::any_of(scenarios_.begin(), scenarios_.end(), [&](const auto &s) { return s.name == name; });
}

MmWaveScenario ScenarioRegistry::get(std::string_view name, double f_ghz) const
{
    auto it = std::find_if(scenarios_.begin(), scenarios_.end(), [&](const auto &s) { return s.name == name; });
    if (it == scenarios_.end())
        throw std::out_of_range("unknown mm-wave scenario '" + std::string(name) + "'");
    MmWaveScenario out = *it;
    out.f_ghz = f_ghz;
    return out;
}

void ScenarioRegistry::upsert(const MmWaveScenario &scenario)
{
    scenario.validate();
    auto it = std::find_if(scenarios_.begin(), scenarios_.end(), [&](const auto &s) { return s.name == scenario.name; });
    if (it == scenarios_.end())
        scenarios_.push_back(scenario);
    else
        *it = scenario;
}

std::string ScenarioRegistry::los_counterpart(std::string_view name)
{
    constexpr std::string_view suffix = "-nlos";
    if (name.size() > suffix.size() && name.substr(name.size() - suffix.size()) == suffix)
        return std::string(name.substr(0, name.size() - suffix.size())) + "-los";
    return std::string(name);
}

double LosModel::probability(double d_m) const
{
    switch (mode)
    {
    case LosMode::always:
        return 1.0;
    case LosMode::never:
        return 0.0;
    case LosMode::bernoulli:
        break;
    }
    const double decay = std::exp(-d_m / d2_m);
    return std::min(1.0, d1_m / d_m) * (1.0 - decay) + decay;
}

bool draw_los(double d_m, const LosModel &model, RngStream &rng)
{
    if (!(d_m > 0.0))
        throw std::invalid_argument("draw_los: distance must be positive");
    switch (model.mode)
    {
    case LosMode::always:
        return true;
    case LosMode::never:
        return false;
    case LosMode::bernoulli:
        break;
    }
    std::bernoulli_distribution coin(model.probability(d_m));
    return coin(rng);
}

} // namespace mimo_bands
