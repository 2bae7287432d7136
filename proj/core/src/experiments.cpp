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

#include "mimo_bands/experiments.hpp"
#include "mimo_bands/beamforming.hpp"
#include "mimo_bands/estimation.hpp"
#include "mimo_bands/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace mimo_bands
{

namespace
{

// One output curve sample: which m / method / SNR a per-trial value belongs to.
struct Series
{
    std::size_t m = 0;
    std::string method;
    double snr_db = 0.0;
};

void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)> &body)
{
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, n);

    std::vector<std::exception_ptr> errors(n);
    auto guarded = [&](std::size_t i) {
        try
        {
            body(i);
        }
        catch (...)
        {
            errors[i] = std::current_exception();
        }
    };

    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            guarded(i);
    }
    else
    {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++)
                    guarded(i);
            });
        for (auto &t : pool)
            t.join();
    }

    // Lowest failing index wins, whatever the schedule was.
    for (const auto &e : errors)
        if (e)
            std::rethrow_exception(e);
}

std::vector<Series> make_series(const ExperimentConfig &cfg)
{
    std::vector<Series> series;
    switch (cfg.study)
    {
    case Study::fig2_cm_vs_an:
        for (auto m : cfg.m_values)
            for (const char *method : {"cm_fd", "an_steering"})
                for (auto snr : cfg.snr_grid_db)
                    series.push_back({m, method, snr});
        break;
    case Study::fig3_multiplexing:
        for (const char *method : {"mu_wave_cm_fd", "mm_wave_cm_fd"})
            for (auto m : cfg.m_values)
                for (auto snr : cfg.snr_grid_db)
                    series.push_back({m, method, snr});
        break;
    case Study::fig4_muwave_csi:
        for (auto m : cfg.m_values)
            for (const char *method : {"perfect_csi", "lmmse_csi"})
                for (auto snr : cfg.snr_grid_db)
                    series.push_back({m, method, snr});
        break;
    case Study::fig6_eta:
        series.push_back({0, "mu_wave", 0.0});
        series.push_back({0, "mm_wave", 0.0});
        break;
    }
    return series;
}

CMatrix draw_mu_wave(const ExperimentConfig &cfg, AntennaPair ap, RngStream &rng)
{
    const double beta = mu_wave_beta(cfg.mu_distance_m, cfg.mu, rng);
    return gen_mu_wave(ap.n_r, ap.n_t, beta, rng).normalized();
}

// Values in make_series() order.
std::vector<double> evaluate_trial(const ExperimentConfig &cfg, AntennaPair ap, std::size_t grid, std::size_t trial)
{
    const auto sid = study_id(cfg.study);
    std::vector<double> out;

    switch (cfg.study)
    {
    case Study::fig2_cm_vs_an: {
        auto rng = substream(cfg.master_seed, sid, grid, trial);
        const auto draw = gen_mm_wave(ap.n_r, ap.n_t, cfg.mm, rng);
        const CMatrix h = draw.matrix.normalized();
        const auto paths = flatten_paths(draw);
        for (auto m : cfg.m_values)
        {
            const Beamformers cm = cm_fd_beamformers(h, m);
            const Beamformers an = an_beamformers(paths, m, ap.n_t, ap.n_r);
            for (const Beamformers *bf : {&cm, &an})
                for (auto snr : cfg.snr_grid_db)
                    out.push_back(spectral_efficiency(h, *bf, db_to_linear(snr)));
        }
        break;
    }
    case Study::fig3_multiplexing: {
        auto rng_mu = substream(cfg.master_seed, sid, 2 * grid, trial);
        auto rng_mm = substream(cfg.master_seed, sid, 2 * grid + 1, trial);
        const CMatrix h_mu = draw_mu_wave(cfg, ap, rng_mu);
        const CMatrix h_mm = gen_mm_wave(ap.n_r, ap.n_t, cfg.mm, rng_mm).matrix.normalized();
        for (const CMatrix *h : {&h_mu, &h_mm})
            for (auto m : cfg.m_values)
            {
                const Beamformers cm = cm_fd_beamformers(*h, m);
                for (auto snr : cfg.snr_grid_db)
                    out.push_back(spectral_efficiency(*h, cm, db_to_linear(snr)));
            }
        break;
    }
    case Study::fig4_muwave_csi: {
        auto rng = substream(cfg.master_seed, sid, grid, trial);
        const CMatrix h = draw_mu_wave(cfg, ap, rng);
        const std::size_t tau_p = cfg.estimation.tau_p == 0 ? ap.n_t : cfg.estimation.tau_p;
        const PilotBlock pilots = make_orthogonal_pilots(ap.n_t, tau_p, cfg.estimation.pilot_power);

        // One training observation per SNR point, shared by every m.
        std::vector<CMatrix> estimates;
        for (auto snr : cfg.snr_grid_db)
        {
            const double noise_var = cfg.estimation.training_snr_db
                                         ? cfg.estimation.pilot_power / db_to_linear(*cfg.estimation.training_snr_db)
                                         : 1.0 / db_to_linear(snr);
            const CMatrix y = observe_training(h, pilots, noise_var, rng);
            estimates.push_back(lmmse_estimate(y, pilots, 1.0, noise_var).h_hat);
        }
        for (auto m : cfg.m_values)
        {
            const Beamformers cm = cm_fd_beamformers(h, m);
            for (auto snr : cfg.snr_grid_db)
                out.push_back(spectral_efficiency(h, cm, db_to_linear(snr)));
            for (std::size_t k = 0; k < cfg.snr_grid_db.size(); ++k)
                out.push_back(
                    se_with_estimated_csi(h, estimates[k], BeamformingMethod::cm_fd, m, db_to_linear(cfg.snr_grid_db[k])));
        }
        break;
    }
    case Study::fig6_eta: {
        auto rng_mu = substream(cfg.master_seed, sid, 2 * grid, trial);
        auto rng_mm = substream(cfg.master_seed, sid, 2 * grid + 1, trial);
        out.push_back(eta_metric(draw_mu_wave(cfg, ap, rng_mu)));
        out.push_back(eta_metric(gen_mm_wave(ap.n_r, ap.n_t, cfg.mm, rng_mm).matrix.entries));
        break;
    }
    }
    return out;
}

ConfigError field_error(const std::string &prefix, const std::invalid_argument &e)
{
    const std::string msg = e.what();
    const auto colon = msg.find(':');
    if (colon == std::string::npos)
        return ConfigError(prefix, msg);
    return ConfigError(prefix + msg.substr(0, colon), msg.substr(colon + 2 <= msg.size() ? colon + 2 : colon));
}

LosMode los_mode_from(const std::string &field, const std::string &v)
{
    if (v == "always")
        return LosMode::always;
    if (v == "never")
        return LosMode::never;
    if (v == "bernoulli")
        return LosMode::bernoulli;
    throw ConfigError(field, "expected always, never or bernoulli, got '" + v + "'");
}

} // namespace

const char *to_string(Study study)
{
    switch (study)
    {
    case Study::fig2_cm_vs_an:
        return "fig2_cm_vs_an";
    case Study::fig3_multiplexing:
        return "fig3_multiplexing";
    case Study::fig4_muwave_csi:
        return "fig4_muwave_csi";
    case Study::fig6_eta:
        return "fig6_eta";
    }
    return "?";
}

Study study_from_string(std::string_view name)
{
    for (Study s : {Study::fig2_cm_vs_an, Study::fig3_multiplexing, Study::fig4_muwave_csi, Study::fig6_eta})
        if (name == to_string(s))
            return s;
    throw ConfigError("study", "unknown study '" + std::string(name) + "'");
}

std::uint64_t study_id(Study study)
{
    switch (study)
    {
    case Study::fig2_cm_vs_an:
        return 2;
    case Study::fig3_multiplexing:
        return 3;
    case Study::fig4_muwave_csi:
        return 4;
    case Study::fig6_eta:
        return 6;
    }
    return 0;
}

void ExperimentConfig::validate() const
{
    if (antennas.empty())
        throw ConfigError("antennas", "at least one N_R x N_T pair is required");
    for (const auto &ap : antennas)
        if (ap.n_r == 0 || ap.n_t == 0)
            throw ConfigError("antennas", "antenna counts must be at least 1");
    if (n_trials < 1)
        throw ConfigError("n_trials", "must be at least 1");

    if (study != Study::fig6_eta)
    {
        if (m_values.empty())
            throw ConfigError("m_values", "at least one multiplexing order is required");
        if (snr_grid_db.empty())
            throw ConfigError("snr_db", "at least one SNR point is required");
        for (auto m : m_values)
            for (const auto &ap : antennas)
                if (m < 1 || m > std::min(ap.n_r, ap.n_t))
                    throw ConfigError("m_values", "multiplexing order " + std::to_string(m) + " does not fit a " +
                                                      std::to_string(ap.n_r) + "x" + std::to_string(ap.n_t) + " link");
    }

    try
    {
        mu.validate();
    }
    catch (const std::invalid_argument &e)
    {
        throw field_error("mu.", e);
    }
    if (!(mu_distance_m > 0.0))
        throw ConfigError("mu.distance_m", "must be positive");
    try
    {
        mm.validate();
    }
    catch (const std::invalid_argument &e)
    {
        throw field_error("mm.", e);
    }

    if (estimation.tau_p != 0)
        for (const auto &ap : antennas)
            if (estimation.tau_p < ap.n_t)
                throw ConfigError("est.tau_p", "must be at least N_T = " + std::to_string(ap.n_t));
    if (!(estimation.pilot_power > 0.0))
        throw ConfigError("est.pilot_power", "must be positive");
}

ExperimentConfig experiment_config_from(const KeyValueConfig &kv)
{
    ExperimentConfig cfg;
    ScenarioRegistry registry;

    // Scenario rows first, so mm.scenario can refer to an overridden or new row.
    std::map<std::string, MmWaveScenario> edited;
    for (const auto &[key, value] : kv.entries())
    {
        if (key.rfind("scenario.", 0) != 0)
            continue;
        const auto dot = key.rfind('.');
        if (dot <= 9)
            throw ConfigError(key, "expected scenario.<name>.<field>");
        const std::string name = key.substr(9, dot - 9);
        const std::string field = key.substr(dot + 1);
        auto it = edited.find(name);
        if (it == edited.end())
        {
            MmWaveScenario fresh;
            fresh.name = name;
            it = edited.emplace(name, registry.contains(name) ? registry.get(name, 73.0) : fresh).first;
        }
        MmWaveScenario &row = it->second;
        if (field == "n")
            row.n = parse_double(key, value);
        else if (field == "sigma_db")
            row.sigma_db = parse_double(key, value);
        else if (field == "b")
            row.b = parse_double(key, value);
        else if (field == "f0_ghz")
            row.f0_ghz = parse_double(key, value);
        else
            throw ConfigError(key, "unknown scenario field '" + field + "'");
    }
    for (const auto &[name, row] : edited)
    {
        try
        {
            registry.upsert(row);
        }
        catch (const std::invalid_argument &e)
        {
            throw ConfigError("scenario." + name, e.what());
        }
    }

    std::string scenario_name = cfg.mm.scenario.name;
    std::optional<std::string> los_scenario_name;
    double f_ghz = cfg.mm.scenario.f_ghz;
    double spread_deg = cfg.mm.ray_angle_spread_rad * 180.0 / std::numbers::pi;

    for (const auto &[key, value] : kv.entries())
    {
        if (key.rfind("scenario.", 0) == 0)
            continue;
        if (key == "study")
            cfg.study = study_from_string(value);
        else if (key == "antennas")
        {
            cfg.antennas.clear();
            for (const auto &item : split_list(value))
            {
                const auto x = item.find('x');
                if (x == std::string::npos)
                    throw ConfigError(key, "expected NRxNT pairs, got '" + item + "'");
                cfg.antennas.push_back({parse_size(key, item.substr(0, x)), parse_size(key, item.substr(x + 1))});
            }
        }
        else if (key == "m_values")
        {
            cfg.m_values.clear();
            for (const auto &item : split_list(value))
                cfg.m_values.push_back(parse_size(key, item));
        }
        else if (key == "snr_db")
        {
            cfg.snr_grid_db.clear();
            for (const auto &item : split_list(value))
                cfg.snr_grid_db.push_back(parse_double(key, item));
        }
        else if (key == "n_trials")
            cfg.n_trials = parse_size(key, value);
        else if (key == "master_seed")
            cfg.master_seed = parse_u64(key, value);
        else if (key == "mu.f_mhz")
            cfg.mu.f_mhz = parse_double(key, value);
        else if (key == "mu.h_t_m")
            cfg.mu.h_t_m = parse_double(key, value);
        else if (key == "mu.h_r_m")
            cfg.mu.h_r_m = parse_double(key, value);
        else if (key == "mu.d0_m")
            cfg.mu.d0_m = parse_double(key, value);
        else if (key == "mu.d1_m")
            cfg.mu.d1_m = parse_double(key, value);
        else if (key == "mu.sigma_sh_db")
            cfg.mu.sigma_sh_db = parse_double(key, value);
        else if (key == "mu.distance_m")
            cfg.mu_distance_m = parse_double(key, value);
        else if (key == "mm.scenario")
            scenario_name = value;
        else if (key == "mm.los_scenario")
            los_scenario_name = value;
        else if (key == "mm.f_ghz")
            f_ghz = parse_double(key, value);
        else if (key == "mm.n_cl")
            cfg.mm.n_cl = parse_size(key, value);
        else if (key == "mm.n_ray")
            cfg.mm.n_ray = parse_size(key, value);
        else if (key == "mm.ray_spread_deg")
            spread_deg = parse_double(key, value);
        else if (key == "mm.distance_m")
            cfg.mm.link_distance_m = parse_double(key, value);
        else if (key == "mm.los")
            cfg.mm.los_model.mode = los_mode_from(key, value);
        else if (key == "mm.los_d1_m")
            cfg.mm.los_model.d1_m = parse_double(key, value);
        else if (key == "mm.los_d2_m")
            cfg.mm.los_model.d2_m = parse_double(key, value);
        else if (key == "mm.path_length")
        {
            if (value == "link_distance")
                cfg.mm.path_length_model = PathLengthModel::link_distance;
            else if (value == "excess_uniform")
                cfg.mm.path_length_model = PathLengthModel::excess_uniform;
            else
                throw ConfigError(key, "expected link_distance or excess_uniform, got '" + value + "'");
        }
        else if (key == "mm.max_excess_factor")
            cfg.mm.max_excess_factor = parse_double(key, value);
        else if (key == "mm.shadowing")
            cfg.mm.shadowing = parse_bool(key, value);
        else if (key == "mm.attenuation")
        {
            if (value == "scenario")
                cfg.mm.attenuation = AttenuationModel::scenario;
            else if (value == "unit")
                cfg.mm.attenuation = AttenuationModel::unit;
            else
                throw ConfigError(key, "expected scenario or unit, got '" + value + "'");
        }
        else if (key == "mm.path_gain")
        {
            if (value == "rayleigh")
                cfg.mm.path_gain = PathGainModel::rayleigh;
            else if (value == "unit")
                cfg.mm.path_gain = PathGainModel::unit;
            else
                throw ConfigError(key, "expected rayleigh or unit, got '" + value + "'");
        }
        else if (key == "est.tau_p")
            cfg.estimation.tau_p = parse_size(key, value);
        else if (key == "est.pilot_power")
            cfg.estimation.pilot_power = parse_double(key, value);
        else if (key == "est.training_snr_db")
            cfg.estimation.training_snr_db = parse_double(key, value);
        else
            throw ConfigError(key, "unknown configuration key");
    }

    cfg.mm.ray_angle_spread_rad = spread_deg * std::numbers::pi / 180.0;
    const std::string los_name = los_scenario_name.value_or(ScenarioRegistry::los_counterpart(scenario_name));
    if (!registry.contains(scenario_name))
        throw ConfigError("mm.scenario", "unknown scenario '" + scenario_name + "'");
    if (!registry.contains(los_name))
        throw ConfigError("mm.los_scenario", "unknown scenario '" + los_name + "'");
    cfg.mm.scenario = registry.get(scenario_name, f_ghz);
    cfg.mm.los_scenario = registry.get(los_name, f_ghz);

    cfg.validate();
    return cfg;
}

std::vector<CurvePoint> run_study(const ExperimentConfig &cfg, std::size_t workers)
{
    cfg.validate();
    const auto series = make_series(cfg);
    std::vector<CurvePoint> points;

    for (std::size_t g = 0; g < cfg.antennas.size(); ++g)
    {
        const AntennaPair ap = cfg.antennas[g];
        std::vector<std::vector<double>> per_trial(cfg.n_trials);
        try
        {
            parallel_for(cfg.n_trials, workers, [&](std::size_t t) { per_trial[t] = evaluate_trial(cfg, ap, g, t); });
        }
        catch (const std::exception &e)
        {
            const std::string where = std::string(to_string(cfg.study)) + " grid point " + std::to_string(g) + " (" +
                                      std::to_string(ap.n_r) + "x" + std::to_string(ap.n_t) + ")";
            if (dynamic_cast<const RankDeficiencyError *>(&e))
                throw RankDeficiencyError(where + ": " + e.what());
            throw std::runtime_error(where + ": " + e.what());
        }

        const double n = static_cast<double>(cfg.n_trials);
        for (std::size_t s = 0; s < series.size(); ++s)
        {
            double sum = 0.0;
            for (const auto &r : per_trial)
                sum += r[s];
            const double mean = sum / n;
            double ss = 0.0;
            for (const auto &r : per_trial)
                ss += (r[s] - mean) * (r[s] - mean);
            const double std_err = cfg.n_trials > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
            points.push_back({to_string(cfg.study), ap.n_r, ap.n_t, series[s].m, series[s].method, series[s].snr_db,
                              mean, std_err, cfg.n_trials});
        }
    }
    return points;
}

} // namespace mimo_bands
