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

#include "mimo_bands/channel_models.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mimo_bands
{

namespace
{

constexpr double half_pi = 0.5 * std::numbers::pi;

bool in_azimuth_range(double rad) { return rad >= -half_pi && rad <= half_pi; }

// Zero-mean Laplacian with the given standard deviation.
double laplacian(RngStream &rng, double std_dev)
{
    std::exponential_distribution<double> mag(1.0);
    std::bernoulli_distribution sign(0.5);
    const double scale = std_dev / std::sqrt(2.0);
    const double x = scale * mag(rng);
    return sign(rng) ? x : -x;
}

// Ray angle around a cluster center, redrawn until it falls inside [-pi/2, pi/2].
Angle ray_angle(RngStream &rng, double center, double spread)
{
    for (;;)
    {
        const double a = center + laplacian(rng, spread);
        if (in_azimuth_range(a))
            return Angle(a);
    }
}

} // namespace

const char *to_string(Band band) { return band == Band::mu_wave ? "mu_wave" : "mm_wave"; }

CMatrix ChannelMatrix::normalized() const { return entries / std::sqrt(metadata.large_scale_gain); }

void ClusterConfig::validate() const
{
    if (n_cl < 1)
        throw std::invalid_argument("n_cl: at least one cluster is required");
    if (n_ray < 1)
        throw std::invalid_argument("n_ray: at least one ray per cluster is required");
    if (!(ray_angle_spread_rad > 0.0))
        throw std::invalid_argument("ray_angle_spread_rad: spread must be positive");
    if (!(link_distance_m > 0.0))
        throw std::invalid_argument("link_distance_m: distance must be positive");
    if (path_length_model == PathLengthModel::excess_uniform && !(max_excess_factor >= 1.0))
        throw std::invalid_argument("max_excess_factor: must be at least 1");
    if (!(los_model.d1_m > 0.0 && los_model.d2_m > 0.0))
        throw std::invalid_argument("los_model: d1_m and d2_m must be positive");
    scenario.validate();
    los_scenario.validate();
}

ChannelMatrix gen_mu_wave(std::size_t n_r, std::size_t n_t, double beta, RngStream &rng)
{
    if (n_r == 0 || n_t == 0)
        throw std::invalid_argument("gen_mu_wave: antenna counts must be at least 1");
    if (!(beta > 0.0))
        throw std::invalid_argument("gen_mu_wave: beta must be positive");

    ChannelMatrix h;
    h.band = Band::mu_wave;
    h.metadata.large_scale_gain = beta;
    h.entries.resize(static_cast<Eigen::Index>(n_r), static_cast<Eigen::Index>(n_t));
    // Column-major fill keeps the draw order independent of the matrix layout.
    for (Eigen::Index j = 0; j < h.entries.cols(); ++j)
        for (Eigen::Index i = 0; i < h.entries.rows(); ++i)
            h.entries(i, j) = complex_normal(rng, beta);
    return h;
}

double path_strength(const PathComponent &path, const MmWaveChannelDraw &draw)
{
    const double w = path.is_los ? draw.los_scale * draw.los_scale : 1.0;
    return std::norm(path.gain) * path.attenuation_linear * w;
}

MmWaveChannelDraw gen_mm_wave(std::size_t n_r, std::size_t n_t, const ClusterConfig &cfg, RngStream &rng)
{
    if (n_r == 0 || n_t == 0)
        throw std::invalid_argument("gen_mm_wave: antenna counts must be at least 1");
    cfg.validate();

    const double n_paths = static_cast<double>(cfg.n_cl * cfg.n_ray);
    const double array_gain = std::sqrt(static_cast<double>(n_t) * static_cast<double>(n_r));

    MmWaveChannelDraw draw;
    draw.gamma = array_gain / std::sqrt(n_paths);
    draw.los_scale = std::sqrt(n_paths);
    draw.paths.reserve(cfg.n_cl * cfg.n_ray + 1);

    const bool unit_att = cfg.attenuation == AttenuationModel::unit;
    auto attenuation = [&](double r, const MmWaveScenario &scen) {
        if (unit_att)
            return 1.0;
        const double z = cfg.shadowing ? standard_normal(rng) : 0.0;
        return db_to_linear(mm_wave_attenuation_db(r, scen, z));
    };

    for (std::size_t i = 0; i < cfg.n_cl; ++i)
    {
        const double center_aoa = uniform(rng, -half_pi, half_pi);
        const double center_aod = uniform(rng, -half_pi, half_pi);
        for (std::size_t l = 0; l < cfg.n_ray; ++l)
        {
            PathComponent p;
            p.aoa = ray_angle(rng, center_aoa, cfg.ray_angle_spread_rad);
            p.aod = ray_angle(rng, center_aod, cfg.ray_angle_spread_rad);
            p.gain = cfg.path_gain == PathGainModel::rayleigh ? complex_normal(rng, 1.0) : cplx{1.0, 0.0};
            double r = cfg.link_distance_m;
            if (cfg.path_length_model == PathLengthModel::excess_uniform)
                r *= uniform(rng, 1.0, cfg.max_excess_factor);
            p.attenuation_linear = attenuation(r, cfg.scenario);
            draw.paths.push_back(p);
        }
    }

    if (draw_los(cfg.link_distance_m, cfg.los_model, rng))
    {
        PathComponent p;
        p.is_los = true;
        p.gain = std::polar(1.0, uniform(rng, 0.0, 2.0 * std::numbers::pi));
        p.aoa = Angle(uniform(rng, -half_pi, half_pi));
        p.aod = Angle(uniform(rng, -half_pi, half_pi));
        p.attenuation_linear = attenuation(cfg.link_distance_m, cfg.los_scenario);
        draw.paths.push_back(p);
    }

    std::stable_sort(draw.paths.begin(), draw.paths.end(), [&](const auto &a, const auto &b) {
        return path_strength(a, draw) > path_strength(b, draw);
    });

    ChannelMatrix &h = draw.matrix;
    h.band = Band::mm_wave;
    h.metadata.los_present = std::any_of(draw.paths.begin(), draw.paths.end(), [](const auto &p) { return p.is_los; });
    // E_alpha ||H||_F^2 / (N_T N_R) given the drawn attenuations.
    double received = 0.0;
    for (const auto &p : draw.paths)
        received += p.attenuation_linear * (p.is_los ? n_paths : 1.0);
    h.metadata.large_scale_gain = received / n_paths;
    h.entries = reconstruct_channel(flatten_paths(draw), draw.gamma, n_r, n_t);
    return draw;
}

std::vector<FlatPath> flatten_paths(const MmWaveChannelDraw &draw)
{
    std::vector<FlatPath> out;
    out.reserve(draw.paths.size());
    for (const auto &p : draw.paths)
    {
        cplx alpha = p.gain * std::sqrt(p.attenuation_linear);
        if (p.is_los)
            alpha *= draw.los_scale;
        out.push_back({alpha, p.aoa, p.aod});
    }
    return out;
}

CMatrix reconstruct_channel(const std::vector<FlatPath> &paths, double gamma, std::size_t n_r, std::size_t n_t)
{
    // H = A_r diag(gamma alpha) A_t^H as one product.
    const auto count = static_cast<Eigen::Index>(paths.size());
    CMatrix a_r(static_cast<Eigen::Index>(n_r), count);
    CMatrix a_t(static_cast<Eigen::Index>(n_t), count);
    for (Eigen::Index k = 0; k < count; ++k)
    {
        const auto &p = paths[static_cast<std::size_t>(k)];
        a_r.col(k) = gamma * p.alpha * ula_response(p.aoa, n_r).elements;
        a_t.col(k) = ula_response(p.aod, n_t).elements;
    }
    CMatrix h(static_cast<Eigen::Index>(n_r), static_cast<Eigen::Index>(n_t));
    h.noalias() = a_r * a_t.adjoint();
    return h;
}

} // namespace mimo_bands
