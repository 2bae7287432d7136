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

#include "mimo_bands/estimation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mimo_bands
{

PilotBlock make_orthogonal_pilots(std::size_t n_t, std::size_t tau_p, double pilot_power)
{
    if (n_t == 0)
        throw std::invalid_argument("make_orthogonal_pilots: n_t must be at least 1");
    if (tau_p < n_t)
        throw std::invalid_argument("make_orthogonal_pilots: tau_p (" + std::to_string(tau_p) +
                                    ") must be at least n_t (" + std::to_string(n_t) + ")");
    if (!(pilot_power > 0.0))
        throw std::invalid_argument("make_orthogonal_pilots: pilot power must be positive");

    PilotBlock block;
    block.tau_p = tau_p;
    block.pilot_power = pilot_power;
    block.pilots.resize(static_cast<Eigen::Index>(n_t), static_cast<Eigen::Index>(tau_p));
    const double amp = std::sqrt(pilot_power);
    for (std::size_t k = 0; k < n_t; ++k)
        for (std::size_t s = 0; s < tau_p; ++s)
        {
            // Reduce k*s modulo tau_p first so the phase stays accurate for long blocks.
            const auto idx = static_cast<double>((k * s) % tau_p);
            block.pilots(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(s)) =
                std::polar(amp, -2.0 * std::numbers::pi * idx / static_cast<double>(tau_p));
        }
    return block;
}

CMatrix observe_training(const CMatrix &h_true, const PilotBlock &pilots, double noise_var, RngStream &rng)
{
    if (h_true.cols() != pilots.pilots.rows())
        throw std::invalid_argument("observe_training: channel has " + std::to_string(h_true.cols()) +
                                    " transmit antennas but the pilot block has " +
                                    std::to_string(pilots.pilots.rows()) + " rows");
    if (!(noise_var >= 0.0))
        throw std::invalid_argument("observe_training: noise variance must be non-negative");

    CMatrix y = h_true * pilots.pilots;
    if (noise_var > 0.0)
        for (Eigen::Index j = 0; j < y.cols(); ++j)
            for (Eigen::Index i = 0; i < y.rows(); ++i)
                y(i, j) += complex_normal(rng, noise_var);
    return y;
}

double lmmse_mse_analytic(double beta, std::size_t tau_p, double pilot_power, double noise_var)
{
    const double energy = static_cast<double>(tau_p) * pilot_power;
    return beta * noise_var / (beta * energy + noise_var);
}

EstimationResult lmmse_estimate(const CMatrix &y, const PilotBlock &pilots, double beta, double noise_var)
{
    if (!(beta > 0.0))
        throw std::invalid_argument("lmmse_estimate: prior variance beta must be positive");
    if (!(noise_var >= 0.0))
        throw std::invalid_argument("lmmse_estimate: noise variance must be non-negative");
    const CMatrix &x = pilots.pilots;
    if (y.cols() != x.cols())
        throw std::invalid_argument("lmmse_estimate: observation length does not match the pilot block");

    const double energy = static_cast<double>(x.cols()) * pilots.pilot_power;
    const CMatrix gram = x * x.adjoint();
    const CMatrix target = energy * CMatrix::Identity(x.rows(), x.rows());
    if (!((gram - target).cwiseAbs().maxCoeff() <= 1e-9 * energy))
        throw std::invalid_argument("lmmse_estimate: pilot rows are not orthogonal with energy tau_p * pilot_power");

    const double shrink = beta * energy / (beta * energy + noise_var);
    return {(shrink / energy) * (y * x.adjoint()), std::nullopt};
}

EstimationResult lmmse_estimate(const CMatrix &y, const PilotBlock &pilots, double beta, double noise_var,
                                const CMatrix &h_true)
{
    EstimationResult r = lmmse_estimate(y, pilots, beta, noise_var);
    if (r.h_hat.rows() != h_true.rows() || r.h_hat.cols() != h_true.cols())
        throw std::invalid_argument("lmmse_estimate: true channel dimensions do not match the estimate");
    r.mse = (r.h_hat - h_true).squaredNorm() / static_cast<double>(h_true.size());
    return r;
}

double se_with_estimated_csi(const CMatrix &h_true, const CMatrix &h_hat, BeamformingMethod method, std::size_t m,
                             double snr_linear)
{
    if (h_true.rows() != h_hat.rows() || h_true.cols() != h_hat.cols())
        throw std::invalid_argument("se_with_estimated_csi: estimate and true channel differ in size");
    if (method != BeamformingMethod::cm_fd)
        throw std::invalid_argument("se_with_estimated_csi: an_steering requires path estimates, not a matrix");
    return spectral_efficiency(h_true, cm_fd_beamformers(h_hat, m), snr_linear);
}

} // namespace mimo_bands
