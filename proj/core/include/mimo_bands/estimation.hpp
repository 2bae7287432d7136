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

#ifndef MIMO_BANDS_ESTIMATION_HPP
#define MIMO_BANDS_ESTIMATION_HPP

#include "mimo_bands/beamforming.hpp"
#include "mimo_bands/rng.hpp"
#include "mimo_bands/types.hpp"

#include <cstddef>
#include <functional>
#include <optional>

namespace mimo_bands
{

// N_T x tau_p training block with orthogonal rows: X X^H = tau_p * pilot_power * I.
struct PilotBlock
{
    CMatrix pilots;
    std::size_t tau_p = 0;
    double pilot_power = 1.0;

    std::size_t n_t() const { return static_cast<std::size_t>(pilots.rows()); }
};

struct EstimationResult
{
    CMatrix h_hat;
    std::optional<double> mse;  // per-entry mean squared error, when the truth is known
};

// First n_t rows of the tau_p-point DFT matrix, scaled to the requested power per symbol.
// Throws std::invalid_argument when tau_p < n_t or the power is not positive.
PilotBlock make_orthogonal_pilots(std::size_t n_t, std::size_t tau_p, double pilot_power);

// Y = H X + N with N i.i.d. CN(0, noise_var).
CMatrix observe_training(const CMatrix &h_true, const PilotBlock &pilots, double noise_var, RngStream &rng);

// Entry-wise LMMSE estimate for an i.i.d. CN(0, beta) prior:
//   H_hat = beta tau_p P / (beta tau_p P + noise_var) * Y X^H / (tau_p P)
// Rejects pilot blocks whose rows are not orthogonal with equal energy.
EstimationResult lmmse_estimate(const CMatrix &y, const PilotBlock &pilots, double beta, double noise_var);

// Same, and records the per-entry MSE against the true channel.
EstimationResult lmmse_estimate(const CMatrix &y, const PilotBlock &pilots, double beta, double noise_var,
                                const CMatrix &h_true);

// beta noise_var / (beta tau_p P + noise_var)
double lmmse_mse_analytic(double beta, std::size_t tau_p, double pilot_power, double noise_var);

// Plug-in point for estimators other than LMMSE (e.g. parametric mm-wave estimators).
using ChannelEstimator = std::function<CMatrix(const CMatrix &y, const PilotBlock &pilots)>;

// Beamformers designed on h_hat, spectral efficiency measured on h_true. Only cm_fd can be
// designed from a bare matrix estimate; an_steering needs path estimates and is rejected.
double se_with_estimated_csi(const CMatrix &h_true, const CMatrix &h_hat, BeamformingMethod method, std::size_t m,
                             double snr_linear);

} // namespace mimo_bands

#endif
