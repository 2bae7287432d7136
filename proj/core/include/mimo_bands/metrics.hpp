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

#ifndef MIMO_BANDS_METRICS_HPP
#define MIMO_BANDS_METRICS_HPP

#include "mimo_bands/types.hpp"

#include <cstddef>

namespace mimo_bands
{

// Relative threshold separating structurally-zero singular values from rounding noise
// for arrays up to about a thousand elements.
inline constexpr double default_rank_tolerance = 1e-9;

struct AntennaSelection
{
    std::size_t row = 0;  // receive antenna
    std::size_t col = 0;  // transmit antenna
    double gain = 0.0;    // |H_ij|^2
};

struct ChannelDiagnostics
{
    double eta = 1.0;
    std::size_t numerical_rank = 0;
    double frob_power = 0.0;
    AntennaSelection best_antenna;
};

// Sum of squared magnitudes, i.e. tr(H^H H).
double frob_power(const CMatrix &h);

// Largest squared entry magnitude over the mean squared entry magnitude. Lies in [1, N_R N_T].
// Throws std::invalid_argument for an all-zero (or empty) matrix.
double eta_metric(const CMatrix &h);

// Number of singular values strictly above rel_tol times the largest one.
std::size_t numerical_rank(const CMatrix &h, double rel_tol = default_rank_tolerance);

// Entry with the largest squared magnitude; ties go to the smallest (row, col) pair.
AntennaSelection select_best_antenna(const CMatrix &h);

ChannelDiagnostics diagnose(const CMatrix &h, double rel_tol = default_rank_tolerance);

} // namespace mimo_bands

#endif
