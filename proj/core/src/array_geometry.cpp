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

#include "mimo_bands/array_geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace mimo_bands
{

SteeringVector ula_response(Angle angle, std::size_t n_antennas)
{
    if (n_antennas == 0)
        throw std::invalid_argument("ula_response: antenna count must be at least 1");

    const auto n = static_cast<Eigen::Index>(n_antennas);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n_antennas));
    const double phase_step = -std::numbers::pi * std::sin(angle.radians);

    SteeringVector sv{CVector(n), angle};
    for (Eigen::Index k = 0; k < n; ++k)
        sv.elements[k] = std::polar(scale, phase_step * static_cast<double>(k));
    return sv;
}

double coherence(Angle a1, Angle a2, std::size_t n_antennas)
{
    if (n_antennas == 0)
        throw std::invalid_argument("coherence: antenna count must be at least 1");

    const double u = std::sin(a1.radians) - std::sin(a2.radians);
    if (u == 0.0)
        return 1.0;

    // conj(a1_k) * a2_k = exp(j*pi*k*u) / N
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < n_antennas; ++k)
    {
        const double phase = std::numbers::pi * u * static_cast<double>(k);
        re += std::cos(phase);
        im += std::sin(phase);
    }
    return std::hypot(re, im) / static_cast<double>(n_antennas);
}

} // namespace mimo_bands
