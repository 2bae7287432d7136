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

#ifndef MIMO_BANDS_ARRAY_GEOMETRY_HPP
#define MIMO_BANDS_ARRAY_GEOMETRY_HPP

#include "mimo_bands/types.hpp"

#include <cstddef>
#include <numbers>

namespace mimo_bands
{

// Azimuth angle in radians. Generators keep it within [-pi/2, pi/2]; the array
// response itself is defined for any finite value.
struct Angle
{
    double radians = 0.0;

    constexpr Angle() = default;
    constexpr explicit Angle(double rad) : radians(rad) {}

    static constexpr Angle from_degrees(double deg) { return Angle(deg * std::numbers::pi / 180.0); }
    constexpr double degrees() const { return radians * 180.0 / std::numbers::pi; }

    friend constexpr bool operator==(Angle, Angle) = default;
};

// Unit-norm response of a half-wavelength uniform linear array.
struct SteeringVector
{
    CVector elements;
    Angle angle;

    std::size_t size() const { return static_cast<std::size_t>(elements.size()); }
};

// Element k equals exp(-j*pi*k*sin(angle)) / sqrt(N), k = 0 ... N-1.
// Throws std::invalid_argument for n_antennas == 0.
SteeringVector ula_response(Angle angle, std::size_t n_antennas);

// |a(a1)^H a(a2)| for two N-element ULA responses. Evaluated as a function of
// u = sin(a1) - sin(a2) only, so coherence(a1, a2, N) == coherence(a2, a1, N) bit for bit.
double coherence(Angle a1, Angle a2, std::size_t n_antennas);

} // namespace mimo_bands

#endif
