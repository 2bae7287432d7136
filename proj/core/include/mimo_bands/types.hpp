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

#ifndef MIMO_BANDS_TYPES_HPP
#define MIMO_BANDS_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace mimo_bands
{

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Thrown when a requested multiplexing order exceeds the numerical rank of a channel
// or when a set of beamformers does not span enough independent directions.
class RankDeficiencyError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace mimo_bands

#endif
