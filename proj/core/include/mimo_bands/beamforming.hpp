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

#ifndef MIMO_BANDS_BEAMFORMING_HPP
#define MIMO_BANDS_BEAMFORMING_HPP

#include "mimo_bands/channel_models.hpp"
#include "mimo_bands/types.hpp"

#include <cstddef>
#include <span>
#include <string_view>

namespace mimo_bands
{

enum class BeamformingMethod
{
    cm_fd,        // channel-matched, fully digital (top singular vectors)
    an_steering   // analog beam steering towards the strongest paths
};

const char *to_string(BeamformingMethod method);
BeamformingMethod beamforming_method_from_string(std::string_view name);

// Precoder F (N_T x M) and combiner W (N_R x M). Every column has unit norm; for cm_fd
// the columns are also mutually orthonormal.
struct Beamformers
{
    CMatrix precoder;
    CMatrix combiner;
    BeamformingMethod method = BeamformingMethod::cm_fd;
    std::size_t m = 0;
};

// F = top-m right singular vectors, W = top-m left singular vectors, in descending
// singular-value order. Throws RankDeficiencyError if m exceeds the numerical rank,
// std::invalid_argument if m is 0 or exceeds min(N_R, N_T).
Beamformers cm_fd_beamformers(const CMatrix &h, std::size_t m);

// Column k of F / W is the ULA response at the departure / arrival angle of the k-th path.
// Paths must already be ordered strongest first (as flatten_paths returns them).
// Throws std::invalid_argument when m exceeds the path count and RankDeficiencyError when the
// selected paths repeat an angle (the combiner Gram matrix would be singular).
Beamformers an_beamformers(std::span<const FlatPath> paths, std::size_t m, std::size_t n_t, std::size_t n_r);

// log2 det(I_M + (snr/M) (W^H W)^{-1} W^H H F (F^H F)^{-1} F^H H^H W)
// Equal power over the M orthogonalized transmit streams, noise at the combiner output
// whitened through (W^H W)^{-1}. Both Gram factors are identities for cm_fd, and for unit-norm
// single-stream beamformers the expression reduces to log2(1 + snr |w^H H f|^2).
// h is expected in received-SNR units (see ChannelMatrix::normalized).
// Throws RankDeficiencyError when F or W has (numerically) dependent columns.
double spectral_efficiency(const CMatrix &h, const Beamformers &bf, double snr_linear);

} // namespace mimo_bands

#endif
