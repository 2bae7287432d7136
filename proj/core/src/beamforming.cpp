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

#include "mimo_bands/beamforming.hpp"
#include "mimo_bands/metrics.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mimo_bands
{

const char *to_string(BeamformingMethod method)
{
    return method == BeamformingMethod::cm_fd ? "cm_fd" : "an_steering";
}

BeamformingMethod beamforming_method_from_string(std::string_view name)
{
    if (name == "cm_fd")
        return BeamformingMethod::cm_fd;
    if (name == "an_steering")
        return BeamformingMethod::an_steering;
    throw std::invalid_argument("unknown beamforming method '" + std::string(name) + "'");
}

Beamformers cm_fd_beamformers(const CMatrix &h, std::size_t m)
{
    const auto max_m = static_cast<std::size_t>(std::min(h.rows(), h.cols()));
    if (m == 0 || m > max_m)
        throw std::invalid_argument("cm_fd_beamformers: multiplexing order " + std::to_string(m) +
                                    " outside [1, " + std::to_string(max_m) + "]");

    Eigen::BDCSVD<CMatrix> svd(h, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto &sv = svd.singularValues();
    std::size_t rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv[k] > default_rank_tolerance * sv[0])
            ++rank;
    if (!(sv[0] > 0.0))
        rank = 0;
    if (m > rank)
        throw RankDeficiencyError("cm_fd_beamformers: multiplexing order " + std::to_string(m) +
                                  " exceeds numerical rank " + std::to_string(rank));

    const auto cols = static_cast<Eigen::Index>(m);
    Beamformers bf;
    bf.method = BeamformingMethod::cm_fd;
    bf.m = m;
    bf.precoder = svd.matrixV().leftCols(cols);
    bf.combiner = svd.matrixU().leftCols(cols);
    return bf;
}

Beamformers an_beamformers(std::span<const FlatPath> paths, std::size_t m, std::size_t n_t, std::size_t n_r)
{
    if (m == 0)
        throw std::invalid_argument("an_beamformers: multiplexing order must be at least 1");
    if (m > paths.size())
        throw std::invalid_argument("an_beamformers: multiplexing order " + std::to_string(m) + " exceeds the " +
                                    std::to_string(paths.size()) + " available paths");

    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            if (paths[a].aoa == paths[b].aoa || paths[a].aod == paths[b].aod)
                throw RankDeficiencyError("an_beamformers: selected paths share a steering angle");

    Beamformers bf;
    bf.method = BeamformingMethod::an_steering;
    bf.m = m;
    bf.precoder.resize(static_cast<Eigen::Index>(n_t), static_cast<Eigen::Index>(m));
    bf.combiner.resize(static_cast<Eigen::Index>(n_r), static_cast<Eigen::Index>(m));
    for (std::size_t k = 0; k < m; ++k)
    {
        const auto col = static_cast<Eigen::Index>(k);
        bf.precoder.col(col) = ula_response(paths[k].aod, n_t).elements;
        bf.combiner.col(col) = ula_response(paths[k].aoa, n_r).elements;
    }
    return bf;
}

namespace
{

Eigen::LLT<CMatrix> gram_cholesky(const CMatrix &b, const char *what)
{
    Eigen::LLT<CMatrix> chol(b.adjoint() * b);
    if (chol.info() != Eigen::Success)
        throw RankDeficiencyError(std::string("spectral_efficiency: ") + what + " Gram matrix is singular");
    const Eigen::VectorXd diag = chol.matrixLLT().diagonal().real();
    if (!(diag.minCoeff() > 1e-7 * diag.maxCoeff()))
        throw RankDeficiencyError(std::string("spectral_efficiency: ") + what + " Gram matrix is singular");
    return chol;
}

} // namespace

double spectral_efficiency(const CMatrix &h, const Beamformers &bf, double snr_linear)
{
    if (!(snr_linear > 0.0))
        throw std::invalid_argument("spectral_efficiency: SNR must be positive");
    const Eigen::Index m = bf.precoder.cols();
    if (m == 0 || bf.combiner.cols() != m || bf.precoder.rows() != h.cols() || bf.combiner.rows() != h.rows())
        throw std::invalid_argument("spectral_efficiency: beamformer dimensions do not match the channel");

    // Orthonormal bases of span(W) and span(F): Q_W = W L_W^{-H}, Q_F = F L_F^{-H}.
    const Eigen::LLT<CMatrix> w_chol = gram_cholesky(bf.combiner, "combiner");
    const Eigen::LLT<CMatrix> f_chol = gram_cholesky(bf.precoder, "precoder");

    // det(I + c Q_W^H H Q_F Q_F^H H^H Q_W); for orthonormal F and W this is W^H H F directly.
    CMatrix whitened = w_chol.matrixL().solve(bf.combiner.adjoint() * h * bf.precoder);
    whitened = f_chol.matrixL().solve(whitened.adjoint()).adjoint();
    const double c = snr_linear / static_cast<double>(m);
    CMatrix a = CMatrix::Identity(m, m);
    a.noalias() += c * whitened * whitened.adjoint();

    Eigen::LLT<CMatrix> det_chol(a);
    const Eigen::VectorXd l = det_chol.matrixLLT().diagonal().real();
    double log_det = 0.0;
    for (Eigen::Index k = 0; k < m; ++k)
        log_det += 2.0 * std::log(l[k]);
    return log_det / std::log(2.0);
}

} // namespace mimo_bands
