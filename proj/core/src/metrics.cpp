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

#include "mimo_bands/metrics.hpp"

#include <Eigen/SVD>

#include <stdexcept>

namespace mimo_bands
{

double frob_power(const CMatrix &h) { return h.squaredNorm(); }

double eta_metric(const CMatrix &h)
{
    if (h.size() == 0)
        throw std::invalid_argument("eta_metric: empty matrix");
    const double total = h.squaredNorm();
    if (!(total > 0.0))
        throw std::invalid_argument("eta_metric: all-zero channel matrix");
    const double peak = h.cwiseAbs2().maxCoeff();
    return peak / (total / static_cast<double>(h.size()));
}

std::size_t numerical_rank(const CMatrix &h, double rel_tol)
{
    if (h.size() == 0)
        return 0;
    Eigen::BDCSVD<CMatrix> svd(h);
    const auto &sv = svd.singularValues();
    if (sv.size() == 0 || !(sv[0] > 0.0))
        return 0;
    const double threshold = rel_tol * sv[0];
    std::size_t rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv[k] > threshold)
            ++rank;
    return rank;
}

AntennaSelection select_best_antenna(const CMatrix &h)
{
    if (h.size() == 0)
        throw std::invalid_argument("select_best_antenna: empty matrix");
    AntennaSelection best{0, 0, -1.0};
    // Row-major scan with strict comparison keeps the lexicographically smallest maximizer.
    for (Eigen::Index i = 0; i < h.rows(); ++i)
        for (Eigen::Index j = 0; j < h.cols(); ++j)
        {
            const double g = std::norm(h(i, j));
            if (g > best.gain)
                best = {static_cast<std::size_t>(i), static_cast<std::size_t>(j), g};
        }
    if (!(best.gain > 0.0))
        throw std::invalid_argument("select_best_antenna: all-zero channel matrix");
    return best;
}

ChannelDiagnostics diagnose(const CMatrix &h, double rel_tol)
{
    ChannelDiagnostics d;
    d.eta = eta_metric(h);
    d.numerical_rank = numerical_rank(h, rel_tol);
    d.frob_power = frob_power(h);
    d.best_antenna = select_best_antenna(h);
    return d;
}

} // namespace mimo_bands
