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

#ifndef MIMO_BANDS_CSV_HPP
#define MIMO_BANDS_CSV_HPP

#include "mimo_bands/experiments.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace mimo_bands
{

inline constexpr std::string_view csv_header = "study,n_r,n_t,m,method,snr_db,se_mean,se_std_err,n_trials";

// Optional comment lines are written first, each prefixed with "# ".
std::string format_csv(const std::vector<CurvePoint> &points, const std::vector<std::string> &comments = {});

// Writes format_csv() output; throws std::runtime_error mentioning the path on I/O failure.
void write_csv(const std::vector<CurvePoint> &points, const std::filesystem::path &path,
               const std::vector<std::string> &comments = {});

// Inverse of format_csv. Lines starting with '#' are skipped.
std::vector<CurvePoint> parse_csv(std::string_view text);

} // namespace mimo_bands

#endif
