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

#include "mimo_bands/csv.hpp"
#include "mimo_bands/config.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace mimo_bands
{

namespace
{

std::string fmt_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string format_csv(const std::vector<CurvePoint> &points, const std::vector<std::string> &comments)
{
    std::string out;
    for (const auto &c : comments)
        out += "# " + c + "\n";
    out += csv_header;
    out += '\n';
    for (const auto &p : points)
    {
        out += p.study + ',' + std::to_string(p.n_r) + ',' + std::to_string(p.n_t) + ',' + std::to_string(p.m) + ',' +
               p.method + ',' + fmt_double(p.snr_db) + ',' + fmt_double(p.se_mean) + ',' + fmt_double(p.se_std_err) +
               ',' + std::to_string(p.n_trials) + '\n';
    }
    return out;
}

void write_csv(const std::vector<CurvePoint> &points, const std::filesystem::path &path,
               const std::vector<std::string> &comments)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    const std::string text = format_csv(points, comments);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out)
        throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::vector<CurvePoint> parse_csv(std::string_view text)
{
    std::vector<CurvePoint> points;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (!text.empty())
    {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty() || line.front() == '#')
            continue;
        if (!header_seen)
        {
            if (line != csv_header)
                throw std::runtime_error("csv line " + std::to_string(line_no) + ": unexpected header");
            header_seen = true;
            continue;
        }
        const auto f = split_list(line, ',');
        if (f.size() != 9)
            throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected 9 fields");
        const std::string where = "csv line " + std::to_string(line_no);
        points.push_back({f[0], parse_size(where, f[1]), parse_size(where, f[2]), parse_size(where, f[3]), f[4],
                          parse_double(where, f[5]), parse_double(where, f[6]), parse_double(where, f[7]),
                          parse_size(where, f[8])});
    }
    if (!header_seen)
        throw std::runtime_error("csv: missing header");
    return points;
}

} // namespace mimo_bands
