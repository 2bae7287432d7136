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

#include "mimo_bands/config.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace mimo_bands
{

namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

} // namespace

KeyValueConfig KeyValueConfig::parse(std::string_view text, const std::string &source)
{
    KeyValueConfig cfg;
    std::size_t line_no = 0;
    while (!text.empty())
    {
        ++line_no;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        const std::string where = source + ":" + std::to_string(line_no);
        if (eq == std::string_view::npos)
            throw ConfigError("", where + ": expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty())
            throw ConfigError("", where + ": empty key");
        if (cfg.contains(key))
            throw ConfigError(key, where + ": duplicate key");
        cfg.values_[key] = value;
    }
    return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str(), path.string());
}

void KeyValueConfig::set(const std::string &key, const std::string &value) { values_[key] = value; }

void KeyValueConfig::apply_override(std::string_view assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos)
        throw ConfigError("", "override '" + std::string(assignment) + "' is not of the form key=value");
    const std::string key(trim(assignment.substr(0, eq)));
    if (key.empty())
        throw ConfigError("", "override '" + std::string(assignment) + "' has an empty key");
    set(key, std::string(trim(assignment.substr(eq + 1))));
}

std::optional<std::string> KeyValueConfig::get(const std::string &key) const
{
    auto it = values_.find(key);
    if (it == values_.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::string> KeyValueConfig::echo_lines() const
{
    std::vector<std::string> out;
    out.reserve(values_.size());
    for (const auto &[k, v] : values_)
        out.push_back(k + "=" + v);
    return out;
}

double parse_double(const std::string &field, std::string_view text)
{
    const std::string s(trim(text));
    if (s.empty())
        throw ConfigError(field, "expected a number, got an empty value");
    char *end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
        throw ConfigError(field, "expected a finite number, got '" + s + "'");
    return v;
}

std::uint64_t parse_u64(const std::string &field, std::string_view text)
{
    const auto s = trim(text);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ConfigError(field, "expected a non-negative integer, got '" + std::string(s) + "'");
    return v;
}

std::size_t parse_size(const std::string &field, std::string_view text)
{
    return static_cast<std::size_t>(parse_u64(field, text));
}

bool parse_bool(const std::string &field, std::string_view text)
{
    const auto s = trim(text);
    if (s == "true" || s == "1" || s == "yes" || s == "on")
        return true;
    if (s == "false" || s == "0" || s == "no" || s == "off")
        return false;
    throw ConfigError(field, "expected a boolean, got '" + std::string(s) + "'");
}

std::vector<std::string> split_list(std::string_view text, char sep)
{
    std::vector<std::string> out;
    while (true)
    {
        const auto pos = text.find(sep);
        const auto item = trim(text.substr(0, pos));
        if (!item.empty())
            out.emplace_back(item);
        if (pos == std::string_view::npos)
            break;
        text = text.substr(pos + 1);
    }
    return out;
}

} // namespace mimo_bands
