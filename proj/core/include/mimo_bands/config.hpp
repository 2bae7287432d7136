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

#ifndef MIMO_BANDS_CONFIG_HPP
#define MIMO_BANDS_CONFIG_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mimo_bands
{

// Configuration problem attributable to a single key.
class ConfigError : public std::runtime_error
{
public:
    ConfigError(std::string field, const std::string &message)
        : std::runtime_error(field.empty() ? message : field + ": " + message), field_(std::move(field))
    {
    }

    const std::string &field() const { return field_; }

private:
    std::string field_;
};

// Flat key = value text. '#' starts a comment (whole line or trailing), blank lines are
// ignored, keys are case-sensitive, and a key may appear at most once per file.
class KeyValueConfig
{
public:
    static KeyValueConfig parse(std::string_view text, const std::string &source = "<string>");
    static KeyValueConfig load(const std::filesystem::path &path);

    // Later calls replace earlier values.
    void set(const std::string &key, const std::string &value);

    // "key=value" form used by --set on the command line.
    void apply_override(std::string_view assignment);

    std::optional<std::string> get(const std::string &key) const;
    bool contains(const std::string &key) const { return values_.count(key) != 0; }

    // Sorted by key.
    const std::map<std::string, std::string> &entries() const { return values_; }

    // One "key=value" line per entry, sorted by key.
    std::vector<std::string> echo_lines() const;

private:
    std::map<std::string, std::string> values_;
};

// Value parsers shared by the experiment loader; all throw ConfigError naming `field`.
double parse_double(const std::string &field, std::string_view text);
std::size_t parse_size(const std::string &field, std::string_view text);
std::uint64_t parse_u64(const std::string &field, std::string_view text);
bool parse_bool(const std::string &field, std::string_view text);
std::vector<std::string> split_list(std::string_view text, char sep = ',');

} // namespace mimo_bands

#endif
