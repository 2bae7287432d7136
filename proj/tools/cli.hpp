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

#ifndef MIMO_BANDS_TOOLS_CLI_HPP
#define MIMO_BANDS_TOOLS_CLI_HPP

#include <iosfwd>

namespace mimo_bands::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_runtime = 1;
inline constexpr int exit_config = 2;
inline constexpr int exit_usage = 64;

// Entry point of the mimo_bands tool, with injectable streams for testing.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace mimo_bands::cli

#endif
