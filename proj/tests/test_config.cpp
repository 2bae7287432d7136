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
#include "mimo_bands/experiments.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace mimo_bands;

TEST_CASE("key-value parsing")
{
    const auto kv = KeyValueConfig::parse("# header\n"
                                          "study = fig3_multiplexing\n"
                                          "\n"
                                          "  snr_db=0, 10 , 20  # trailing comment\n"
                                          "mm.scenario = umi-street-canyon-nlos\n");
    CHECK(kv.get("study") == "fig3_multiplexing");
    CHECK(kv.get("snr_db") == "0, 10 , 20");
    CHECK(kv.contains("mm.scenario"));
    CHECK_FALSE(kv.get("missing").has_value());
    CHECK(kv.entries().size() == 3);
    const auto echo = kv.echo_lines();
    REQUIRE(echo.size() == 3);
    CHECK(echo.front() == "mm.scenario=umi-street-canyon-nlos");
}

TEST_CASE("key-value errors")
{
    CHECK_THROWS_WITH_AS(KeyValueConfig::parse("a = 1\na = 2\n"), doctest::Contains("duplicate"), ConfigError);
    CHECK_THROWS_AS(KeyValueConfig::parse("no equals sign\n"), ConfigError);
    CHECK_THROWS_AS(KeyValueConfig::parse(" = 3\n"), ConfigError);
    CHECK_THROWS_AS(KeyValueConfig::load("/nonexistent/dir/file.cfg"), std::runtime_error);
}

TEST_CASE("overrides replace values")
{
    auto kv = KeyValueConfig::parse("n_trials = 10\n");
    kv.apply_override("n_trials=20");
    kv.apply_override(" master_seed = 5 ");
    CHECK(kv.get("n_trials") == "20");
    CHECK(kv.get("master_seed") == "5");
    CHECK_THROWS_AS(kv.apply_override("novalue"), ConfigError);
    CHECK_THROWS_AS(kv.apply_override("=1"), ConfigError);
}

TEST_CASE("load reads files")
{
    const auto path = std::filesystem::temp_directory_path() / "mimo_bands_test_config.cfg";
    {
        std::ofstream out(path);
        out << "n_trials = 7\n";
    }
    CHECK(KeyValueConfig::load(path).get("n_trials") == "7");
    std::filesystem::remove(path);
}

TEST_CASE("value parsers")
{
    CHECK(parse_double("x", " 2.5 ") == 2.5);
    CHECK(parse_double("x", "-1e-3") == -1e-3);
    CHECK_THROWS_WITH_AS(parse_double("x", "abc"), doctest::Contains("x: "), ConfigError);
    CHECK_THROWS_AS(parse_double("x", ""), ConfigError);
    CHECK_THROWS_AS(parse_double("x", "inf"), ConfigError);
    CHECK(parse_u64("n", "18446744073709551615") == 18446744073709551615ULL);
    CHECK_THROWS_AS(parse_u64("n", "-1"), ConfigError);
    CHECK_THROWS_AS(parse_size("n", "3.5"), ConfigError);
    CHECK(parse_bool("b", "on"));
    CHECK_FALSE(parse_bool("b", "false"));
    CHECK_THROWS_AS(parse_bool("b", "maybe"), ConfigError);
    CHECK(split_list("a, b,,c ") == std::vector<std::string>{"a", "b", "c"});
    CHECK(split_list("").empty());

    try
    {
        parse_double("mu.f_mhz", "x");
        FAIL("expected a ConfigError");
    }
    catch (const ConfigError &e)
    {
        CHECK(e.field() == "mu.f_mhz");
    }
}

TEST_CASE("experiment config from key-value entries")
{
    const auto kv = KeyValueConfig::parse("study = fig4_muwave_csi\n"
                                          "antennas = 4x8, 8x16\n"
                                          "m_values = 1, 2\n"
                                          "snr_db = -5, 5\n"
                                          "n_trials = 12\n"
                                          "master_seed = 99\n"
                                          "mu.f_mhz = 2000\n"
                                          "mu.distance_m = 80\n"
                                          "mm.scenario = inh-indoor-office-nlos\n"
                                          "mm.ray_spread_deg = 10\n"
                                          "mm.los = never\n"
                                          "mm.shadowing = false\n"
                                          "est.training_snr_db = 10\n");
    const auto cfg = experiment_config_from(kv);
    CHECK(cfg.study == Study::fig4_muwave_csi);
    REQUIRE(cfg.antennas.size() == 2);
    CHECK(cfg.antennas[1] == AntennaPair{8, 16});
    CHECK(cfg.m_values == std::vector<std::size_t>{1, 2});
    CHECK(cfg.snr_grid_db == std::vector<double>{-5.0, 5.0});
    CHECK(cfg.n_trials == 12);
    CHECK(cfg.master_seed == 99);
    CHECK(cfg.mu.f_mhz == 2000.0);
    CHECK(cfg.mu_distance_m == 80.0);
    CHECK(cfg.mm.scenario.name == "inh-indoor-office-nlos");
    CHECK(cfg.mm.los_scenario.name == "inh-indoor-office-los");
    CHECK(cfg.mm.ray_angle_spread_rad == doctest::Approx(10.0 * std::numbers::pi / 180.0));
    CHECK(cfg.mm.los_model.mode == LosMode::never);
    CHECK_FALSE(cfg.mm.shadowing);
    CHECK(cfg.estimation.training_snr_db == 10.0);
}

TEST_CASE("experiment config defaults")
{
    const auto cfg = experiment_config_from(KeyValueConfig{});
    CHECK(cfg.study == Study::fig2_cm_vs_an);
    CHECK(cfg.mu.d0_m == 50.0);
    CHECK(cfg.mu.d1_m == 100.0);
    CHECK(cfg.mm.scenario.name == "umi-open-square-nlos");
    CHECK(cfg.mm.scenario.f_ghz == 73.0);
}

TEST_CASE("scenario overrides")
{
    const auto kv = KeyValueConfig::parse("scenario.custom-nlos.n = 2.5\n"
                                          "scenario.custom-nlos.sigma_db = 4\n"
                                          "scenario.umi-open-square-los.n = 1.7\n"
                                          "mm.scenario = custom-nlos\n"
                                          "mm.los_scenario = umi-open-square-los\n");
    const auto cfg = experiment_config_from(kv);
    CHECK(cfg.mm.scenario.name == "custom-nlos");
    CHECK(cfg.mm.scenario.n == 2.5);
    CHECK(cfg.mm.scenario.sigma_db == 4.0);
    CHECK(cfg.mm.los_scenario.n == 1.7);
    CHECK(cfg.mm.los_scenario.sigma_db == doctest::Approx(builtin_scenarios()[2].sigma_db));

    CHECK_THROWS_AS(experiment_config_from(KeyValueConfig::parse("scenario.x.q = 1\n")), ConfigError);
    CHECK_THROWS_AS(experiment_config_from(KeyValueConfig::parse("scenario.umi-open-square-nlos.b = 0.2\n")),
                    ConfigError);
}

TEST_CASE("invalid experiment configs name the field")
{
    auto field_of = [](const std::string &text) {
        try
        {
            experiment_config_from(KeyValueConfig::parse(text));
        }
        catch (const ConfigError &e)
        {
            return e.field();
        }
        return std::string("<none>");
    };
    CHECK(field_of("mu.d0_m = 200\n") == "mu.d0_m");
    CHECK(field_of("bogus = 1\n") == "bogus");
    CHECK(field_of("study = fig9\n") == "study");
    CHECK(field_of("antennas = 4by8\n") == "antennas");
    CHECK(field_of("n_trials = 0\n") == "n_trials");
    CHECK(field_of("antennas = 2x2\nm_values = 3\n") == "m_values");
    CHECK(field_of("mm.scenario = nowhere\n") == "mm.scenario");
    CHECK(field_of("mm.los = sometimes\n") == "mm.los");
    CHECK(field_of("mm.n_cl = 0\n") == "mm.n_cl");
    CHECK(field_of("est.tau_p = 2\n") == "est.tau_p");
    CHECK(field_of("mu.sigma_sh_db = -1\n") == "mu.sigma_sh_db");
}
