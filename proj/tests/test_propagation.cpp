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

#include "mimo_bands/propagation.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace mimo_bands;

namespace
{

// Term-by-term COST-Hata offset, written out independently of the library.
double hata_terms(double f, double ht, double hr)
{
    const double t1 = 46.3;
    const double t2 = 33.9 * std::log10(f);
    const double t3 = -13.82 * std::log10(ht);
    const double t4 = -(1.1 * std::log10(f) - 0.7) * hr;
    const double t5 = 1.56 * std::log10(f);
    const double t6 = -0.8;
    return t1 + t2 + t3 + t4 + t5 + t6;
}

MuWaveLinkParams link(double f, double ht, double hr)
{
    MuWaveLinkParams p;
    p.f_mhz = f;
    p.h_t_m = ht;
    p.h_r_m = hr;
    return p;
}

} // namespace

TEST_CASE("cost_hata_offset")
{
    const double l = cost_hata_offset(link(1900.0, 15.0, 1.65));
    CHECK(l == doctest::Approx(hata_terms(1900.0, 15.0, 1.65)).epsilon(1e-14));
    CHECK(std::round(l * 10.0) / 10.0 == doctest::Approx(140.7));

    // 33.9 log10(1000) = 101.7
    const double l1000 = cost_hata_offset(link(1000.0, 10.0, 1.0));
    CHECK(l1000 == doctest::Approx(46.3 + 101.7 - 13.82 - 2.6 + 4.68 - 0.8).epsilon(1e-13));

    const double delta = cost_hata_offset(link(1900.0, 15.0, 1.65)) - cost_hata_offset(link(1900.0, 30.0, 1.65));
    CHECK(delta == doctest::Approx(13.82 * std::log10(2.0)).epsilon(1e-12));
    CHECK(delta == doctest::Approx(4.16).epsilon(1e-3));
}

TEST_CASE("MuWaveLinkParams validation names the field")
{
    MuWaveLinkParams p;
    p.d0_m = 120.0;
    p.d1_m = 100.0;
    CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("d0_m"), std::invalid_argument);
    p = {};
    p.f_mhz = 0.0;
    CHECK_THROWS_WITH_AS(p.validate(), doctest::Contains("f_mhz"), std::invalid_argument);
    p = {};
    p.sigma_sh_db = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("three-slope path loss branches")
{
    const MuWaveLinkParams p;  // d0 = 50, d1 = 100
    const double L = cost_hata_offset(p);

    CHECK(mu_wave_pathloss_db(1.0, p) == mu_wave_pathloss_db(p.d0_m, p));
    CHECK(mu_wave_pathloss_db(10.0, p) == mu_wave_pathloss_db(p.d0_m, p));
    CHECK(mu_wave_pathloss_db(10.0, p) ==
          doctest::Approx(-L - 15.0 * std::log10(100.0) - 20.0 * std::log10(50.0)).epsilon(1e-14));
    CHECK(mu_wave_pathloss_db(70.0, p) ==
          doctest::Approx(-L - 15.0 * std::log10(100.0) - 20.0 * std::log10(70.0)).epsilon(1e-14));
    CHECK(mu_wave_pathloss_db(500.0, p) == doctest::Approx(-L - 35.0 * std::log10(500.0)).epsilon(1e-14));

    // Continuity: evaluate each branch formula on both sides of the breakpoints.
    const double eps = 1e-9;
    CHECK(std::abs(mu_wave_pathloss_db(p.d1_m * (1 + eps), p) - mu_wave_pathloss_db(p.d1_m, p)) < 1e-6);
    CHECK(std::abs(mu_wave_pathloss_db(p.d0_m * (1 + eps), p) - mu_wave_pathloss_db(p.d0_m, p)) < 1e-6);
    CHECK(std::abs((-L - 35.0 * std::log10(p.d1_m)) - mu_wave_pathloss_db(p.d1_m, p)) < 1e-9);

    for (double d : {150.0, 400.0, 2000.0})
        CHECK(mu_wave_pathloss_db(10.0 * d, p) - mu_wave_pathloss_db(d, p) == doctest::Approx(-35.0).epsilon(1e-12));

    CHECK_THROWS_AS(mu_wave_pathloss_db(0.0, p), std::invalid_argument);
    CHECK_THROWS_AS(mu_wave_pathloss_db(-5.0, p), std::invalid_argument);
}

TEST_CASE("path loss is non-increasing in distance")
{
    MuWaveLinkParams p;
    p.d0_m = 20.0;
    p.d1_m = 300.0;
    double prev = mu_wave_pathloss_db(0.5, p);
    for (double d = 0.75; d < 5000.0; d *= 1.07)
    {
        const double cur = mu_wave_pathloss_db(d, p);
        CHECK(cur <= prev + 1e-12);
        prev = cur;
    }
}

TEST_CASE("mu_wave_beta shadowing")
{
    MuWaveLinkParams p;
    auto rng = make_stream(7);

    MuWaveLinkParams flat = p;
    flat.sigma_sh_db = 0.0;
    const double pl = mu_wave_pathloss_db(80.0, flat);
    CHECK(mu_wave_beta(80.0, flat, rng) == doctest::Approx(std::pow(10.0, pl / 10.0)).epsilon(1e-14));

    // log10(beta) = PL/10 + 0.1 sigma z, so its sample mean estimates PL/10 with
    // standard error 0.1 sigma / sqrt(n).
    const int n = 100000;
    double sum = 0.0;
    bool all_positive = true;
    for (int i = 0; i < n; ++i)
    {
        const double b = mu_wave_beta(80.0, p, rng);
        all_positive = all_positive && b > 0.0;
        sum += std::log10(b);
    }
    const double se = 0.1 * p.sigma_sh_db / std::sqrt(static_cast<double>(n));
    CHECK(all_positive);
    CHECK(std::abs(sum / n - mu_wave_pathloss_db(80.0, p) / 10.0) < 3.0 * se);
}

TEST_CASE("mm-wave attenuation examples")
{
    const ScenarioRegistry reg;
    const auto sc_los = reg.get("umi-street-canyon-los", 73.0);
    const double lambda = speed_of_light_m_s / 73e9;
    const double fspl = 20.0 * std::log10(4.0 * std::numbers::pi / lambda);
    CHECK(fspl == doctest::Approx(69.7).epsilon(1e-3));

    const double a100 = mm_wave_attenuation_db(100.0, sc_los, 0.0);
    CHECK(a100 == doctest::Approx(-(fspl + 10.0 * 1.98 * 2.0)).epsilon(1e-14));
    CHECK(std::round(a100 * 10.0) / 10.0 == doctest::Approx(-109.3));

    for (const auto &s : reg.all())
    {
        if (s.b != 0.0)
            continue;
        auto sc = reg.get(s.name, 28.0);
        CHECK(mm_wave_attenuation_db(1.0, sc, 0.0) ==
              doctest::Approx(-20.0 * std::log10(4.0 * std::numbers::pi / sc.wavelength_m())).epsilon(1e-14));
    }

    // f == f0 collapses the bracket to 1.
    auto office = reg.get("inh-indoor-office-nlos", 24.2);
    auto office_b0 = office;
    office_b0.b = 0.0;
    for (double r : {2.0, 17.0, 95.0})
        CHECK(mm_wave_attenuation_db(r, office, 0.0) == doctest::Approx(mm_wave_attenuation_db(r, office_b0, 0.0)).epsilon(1e-13));

    // Off f0 the bracket differs from 1.
    auto office73 = reg.get("inh-indoor-office-nlos", 73.0);
    const double bracket = 1.0 - 0.06 + 0.06 * 73.0 / 24.2;
    CHECK(mm_wave_attenuation_db(10.0, office73, 0.0) ==
          doctest::Approx(-20.0 * std::log10(4.0 * std::numbers::pi / office73.wavelength_m()) - 31.9 * bracket).epsilon(1e-13));

    // Shadowing enters with a negative sign.
    CHECK(mm_wave_attenuation_db(50.0, sc_los, 1.0) == doctest::Approx(mm_wave_attenuation_db(50.0, sc_los, 0.0) - 3.1));

    CHECK_THROWS_AS(mm_wave_attenuation_db(0.0, sc_los, 0.0), std::invalid_argument);
}

TEST_CASE("mm-wave attenuation is strictly decreasing for every scenario")
{
    const ScenarioRegistry reg;
    for (const auto &s : reg.all())
    {
        CAPTURE(s.name);
        auto sc = reg.get(s.name, 73.0);
        double prev = mm_wave_attenuation_db(0.5, sc, 0.0);
        for (double r = 0.6; r < 1000.0; r *= 1.2)
        {
            const double cur = mm_wave_attenuation_db(r, sc, 0.0);
            CHECK(cur < prev);
            prev = cur;
        }
    }
}

TEST_CASE("dB / linear round trip")
{
    const ScenarioRegistry reg;
    auto sc = reg.get("umi-open-square-nlos", 73.0);
    for (double r : {1.0, 10.0, 50.0, 200.0})
    {
        const double db = mm_wave_attenuation_db(r, sc, 0.3);
        CHECK(std::abs(linear_to_db(db_to_linear(db)) - db) < 1e-9);
    }
}

TEST_CASE("scenario table rows")
{
    struct Row
    {
        const char *name;
        double n, sigma, b, f0;
    };
    const Row table[] = {
        {"umi-street-canyon-los", 1.98, 3.1, 0.0, 0.0},   {"umi-street-canyon-nlos", 3.19, 8.2, 0.0, 0.0},
        {"umi-open-square-los", 1.85, 4.2, 0.0, 0.0},     {"umi-open-square-nlos", 2.89, 7.1, 0.0, 0.0},
        {"inh-indoor-office-los", 1.73, 3.02, 0.0, 0.0},  {"inh-indoor-office-nlos", 3.19, 8.29, 0.06, 24.2},
        {"inh-shopping-mall-los", 1.73, 2.01, 0.0, 0.0},  {"inh-shopping-mall-nlos", 2.59, 7.40, 0.01, 39.5},
    };
    const auto &rows = builtin_scenarios();
    REQUIRE(rows.size() == 8);
    for (std::size_t i = 0; i < 8; ++i)
    {
        CAPTURE(table[i].name);
        CHECK(rows[i].name == table[i].name);
        CHECK(rows[i].n == table[i].n);
        CHECK(rows[i].sigma_db == table[i].sigma);
        CHECK(rows[i].b == table[i].b);
        if (table[i].b != 0.0)
        {
            REQUIRE(rows[i].f0_ghz.has_value());
            CHECK(*rows[i].f0_ghz == table[i].f0);
        }
        else
            CHECK_FALSE(rows[i].f0_ghz.has_value());
    }
}

TEST_CASE("scenario registry lookups and overrides")
{
    ScenarioRegistry reg;
    CHECK(reg.contains("umi-open-square-los"));
    CHECK_FALSE(reg.contains("rural-macro"));
    CHECK_THROWS_AS(reg.get("rural-macro", 28.0), std::out_of_range);
    CHECK(reg.get("umi-open-square-los", 28.0).f_ghz == 28.0);

    CHECK(ScenarioRegistry::los_counterpart("umi-street-canyon-nlos") == "umi-street-canyon-los");
    CHECK(ScenarioRegistry::los_counterpart("umi-street-canyon-los") == "umi-street-canyon-los");

    auto row = reg.get("umi-open-square-nlos", 73.0);
    row.n = 3.0;
    reg.upsert(row);
    CHECK(reg.get("umi-open-square-nlos", 73.0).n == 3.0);
    CHECK(reg.all().size() == 8);

    MmWaveScenario custom{"rural-macro", 2.2, 4.0, 0.0, std::nullopt, 28.0};
    reg.upsert(custom);
    CHECK(reg.all().size() == 9);

    MmWaveScenario bad{"bad", 2.0, 1.0, 0.2, std::nullopt, 28.0};
    CHECK_THROWS_AS(reg.upsert(bad), std::invalid_argument);
}

TEST_CASE("LOS indicator")
{
    auto rng = make_stream(99);
    LosModel always{LosMode::always};
    LosModel never{LosMode::never};
    for (double d : {1.0, 50.0, 1e4})
    {
        CHECK(draw_los(d, always, rng));
        CHECK_FALSE(draw_los(d, never, rng));
    }

    const LosModel model;  // urban-micro curve, d1 = 20 m, d2 = 39 m
    for (double d = 0.5; d < 2000.0; d *= 1.5)
    {
        CHECK(model.probability(d) >= 0.0);
        CHECK(model.probability(d) <= 1.0);
    }

    const double p50 = std::min(1.0, 20.0 / 50.0) * (1.0 - std::exp(-50.0 / 39.0)) + std::exp(-50.0 / 39.0);
    CHECK(model.probability(50.0) == doctest::Approx(p50).epsilon(1e-15));

    const int n = 100000;
    int hits = 0;
    for (int i = 0; i < n; ++i)
        hits += draw_los(50.0, model, rng) ? 1 : 0;
    const double se = std::sqrt(p50 * (1.0 - p50) / n);
    CHECK(std::abs(static_cast<double>(hits) / n - p50) < 3.0 * se);

    CHECK_THROWS_AS(draw_los(0.0, model, rng), std::invalid_argument);
}
