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

#include "cli.hpp"

#include "mimo_bands/config.hpp"
#include "mimo_bands/csv.hpp"
#include "mimo_bands/experiments.hpp"
#include "mimo_bands/propagation.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

namespace mimo_bands::cli
{

namespace
{

struct Options
{
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> overrides;
    std::size_t workers = 0;
    bool quiet = false;
};

std::size_t default_workers()
{
    if (const char *env = std::getenv("MIMO_BANDS_WORKERS"))
    {
        try
        {
            return parse_size("MIMO_BANDS_WORKERS", env);
        }
        catch (const ConfigError &)
        {
        }
    }
    return 0;
}

std::string fmt_g(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

KeyValueConfig load_config(const Options &opt)
{
    KeyValueConfig kv;
    try
    {
        kv = KeyValueConfig::load(opt.config_path);
    }
    catch (const ConfigError &)
    {
        throw;
    }
    catch (const std::exception &e)
    {
        throw ConfigError("", e.what());
    }
    for (const auto &o : opt.overrides)
        kv.apply_override(o);
    if (opt.seed)
        kv.set("master_seed", std::to_string(*opt.seed));
    return kv;
}

int cmd_list_scenarios(std::ostream &out)
{
    for (const auto &s : builtin_scenarios())
    {
        out << s.name << " n=" << fmt_g(s.n) << " sigma=" << fmt_g(s.sigma_db) << " b=" << fmt_g(s.b);
        if (s.f0_ghz)
            out << " f0=" << fmt_g(*s.f0_ghz);
        out << '\n';
    }
    return exit_ok;
}

int cmd_validate(const Options &opt, std::ostream &out)
{
    const ExperimentConfig cfg = experiment_config_from(load_config(opt));
    if (!opt.quiet)
        out << "ok: " << to_string(cfg.study) << ", " << cfg.antennas.size() << " antenna configuration(s), "
            << cfg.n_trials << " trial(s)\n";
    return exit_ok;
}

int cmd_run(const Options &opt, std::ostream &out, std::ostream &err)
{
    const KeyValueConfig kv = load_config(opt);
    const ExperimentConfig cfg = experiment_config_from(kv);

    std::vector<CurvePoint> points;
    try
    {
        points = run_study(cfg, opt.workers);
    }
    catch (const ConfigError &)
    {
        throw;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return exit_runtime;
    }

    std::vector<std::string> comments;
    for (const auto &line : kv.echo_lines())
        comments.push_back("config: " + line);

    if (opt.out_path.empty() || opt.out_path == "-")
        out << format_csv(points, comments);
    else
    {
        try
        {
            write_csv(points, opt.out_path, comments);
        }
        catch (const std::exception &e)
        {
            err << "error: " << e.what() << '\n';
            return exit_runtime;
        }
        if (!opt.quiet)
            err << "wrote " << points.size() << " curve points to " << opt.out_path << '\n';
    }
    return exit_ok;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Massive MIMO channel simulation for micro- and millimeter-wave bands", "mimo_bands"};
    app.require_subcommand(1);

    Options opt;
    opt.workers = default_workers();

    auto *run_cmd = app.add_subcommand("run", "Run a study and write its curve points as CSV");
    auto *list_cmd = app.add_subcommand("list-scenarios", "Print the built-in mm-wave path-loss scenarios");
    auto *validate_cmd = app.add_subcommand("validate-config", "Check a study configuration file");
    auto *version_cmd = app.add_subcommand("version", "Print the version");

    for (auto *cmd : {run_cmd, validate_cmd})
    {
        cmd->add_option("--config", opt.config_path, "Study configuration file")->required();
        cmd->add_option("--set", opt.overrides, "Override a configuration entry (key=value)")->take_all();
        cmd->add_option("--seed", opt.seed, "Override master_seed");
        cmd->add_flag("--quiet", opt.quiet, "Suppress progress messages");
    }
    run_cmd->add_option("--out", opt.out_path, "Output CSV path (default: standard output)");
    run_cmd->add_option("--workers", opt.workers, "Worker threads, 0 = all cores (default: $MIMO_BANDS_WORKERS)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e, out, err);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError &e)
    {
        err << "error: " << e.what() << '\n' << app.help();
        return exit_usage;
    }

    try
    {
        if (*version_cmd)
        {
            out << "mimo_bands " << MIMO_BANDS_VERSION << '\n';
            return exit_ok;
        }
        if (*list_cmd)
            return cmd_list_scenarios(out);
        if (*validate_cmd)
            return cmd_validate(opt, out);
        return cmd_run(opt, out, err);
    }
    catch (const ConfigError &e)
    {
        err << "error: " << e.what() << '\n';
        return exit_config;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return exit_runtime;
    }
}

} // namespace mimo_bands::cli
