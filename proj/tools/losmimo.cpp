// SPDX-License-Identifier: Apache-2.0
//
// losmimo: line-of-sight MIMO design library for dual-polarized planar arrays
// Copyright (C) 2026 The losmimo authors
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

#include "losmimo/cli/config.hpp"
#include "losmimo/cli/scenarios.hpp"
#include "losmimo/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace
{
    enum ExitCode
    {
        kOk = 0,
        kConfig = 2,
        kDomain = 3,
        kNumeric = 4
    };

    struct Args
    {
        std::string config_path;
        std::string scenario;
        std::string out_path;
        std::vector<std::string> overrides;
        int threads = 1;
        bool c_approx = false;
        int quad_order = 0;
    };

    int run(const Args &args, const std::string &subcommand)
    {
        using namespace losmimo;
        using namespace losmimo::cli;

        Config cfg = args.config_path.empty() ? Config{} : Config::load(args.config_path);
        for (const auto &o : args.overrides)
            cfg.set(o);

        std::string scenario = !subcommand.empty() ? subcommand : args.scenario;
        if (scenario.empty())
            scenario = cfg.get_string("scenario", "");
        if (scenario.empty())
            throw ConfigError("no scenario: pass --scenario, a subcommand or set 'scenario' in the config");
        if (!subcommand.empty() && !args.scenario.empty() && args.scenario != subcommand)
            throw ConfigError("subcommand '" + subcommand + "' conflicts with --scenario " + args.scenario);

        RunOptions opt;
        opt.threads = args.threads;
        opt.c_approx = args.c_approx;
        if (args.quad_order != 0)
            opt.quad_order = args.quad_order;

        const ScenarioOutput out = run_scenario(scenario, cfg, opt);

        const std::string path = !args.out_path.empty() ? args.out_path : cfg.get_string("output.path", "");
        if (path.empty() || path == "-")
            out.table.write(std::cout);
        else
        {
            std::ofstream f(path, std::ios::binary);
            if (!f)
                throw ConfigError("cannot write output file '" + path + "'");
            out.table.write(f);
            if (!f.flush())
                throw ConfigError("write to '" + path + "' failed");
            std::cout << scenario << ": " << out.table.rows.size() << " rows written to " << path << "\n";
            for (const auto &s : out.summary)
                std::cout << "  " << s << "\n";
        }
        for (const auto &n : out.notices)
            std::cerr << "notice: " << n << "\n";
        for (const auto &k : cfg.unused_keys())
            std::cerr << "warning: config key '" << k << "' was not used by scenario " << scenario << "\n";
        return kOk;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Line-of-sight MIMO design for dual-polarized planar arrays"};
    app.set_version_flag("--version", std::string(LOSMIMO_VERSION));
    Args args;
    app.add_option("--config,-c", args.config_path, "Experiment config file (key = value)");
    app.add_option("--scenario,-s", args.scenario, "Scenario name")
        ->check(CLI::IsMember(losmimo::cli::scenario_names()));
    app.add_option("--out,-o", args.out_path, "CSV output path, '-' for stdout");
    app.add_option("--set", args.overrides, "Override a config key, key=value (repeatable)");
    app.add_option("--threads,-j", args.threads, "Worker threads for sweep points")->check(CLI::PositiveNumber);
    app.add_flag("--c-approx", args.c_approx, "Use c = 3e8 m/s");
    app.add_option("--quad-order", args.quad_order, "Gauss-Legendre points per axis")->check(CLI::Range(2, 1024));
    app.require_subcommand(0, 1);

    std::vector<CLI::App *> subs;
    for (const auto &name : losmimo::cli::scenario_names())
        subs.push_back(app.add_subcommand(name, "Run the " + name + " scenario")->fallthrough());

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }

    std::string subcommand;
    for (auto *s : subs)
        if (s->parsed())
            subcommand = s->get_name();

    try
    {
        return run(args, subcommand);
    }
    catch (const losmimo::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return kConfig;
    }
    catch (const losmimo::NumericError &e)
    {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kNumeric;
    }
    catch (const losmimo::DomainError &e)
    {
        std::cerr << "domain error: " << e.what() << "\n";
        return kDomain;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
