/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

// Command-line front-end of the IRS-assisted NOMA link simulator.

#include "irsnoma/commands.h"

#include <CLI11.hpp>

#include <iostream>
#include <map>

using namespace irsnoma;

namespace
{

void
add_run_options(CLI::App* cmd, RunOptions& opts, std::string& configPath)
{
    cmd->add_option("--config", configPath, "Scenario JSON file (defaults when omitted)");
    cmd->add_option("--seed", opts.seed, "Override master_seed");
    cmd->add_option("--trials", opts.trials, "Override trials per sweep point")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--workers", opts.workers, "Worker threads, 0 = all cores");
    cmd->add_flag("--show-config", opts.showConfig, "Print the effective scenario and exit");
}

} // namespace

int
main(int argc, char** argv)
{
    CLI::App app{"IRS-assisted two-user NOMA link simulator"};
    app.require_subcommand(1);

    RunOptions opts;
    std::string configPath;
    std::string outPath;
    std::string inPath;
    double dNear = 0.0;
    PlotMetric metric = PlotMetric::RxPower;
    std::string user = "u1";

    auto* sweep = app.add_subcommand("sweep", "Distance sweep, conventional vs modified model");
    add_run_options(sweep, opts, configPath);
    sweep->add_option("--out", outPath, "Output CSV")->required();

    auto* compare =
        app.add_subcommand("compare", "Distance sweep including the gain-enhanced conventional model");
    add_run_options(compare, opts, configPath);
    compare->add_option("--out", outPath, "Output CSV")->required();

    auto* plot = app.add_subcommand("plot", "Render an SVG chart and .dat sidecar from a results CSV");
    plot->add_option("input", inPath, "Results CSV")->required();
    plot->add_option("--out", outPath, "Output SVG")->required();
    const std::map<std::string, PlotMetric> metrics{{"rx_power", PlotMetric::RxPower},
                                                    {"sinr", PlotMetric::Sinr}};
    plot->add_option("--metric", metric, "rx_power or sinr")
        ->transform(CLI::CheckedTransformer(metrics, CLI::ignore_case));
    plot->add_option("--user", user, "u1 or u2")->check(CLI::IsMember({"u1", "u2"}));

    auto* point = app.add_subcommand("point", "Inspect every model at one near-user distance");
    add_run_options(point, opts, configPath);
    point->add_option("d_near", dNear, "Near-user IRS distance in m")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    if (!configPath.empty())
    {
        opts.configPath = configPath;
    }

    if (*sweep)
    {
        return cmd_sweep(opts, outPath, std::cout, std::cerr);
    }
    if (*compare)
    {
        return cmd_compare(opts, outPath, std::cout, std::cerr);
    }
    if (*plot)
    {
        return cmd_plot(inPath, outPath, metric, user, std::cerr);
    }
    return cmd_point(opts, dNear, std::cout, std::cerr);
}
