/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef IRSNOMA_COMMANDS_H
#define IRSNOMA_COMMANDS_H

#include "irsnoma/plot.h"
#include "irsnoma/sim.h"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace irsnoma
{

enum ExitCode : int
{
    kExitOk = 0,
    kExitConfig = 1,
    kExitIo = 2,
    kExitDomain = 3,
};

/// Options shared by the subcommands that read a scenario.
struct RunOptions
{
    std::optional<std::filesystem::path> configPath; //!< absent: built-in defaults
    std::optional<std::uint64_t> seed;
    std::optional<std::uint32_t> trials;
    unsigned workers{0};
    bool showConfig{false}; //!< print the effective scenario and stop
};

/// Baseline sweep (conventional and modified) written as CSV to outPath.
int cmd_sweep(const RunOptions& opts,
              const std::filesystem::path& outPath,
              std::ostream& out,
              std::ostream& err);

/// Sweep with the gain-enhanced conventional model added.
int cmd_compare(const RunOptions& opts,
                const std::filesystem::path& outPath,
                std::ostream& out,
                std::ostream& err);

/// Chart of one metric for one user; writes outPath and a .dat sidecar next to it.
int cmd_plot(const std::filesystem::path& inCsv,
             const std::filesystem::path& outPath,
             PlotMetric metric,
             const std::string& user,
             std::ostream& err);

/// All models, users and metrics at a single near-user distance, as JSON on `out`.
int cmd_point(const RunOptions& opts, double dNear, std::ostream& out, std::ostream& err);

/// Sidecar path used by cmd_plot.
std::filesystem::path dat_sidecar_path(const std::filesystem::path& plotPath);

/// Effective scenario after config loading and --seed/--trials overrides.
Scenario resolve_scenario(const RunOptions& opts);

} // namespace irsnoma

#endif // IRSNOMA_COMMANDS_H
