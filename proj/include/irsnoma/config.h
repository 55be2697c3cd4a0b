/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef IRSNOMA_CONFIG_H
#define IRSNOMA_CONFIG_H

#include "irsnoma/sim.h"

#include <filesystem>
#include <string>
#include <string_view>

namespace irsnoma
{

/**
 * Parse a JSON scenario document. Keys mirror the Scenario fields in
 * snake_case; missing keys keep their defaults, unknown keys are rejected.
 * An empty document yields the default Scenario. Throws ValidationError
 * whose message starts with the offending key.
 */
Scenario parse_scenario(std::string_view text);

/// Read and parse a config file; IoError when it cannot be read.
Scenario load_scenario(const std::filesystem::path& path);

/// Full scenario as pretty-printed JSON, every key present.
std::string scenario_to_json(const Scenario& scn);

} // namespace irsnoma

#endif // IRSNOMA_CONFIG_H
