/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef IRSNOMA_RESULTS_CSV_H
#define IRSNOMA_RESULTS_CSV_H

#include "irsnoma/sim.h"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace irsnoma
{

/// Column order of every results file.
inline constexpr std::array<std::string_view, 12> kCsvColumns{"d_near_m",
                                                              "d_far_m",
                                                              "model",
                                                              "user",
                                                              "gt_db",
                                                              "gr_db",
                                                              "rx_power_dbm_mean",
                                                              "rx_power_dbm_std",
                                                              "sinr_db_mean",
                                                              "sinr_db_std",
                                                              "n_trials",
                                                              "master_seed"};

/// One (sweep point, model, user) row. Power columns are dBm, SINR columns dB.
struct CsvRow
{
    double dNearM{0.0};
    double dFarM{0.0};
    std::string model;
    std::string user;
    double gtDb{0.0};
    double grDb{0.0};
    double rxPowerDbmMean{0.0};
    double rxPowerDbmStd{0.0};
    double sinrDbMean{0.0};
    double sinrDbStd{0.0};
    std::uint64_t nTrials{0};
    std::uint64_t masterSeed{0};
};

/// Flatten sweep records into rows sorted by (d_near_m, model, user).
std::vector<CsvRow> to_rows(const std::vector<SweepRecord>& records, std::uint64_t masterSeed);

/// Header plus rows; numbers use 6 significant digits, zero linear values become -inf.
std::string write_csv(const std::vector<CsvRow>& rows);

/**
 * Parse a results file. Columns are located by header name so partial files
 * (e.g. hand-edited) can still be plotted; a missing required column or a
 * malformed number throws ValidationError.
 */
std::vector<CsvRow> parse_csv(std::string_view text);

/// Header names of a CSV text (first line), split on commas.
std::vector<std::string> csv_header(std::string_view text);

/// printf("%.6g") of v.
std::string format_number(double v);

/// 10 log10(x) (+30 when dbm), or -inf for x == 0.
double to_db_or_neg_inf(double x, bool dbm);

} // namespace irsnoma

#endif // IRSNOMA_RESULTS_CSV_H
