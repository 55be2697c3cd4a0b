/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef IRSNOMA_PLOT_H
#define IRSNOMA_PLOT_H

#include "irsnoma/results_csv.h"

#include <string>
#include <vector>

namespace irsnoma
{

enum class PlotMetric
{
    RxPower,
    Sinr,
};

/// One line of a chart: (d_near, value) pairs of a single model.
struct Series
{
    std::string model;
    std::vector<std::pair<double, double>> points;
};

/// Rows of one user, grouped per model and ordered by d_near. Non-finite values are dropped.
std::vector<Series> extract_series(const std::vector<CsvRow>& rows,
                                   PlotMetric metric,
                                   const std::string& user);

/// Self-contained SVG line chart.
std::string render_svg(const std::vector<Series>& series, PlotMetric metric, const std::string& user);

/// Whitespace-separated text table, one block per model (gnuplot "index" friendly).
std::string render_dat(const std::vector<Series>& series, PlotMetric metric, const std::string& user);

} // namespace irsnoma

#endif // IRSNOMA_PLOT_H
