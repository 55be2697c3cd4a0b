/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "irsnoma/plot.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>

namespace irsnoma
{

namespace
{

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 180.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

constexpr std::array<const char*, 6> kColours{"#1f77b4",
                                               "#d62728",
                                               "#2ca02c",
                                               "#ff7f0e",
                                               "#9467bd",
                                               "#8c564b"};

std::string
fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string
axis_label(PlotMetric metric)
{
    return metric == PlotMetric::RxPower ? "Received power (dBm)" : "SINR (dB)";
}

/// Round a span to a 1-2-5 step giving roughly `target` ticks.
double
nice_step(double span, int target)
{
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0})
    {
        if (m * mag >= raw)
        {
            return m * mag;
        }
    }
    return 10.0 * mag;
}

std::string
escape(const std::string& s)
{
    std::string out;
    for (char c : s)
    {
        switch (c)
        {
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '&':
            out += "&amp;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

} // namespace

std::vector<Series>
extract_series(const std::vector<CsvRow>& rows, PlotMetric metric, const std::string& user)
{
    std::map<std::string, Series> byModel;
    for (const auto& r : rows)
    {
        if (r.user != user)
        {
            continue;
        }
        const double v = metric == PlotMetric::RxPower ? r.rxPowerDbmMean : r.sinrDbMean;
        auto& s = byModel[r.model];
        s.model = r.model;
        if (std::isfinite(v) && std::isfinite(r.dNearM))
        {
            s.points.emplace_back(r.dNearM, v);
        }
    }
    std::vector<Series> out;
    for (auto& [name, s] : byModel)
    {
        std::sort(s.points.begin(), s.points.end());
        out.push_back(std::move(s));
    }
    return out;
}

std::string
render_svg(const std::vector<Series>& series, PlotMetric metric, const std::string& user)
{
    double xmin = std::numeric_limits<double>::infinity();
    double xmax = -xmin;
    double ymin = xmin;
    double ymax = -xmin;
    for (const auto& s : series)
    {
        for (auto [x, y] : s.points)
        {
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    }
    if (!std::isfinite(xmin))
    {
        xmin = 0.0;
        xmax = 1.0;
        ymin = 0.0;
        ymax = 1.0;
    }
    if (xmax == xmin)
    {
        xmin -= 1.0;
        xmax += 1.0;
    }
    if (ymax == ymin)
    {
        ymin -= 1.0;
        ymax += 1.0;
    }
    const double yStep = nice_step(ymax - ymin, 6);
    ymin = std::floor(ymin / yStep) * yStep;
    ymax = std::ceil(ymax / yStep) * yStep;
    const double xStep = nice_step(xmax - xmin, 8);

    const double plotW = kWidth - kLeft - kRight;
    const double plotH = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plotW; };
    auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * plotH; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) + "\" height=\"" +
           fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) + " " + fmt(kHeight) +
           "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + fmt(kLeft + plotW / 2) + "\" y=\"24\" text-anchor=\"middle\" " +
           "font-size=\"14\">" + escape(axis_label(metric)) + " at " + escape(user) + "</text>\n";

    // grid and ticks
    for (double y = ymin; y <= ymax + yStep * 1e-9; y += yStep)
    {
        svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(py(y)) + "\" x2=\"" +
               fmt(kLeft + plotW) + "\" y2=\"" + fmt(py(y)) +
               "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + fmt(kLeft - 6) + "\" y=\"" + fmt(py(y) + 4) +
               "\" text-anchor=\"end\">" + format_number(y) + "</text>\n";
    }
    for (double x = std::ceil(xmin / xStep) * xStep; x <= xmax + xStep * 1e-9; x += xStep)
    {
        svg += "<line x1=\"" + fmt(px(x)) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" + fmt(px(x)) +
               "\" y2=\"" + fmt(kTop + plotH) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + fmt(px(x)) + "\" y=\"" + fmt(kTop + plotH + 18) +
               "\" text-anchor=\"middle\">" + format_number(x) + "</text>\n";
    }
    svg += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" + fmt(plotW) +
           "\" height=\"" + fmt(plotH) + "\" fill=\"none\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt(kLeft + plotW / 2) + "\" y=\"" + fmt(kHeight - 16) +
           "\" text-anchor=\"middle\">Near-user IRS distance (m)</text>\n";
    svg += "<text transform=\"translate(20," + fmt(kTop + plotH / 2) +
           ") rotate(-90)\" text-anchor=\"middle\">" + escape(axis_label(metric)) + "</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i)
    {
        const auto& s = series[i];
        const char* colour = kColours[i % kColours.size()];
        std::string pts;
        for (auto [x, y] : s.points)
        {
            pts += (pts.empty() ? "" : " ") + fmt(px(x)) + "," + fmt(py(y));
        }
        if (!pts.empty())
        {
            svg += "<polyline fill=\"none\" stroke=\"" + std::string(colour) +
                   "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
            for (auto [x, y] : s.points)
            {
                svg += "<circle cx=\"" + fmt(px(x)) + "\" cy=\"" + fmt(py(y)) + "\" r=\"3\" fill=\"" +
                       colour + "\"/>\n";
            }
        }
        const double ly = kTop + 16.0 + 20.0 * static_cast<double>(i);
        const double lx = kLeft + plotW + 12.0;
        svg += "<line x1=\"" + fmt(lx) + "\" y1=\"" + fmt(ly) + "\" x2=\"" + fmt(lx + 24) +
               "\" y2=\"" + fmt(ly) + "\" stroke=\"" + colour + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + fmt(lx + 30) + "\" y=\"" + fmt(ly + 4) + "\">" + escape(s.model) +
               "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string
render_dat(const std::vector<Series>& series, PlotMetric metric, const std::string& user)
{
    std::string out = "# " + axis_label(metric) + " at " + user + "\n";
    for (const auto& s : series)
    {
        out += "\n# model " + s.model + "\n# d_near_m value\n";
        for (auto [x, y] : s.points)
        {
            out += format_number(x) + " " + format_number(y) + "\n";
        }
        out += "\n";
    }
    return out;
}

} // namespace irsnoma
