/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "irsnoma/results_csv.h"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <map>
#include <tuple>

namespace irsnoma
{

std::string
format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double
to_db_or_neg_inf(double x, bool dbm)
{
    if (x == 0.0)
    {
        return -std::numeric_limits<double>::infinity();
    }
    return linear_to_db(x).value + (dbm ? 30.0 : 0.0);
}

std::vector<CsvRow>
to_rows(const std::vector<SweepRecord>& records, std::uint64_t masterSeed)
{
    std::vector<CsvRow> rows;
    for (const auto& rec : records)
    {
        for (const auto& ms : rec.models)
        {
            for (User u : {User::Near, User::Far})
            {
                const auto& us = ms.For(u);
                CsvRow r;
                r.dNearM = rec.dNear;
                r.dFarM = rec.dFar;
                r.model = model_name(ms.model);
                r.user = user_name(u);
                r.gtDb = ms.gains.gtDb;
                r.grDb = ms.gains.grDb;
                r.rxPowerDbmMean = to_db_or_neg_inf(us.rxPowerW.mean, true);
                r.rxPowerDbmStd = to_db_or_neg_inf(us.rxPowerW.stddev, true);
                r.sinrDbMean = to_db_or_neg_inf(us.ratio.mean, false);
                r.sinrDbStd = to_db_or_neg_inf(us.ratio.stddev, false);
                r.nTrials = us.rxPowerW.count;
                r.masterSeed = masterSeed;
                rows.push_back(std::move(r));
            }
        }
    }
    std::stable_sort(rows.begin(), rows.end(), [](const CsvRow& a, const CsvRow& b) {
        return std::tie(a.dNearM, a.model, a.user) < std::tie(b.dNearM, b.model, b.user);
    });
    return rows;
}

std::string
write_csv(const std::vector<CsvRow>& rows)
{
    std::string out;
    for (std::size_t i = 0; i < kCsvColumns.size(); ++i)
    {
        out += i == 0 ? "" : ",";
        out += kCsvColumns[i];
    }
    out += '\n';
    for (const auto& r : rows)
    {
        out += format_number(r.dNearM) + ',' + format_number(r.dFarM) + ',' + r.model + ',' +
               r.user + ',' + format_number(r.gtDb) + ',' + format_number(r.grDb) + ',' +
               format_number(r.rxPowerDbmMean) + ',' + format_number(r.rxPowerDbmStd) + ',' +
               format_number(r.sinrDbMean) + ',' + format_number(r.sinrDbStd) + ',' +
               std::to_string(r.nTrials) + ',' + std::to_string(r.masterSeed) + '\n';
    }
    return out;
}

namespace
{

std::vector<std::string>
split_fields(std::string_view line)
{
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;)
    {
        const std::size_t comma = line.find(',', start);
        fields.emplace_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos)
        {
            break;
        }
        start = comma + 1;
    }
    return fields;
}

std::vector<std::string_view>
split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size())
    {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string_view::npos)
        {
            nl = text.size();
        }
        std::string_view line = text.substr(start, nl - start);
        if (!line.empty() && line.back() == '\r')
        {
            line.remove_suffix(1);
        }
        lines.push_back(line);
        start = nl + 1;
    }
    return lines;
}

double
parse_double(const std::string& s, std::size_t lineNo, std::string_view column)
{
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || std::isnan(v))
    {
        throw ValidationError("line " + std::to_string(lineNo) + ": column " +
                              std::string(column) + " is not a number: '" + s + "'");
    }
    return v;
}

std::uint64_t
parse_uint(const std::string& s, std::size_t lineNo, std::string_view column)
{
    errno = 0;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (s.empty() || s.front() == '-' || end != s.c_str() + s.size() || errno == ERANGE)
    {
        throw ValidationError("line " + std::to_string(lineNo) + ": column " +
                              std::string(column) + " is not an unsigned integer: '" + s + "'");
    }
    return v;
}

} // namespace

std::vector<std::string>
csv_header(std::string_view text)
{
    const auto lines = split_lines(text);
    if (lines.empty())
    {
        return {};
    }
    return split_fields(lines.front());
}

std::vector<CsvRow>
parse_csv(std::string_view text)
{
    const auto lines = split_lines(text);
    if (lines.empty() || lines.front().empty())
    {
        throw ValidationError("missing CSV header");
    }
    const auto header = split_fields(lines.front());
    std::map<std::string, std::size_t, std::less<>> index;
    for (std::size_t i = 0; i < header.size(); ++i)
    {
        index.emplace(header[i], i);
    }
    for (auto col : kCsvColumns)
    {
        if (index.find(col) == index.end())
        {
            throw ValidationError("CSV is missing column " + std::string(col));
        }
    }

    std::vector<CsvRow> rows;
    for (std::size_t ln = 1; ln < lines.size(); ++ln)
    {
        if (lines[ln].empty())
        {
            continue;
        }
        const auto f = split_fields(lines[ln]);
        if (f.size() != header.size())
        {
            throw ValidationError("line " + std::to_string(ln + 1) + ": expected " +
                                  std::to_string(header.size()) + " fields, got " +
                                  std::to_string(f.size()));
        }
        auto get = [&](std::string_view col) -> const std::string& {
            return f[index.find(col)->second];
        };
        auto num = [&](std::string_view col) { return parse_double(get(col), ln + 1, col); };

        CsvRow r;
        r.dNearM = num("d_near_m");
        r.dFarM = num("d_far_m");
        r.model = get("model");
        r.user = get("user");
        r.gtDb = num("gt_db");
        r.grDb = num("gr_db");
        r.rxPowerDbmMean = num("rx_power_dbm_mean");
        r.rxPowerDbmStd = num("rx_power_dbm_std");
        r.sinrDbMean = num("sinr_db_mean");
        r.sinrDbStd = num("sinr_db_std");
        r.nTrials = parse_uint(get("n_trials"), ln + 1, "n_trials");
        r.masterSeed = parse_uint(get("master_seed"), ln + 1, "master_seed");
        rows.push_back(std::move(r));
    }
    if (rows.empty())
    {
        throw ValidationError("no data rows");
    }
    return rows;
}

} // namespace irsnoma
