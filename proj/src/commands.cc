/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "irsnoma/commands.h"

#include "irsnoma/config.h"
#include "irsnoma/results_csv.h"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

namespace irsnoma
{

namespace
{

/// Run body and translate the error taxonomy into exit codes.
int
guarded(std::ostream& err, const std::function<int()>& body)
{
    try
    {
        return body();
    }
    catch (const ValidationError& e)
    {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    catch (const IoError& e)
    {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    }
    catch (const DomainError& e)
    {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

void
write_file(const std::filesystem::path& path, const std::string& contents)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f)
    {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    f << contents;
    f.close();
    if (!f)
    {
        throw IoError("error while writing " + path.string());
    }
}

std::string
read_file(const std::filesystem::path& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
    {
        throw IoError("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

/// Non-fatal geometry diagnostics for every sweep point.
void
warn_geometry(const Scenario& scn, std::ostream& err)
{
    bool farField = false;
    bool outside = false;
    for (std::size_t p = 0; p < scn.sweep.points; ++p)
    {
        Layout lay;
        try
        {
            lay = scn.LayoutAt(p);
        }
        catch (const DomainError&)
        {
            continue; // reported by the sweep itself
        }
        farField = farField || distance(lay.bs, lay.irs) < 1.0 || distance(lay.irs, lay.u1) < 1.0;
        outside = outside || !inside_cell(lay.u1, lay.cellSide) ||
                  !inside_cell(lay.u2, lay.cellSide);
    }
    if (farField)
    {
        err << "warning: a link distance is below 1 m; far-field path loss may be inaccurate\n";
    }
    if (outside)
    {
        err << "warning: some user positions fall outside the " << scn.layout.cellSide << " m cell\n";
    }
}

int
run_and_write(const RunOptions& opts,
              const std::filesystem::path& outPath,
              bool withEnhanced,
              std::ostream& out,
              std::ostream& err)
{
    return guarded(err, [&] {
        const Scenario scn = resolve_scenario(opts);
        if (opts.showConfig)
        {
            out << scenario_to_json(scn);
            return static_cast<int>(kExitOk);
        }
        warn_geometry(scn, err);
        const auto records =
            withEnhanced ? compare_models(scn, opts.workers) : run_sweep(scn, opts.workers);
        write_file(outPath, write_csv(to_rows(records, scn.masterSeed)));
        return static_cast<int>(kExitOk);
    });
}

} // namespace

Scenario
resolve_scenario(const RunOptions& opts)
{
    Scenario scn = opts.configPath ? load_scenario(*opts.configPath) : Scenario{};
    if (opts.seed)
    {
        scn.masterSeed = *opts.seed;
    }
    if (opts.trials)
    {
        scn.trials = *opts.trials;
    }
    scn.Validate();
    return scn;
}

int
cmd_sweep(const RunOptions& opts,
          const std::filesystem::path& outPath,
          std::ostream& out,
          std::ostream& err)
{
    return run_and_write(opts, outPath, false, out, err);
}

int
cmd_compare(const RunOptions& opts,
            const std::filesystem::path& outPath,
            std::ostream& out,
            std::ostream& err)
{
    return run_and_write(opts, outPath, true, out, err);
}

std::filesystem::path
dat_sidecar_path(const std::filesystem::path& plotPath)
{
    auto p = plotPath;
    p.replace_extension(".dat");
    return p;
}

int
cmd_plot(const std::filesystem::path& inCsv,
         const std::filesystem::path& outPath,
         PlotMetric metric,
         const std::string& user,
         std::ostream& err)
{
    return guarded(err, [&] {
        if (user != "u1" && user != "u2")
        {
            throw ValidationError("user must be u1 or u2");
        }
        const auto rows = parse_csv(read_file(inCsv));
        const auto series = extract_series(rows, metric, user);
        bool any = false;
        for (const auto& s : series)
        {
            any = any || !s.points.empty();
        }
        if (!any)
        {
            throw ValidationError("no plottable data rows for user " + user);
        }
        write_file(outPath, render_svg(series, metric, user));
        write_file(dat_sidecar_path(outPath), render_dat(series, metric, user));
        return static_cast<int>(kExitOk);
    });
}

int
cmd_point(const RunOptions& opts, double dNear, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        Scenario scn = resolve_scenario(opts);
        if (!(dNear > 0.0) || !std::isfinite(dNear))
        {
            throw ValidationError("d_near: must be > 0 m");
        }
        scn.sweep.dNearStart = dNear;
        scn.sweep.dNearStop = dNear;
        scn.sweep.points = 1;
        if (opts.showConfig)
        {
            out << scenario_to_json(scn);
            return static_cast<int>(kExitOk);
        }
        warn_geometry(scn, err);

        const auto records = compare_models(scn, opts.workers);
        const SweepRecord& rec = records.front();
        const Layout lay = scn.LayoutAt(0);
        const double d1 = distance(lay.bs, lay.irs);
        const std::array<double, 2> d2{distance(lay.irs, lay.u1), distance(lay.irs, lay.u2)};
        const Frequency f(scn.carrierHz);

        using nlohmann::json;
        json doc;
        doc["d_near_m"] = rec.dNear;
        doc["d_far_m"] = rec.dFar;
        doc["d_bs_irs_m"] = d1;
        doc["n_trials"] = scn.trials;
        doc["master_seed"] = scn.masterSeed;
        doc["mean_cascaded_power"] = {{"u1", rec.cascadedPower[0].mean},
                                      {"u2", rec.cascadedPower[1].mean}};
        json models = json::array();
        for (const auto& ms : rec.models)
        {
            json m;
            m["model"] = model_name(ms.model);
            m["gt_db"] = ms.gains.gtDb;
            m["gr_db"] = ms.gains.grDb;
            json users = json::array();
            for (User u : {User::Near, User::Far})
            {
                const auto ui = static_cast<std::size_t>(u);
                const double lossDb =
                    ms.model == Model::Modified
                        ? linear_to_db(irs_pathloss_linear(d1, d2[ui], scn.panel, scn.angles,
                                                           ms.gains, f))
                              .value
                        : conventional_link_db(d1, d2[ui], ms.gains, scn.conventionalGainMode)
                              .value;
                const auto& us = ms.For(u);
                json j;
                j["user"] = user_name(u);
                j["path_loss_db"] = lossDb;
                j["rx_power_w_mean"] = us.rxPowerW.mean;
                j["rx_power_w_std"] = us.rxPowerW.stddev;
                j["rx_power_dbm_mean"] = to_db_or_neg_inf(us.rxPowerW.mean, true);
                j["sinr_mean"] = us.ratio.mean;
                j["sinr_std"] = us.ratio.stddev;
                j["sinr_db_mean"] = to_db_or_neg_inf(us.ratio.mean, false);
                j["metric"] = u == User::Near ? "snr_after_sic" : "sinr";
                users.push_back(std::move(j));
            }
            m["users"] = std::move(users);
            models.push_back(std::move(m));
        }
        doc["models"] = std::move(models);
        out << doc.dump(2) << "\n";
        return static_cast<int>(kExitOk);
    });
}

} // namespace irsnoma
