/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "irsnoma/commands.h"
#include "irsnoma/config.h"
#include "irsnoma/results_csv.h"
#include "oracles.h"

#include <json.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace irsnoma;
namespace fs = std::filesystem;

namespace
{

fs::path
tmp_dir()
{
    fs::path dir = fs::path(IRSNOMA_TEST_TMPDIR) / "commands";
    fs::create_directories(dir);
    return dir;
}

fs::path
write_text(const std::string& name, const std::string& text)
{
    const fs::path p = tmp_dir() / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
}

std::string
read_text(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

RunOptions
small_run()
{
    RunOptions o;
    o.configPath = write_text("small.json", R"({"trials": 100, "sweep": {"points": 3}})");
    o.workers = 2;
    return o;
}

} // namespace

TEST_CASE("sweep writes two models per point per user")
{
    std::ostringstream out, err;
    const fs::path csv = tmp_dir() / "sweep.csv";
    REQUIRE(cmd_sweep(small_run(), csv, out, err) == kExitOk);
    const auto rows = parse_csv(read_text(csv));
    CHECK(rows.size() == 3 * 2 * 2);
    for (const auto& r : rows)
    {
        CHECK(r.model != "conventional_enhanced");
    }
}

TEST_CASE("sweep is byte-identical across runs and worker counts")
{
    std::ostringstream out, err;
    RunOptions a = small_run();
    RunOptions b = small_run();
    b.workers = 5;
    REQUIRE(cmd_sweep(a, tmp_dir() / "a.csv", out, err) == kExitOk);
    REQUIRE(cmd_sweep(b, tmp_dir() / "b.csv", out, err) == kExitOk);
    CHECK(read_text(tmp_dir() / "a.csv") == read_text(tmp_dir() / "b.csv"));
}

TEST_CASE("seed and trials overrides")
{
    std::ostringstream out, err;
    RunOptions o = small_run();
    o.seed = 7;
    o.trials = 12;
    REQUIRE(cmd_sweep(o, tmp_dir() / "ovr.csv", out, err) == kExitOk);
    const auto rows = parse_csv(read_text(tmp_dir() / "ovr.csv"));
    CHECK(rows.front().masterSeed == 7);
    CHECK(rows.front().nTrials == 12);
}

TEST_CASE("sweep error exit codes")
{
    std::ostringstream out, err;
    RunOptions bad;
    bad.configPath =
        write_text("bad_split.json", R"({"split": {"a1_sq": 0.9, "a2_sq": 0.1}})");
    CHECK(cmd_sweep(bad, tmp_dir() / "x.csv", out, err) == kExitConfig);
    CHECK(err.str().find("power_split") != std::string::npos);

    RunOptions missing;
    missing.configPath = tmp_dir() / "does_not_exist.json";
    CHECK(cmd_sweep(missing, tmp_dir() / "x.csv", out, err) == kExitIo);

    CHECK(cmd_sweep(small_run(), tmp_dir() / "no_such_dir" / "x.csv", out, err) == kExitIo);

    RunOptions infeasible;
    infeasible.configPath =
        write_text("infeasible.json", R"({"trials": 5, "sweep": {"d_near_start": 2}})");
    CHECK(cmd_sweep(infeasible, tmp_dir() / "x.csv", out, err) == kExitDomain);
}

TEST_CASE("compare adds the enhanced model at exactly +20 dB")
{
    std::ostringstream out, err;
    const fs::path csv = tmp_dir() / "compare.csv";
    REQUIRE(cmd_compare(small_run(), csv, out, err) == kExitOk);
    const auto rows = parse_csv(read_text(csv));
    REQUIRE(rows.size() == 3 * 3 * 2);
    for (std::size_t i = 0; i < rows.size(); i += 6)
    {
        for (std::size_t u = 0; u < 2; ++u)
        {
            const auto& conv = rows[i + u];
            const auto& enh = rows[i + 2 + u];
            const auto& mod = rows[i + 4 + u];
            REQUIRE(conv.model == "conventional");
            REQUIRE(enh.model == "conventional_enhanced");
            REQUIRE(mod.model == "modified");
            // 6 significant digits on values around -100 dBm
            CHECK(std::abs(enh.rxPowerDbmMean - conv.rxPowerDbmMean - 20.0) < 2e-3);
            CHECK(mod.rxPowerDbmMean > enh.rxPowerDbmMean);
        }
    }
}

TEST_CASE("show-config prints the defaults")
{
    std::ostringstream out, err;
    RunOptions o;
    o.showConfig = true;
    REQUIRE(cmd_sweep(o, tmp_dir() / "unused.csv", out, err) == kExitOk);
    CHECK(out.str() == scenario_to_json(Scenario{}));

    RunOptions empty;
    empty.configPath = write_text("empty.json", "");
    empty.showConfig = true;
    std::ostringstream out2;
    REQUIRE(cmd_compare(empty, tmp_dir() / "unused.csv", out2, err) == kExitOk);
    CHECK(out2.str() == out.str());
}

TEST_CASE("point prints a structured record")
{
    RunOptions o;
    o.trials = 200;
    std::ostringstream out, err;
    REQUIRE(cmd_point(o, 10.0, out, err) == kExitOk);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc["d_near_m"] == 10.0);
    CHECK(doc["d_bs_irs_m"] == 50.0);
    CHECK(doc["models"].size() == 3);
    bool found = false;
    for (const auto& m : doc["models"])
    {
        if (m["model"] == "modified")
        {
            const double loss = m["users"][0]["path_loss_db"].get<double>();
            CHECK(std::abs(loss - 94.45) < 0.05);
            CHECK(loss == doctest::Approx(oracle::kIrsLoss50m10mDb).epsilon(1e-12));
            found = true;
        }
    }
    CHECK(found);

    std::ostringstream again;
    REQUIRE(cmd_point(o, 10.0, again, err) == kExitOk);
    CHECK(again.str() == out.str());

    std::ostringstream sink;
    CHECK(cmd_point(o, 0.0, sink, err) == kExitConfig);
    CHECK(cmd_point(o, -4.0, sink, err) == kExitConfig);
    CHECK(cmd_point(o, 3.0, sink, err) == kExitDomain);
}

TEST_CASE("plot renders SVG and sidecar")
{
    std::ostringstream out, err;
    const fs::path csv = tmp_dir() / "plot_in.csv";
    REQUIRE(cmd_compare(small_run(), csv, out, err) == kExitOk);

    const fs::path svg = tmp_dir() / "sinr_u2.svg";
    REQUIRE(cmd_plot(csv, svg, PlotMetric::Sinr, "u2", err) == kExitOk);
    const std::string text = read_text(svg);
    CHECK(text.find("<svg") != std::string::npos);
    CHECK(text.find("modified") != std::string::npos);
    CHECK(text.find("conventional_enhanced") != std::string::npos);
    const std::string dat = read_text(dat_sidecar_path(svg));
    CHECK(dat.find("# model modified") != std::string::npos);

    REQUIRE(cmd_plot(csv, tmp_dir() / "rx_u1.svg", PlotMetric::RxPower, "u1", err) == kExitOk);
    CHECK(fs::file_size(tmp_dir() / "rx_u1.svg") > 0);
}

TEST_CASE("plot error paths")
{
    std::ostringstream err;
    const fs::path noSinr =
        write_text("no_sinr.csv", "d_near_m,d_far_m,model,user,gt_db,gr_db,rx_power_dbm_mean,"
                                  "rx_power_dbm_std,sinr_db_std,n_trials,master_seed\n"
                                  "10,20,modified,u1,5,5,-40,-45,1,10,42\n");
    CHECK(cmd_plot(noSinr, tmp_dir() / "p.svg", PlotMetric::Sinr, "u1", err) == kExitConfig);

    const fs::path empty = write_text(
        "empty_body.csv",
        "d_near_m,d_far_m,model,user,gt_db,gr_db,rx_power_dbm_mean,rx_power_dbm_std,"
        "sinr_db_mean,sinr_db_std,n_trials,master_seed\n");
    std::ostringstream err2;
    CHECK(cmd_plot(empty, tmp_dir() / "p.svg", PlotMetric::Sinr, "u1", err2) == kExitConfig);
    CHECK(err2.str().find("no data rows") != std::string::npos);

    CHECK(cmd_plot(tmp_dir() / "absent.csv", tmp_dir() / "p.svg", PlotMetric::Sinr, "u1", err) ==
          kExitIo);
}
