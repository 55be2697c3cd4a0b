/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "irsnoma/config.h"

#include <doctest.h>

using namespace irsnoma;

TEST_CASE("empty document yields the defaults")
{
    for (const char* text : {"", "  \n", "{}"})
    {
        const Scenario scn = parse_scenario(text);
        CHECK(scn.carrierHz == 90e9);
        CHECK(scn.txPowerW == 6.0);
        CHECK(scn.noiseDbm == -94.0);
        CHECK(scn.kElements == 64);
        CHECK(scn.panel.mElems == 64);
        CHECK(scn.panel.nElems == 64);
        CHECK(scn.panel.dx == 0.0038);
        CHECK(scn.panel.reflectionA == 0.9);
        CHECK(scn.angles.thetaTDeg == 45.0);
        CHECK(scn.gainsModified == AntennaGains{5, 5});
        CHECK(scn.gainsConventional == AntennaGains{10, 10});
        CHECK(scn.gainsEnhanced == AntennaGains{20, 20});
        CHECK(scn.masterSeed == 42);
        CHECK(scn.trials == 10000);
        CHECK(scn.phasePolicy == PhasePolicy::CoherentFar);
        CHECK(scn.sinrMode == SinrMode::AsPrinted);
        CHECK(scn.conventionalGainMode == ConventionalGainMode::PerLink);
    }
}

TEST_CASE("keys override defaults")
{
    const Scenario scn = parse_scenario(R"({
        "carrier": 28e9,
        "split": {"a1_sq": 0.3, "a2_sq": 0.7},
        "panel": {"m_elems": 8, "n_elems": 8},
        "layout": {"bs": [0, 0, 25], "bearing_deg": 30},
        "gains_enhanced": {"gt_db": 18},
        "sweep": {"d_near_start": 30, "d_near_stop": 60, "points": 4},
        "master_seed": 18446744073709551615,
        "phase_policy": "random",
        "sinr_mode": "own_channel",
        "conventional_gain_mode": "per_segment",
        "fading": "unit"
    })");
    CHECK(scn.carrierHz == 28e9);
    CHECK(scn.a1Sq == 0.3);
    CHECK(scn.panel.mElems == 8);
    CHECK(scn.panel.dx == 0.0038);
    CHECK(scn.layout.bs.z == 25.0);
    CHECK(scn.layout.bearingDeg == 30.0);
    CHECK(scn.gainsEnhanced.gtDb == 18.0);
    CHECK(scn.gainsEnhanced.grDb == 20.0);
    CHECK(scn.sweep.points == 4);
    CHECK(scn.masterSeed == 18446744073709551615ULL);
    CHECK(scn.phasePolicy == PhasePolicy::Random);
    CHECK(scn.sinrMode == SinrMode::OwnChannel);
    CHECK(scn.conventionalGainMode == ConventionalGainMode::PerSegment);
    CHECK(scn.fading == FadingModel::Unit);
}

TEST_CASE("errors name the offending key")
{
    CHECK_THROWS_WITH_AS(parse_scenario(R"({"bogus": 1})"), doctest::Contains("bogus"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(parse_scenario(R"({"panel": {"m": 1}})"),
                         doctest::Contains("panel.m"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(parse_scenario(R"({"trials": "many"})"),
                         doctest::Contains("trials"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(parse_scenario(R"({"trials": -3})"),
                         doctest::Contains("trials"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(parse_scenario(R"({"k_elements": 1.5})"),
                         doctest::Contains("k_elements"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(parse_scenario(R"({"split": {"a1_sq": 0.9, "a2_sq": 0.1}})"),
                         doctest::Contains("power_split"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(parse_scenario(R"({"phase_policy": "best"})"),
                         doctest::Contains("phase_policy"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(parse_scenario(R"({"layout": {"irs": [1, 2]}})"),
                         doctest::Contains("layout.irs"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(parse_scenario(R"({"angles": {"theta_t": 90}})"),
                         doctest::Contains("theta_t"),
                         ValidationError);
    CHECK_THROWS_AS(parse_scenario("{not json"), ValidationError);
    CHECK_THROWS_AS(parse_scenario("[]"), ValidationError);
}

TEST_CASE("serialized scenario parses back to the same scenario")
{
    Scenario scn;
    scn.carrierHz = 73.5e9;
    scn.layout.irs = {12.25, -3.5, 7.0};
    scn.sweep.points = 7;
    scn.masterSeed = 123456789012345ULL;
    scn.phasePolicy = PhasePolicy::CoherentNear;
    const std::string text = scenario_to_json(scn);
    CHECK(scenario_to_json(parse_scenario(text)) == text);
}

TEST_CASE("load_scenario reports unreadable files")
{
    CHECK_THROWS_AS(load_scenario("/nonexistent/dir/config.json"), IoError);
}
