/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "irsnoma/config.h"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <optional>
#include <sstream>

namespace irsnoma
{

using nlohmann::json;

namespace
{

/// Walks a JSON object, rejecting unknown keys and reporting full key paths.
class Reader
{
  public:
    Reader(const json& node, std::string path)
        : m_node(node),
          m_path(std::move(path))
    {
        if (!m_node.is_object())
        {
            Fail(m_path.empty() ? "config" : m_path, "must be an object");
        }
    }

    void Allow(std::initializer_list<const char*> keys) const
    {
        for (const auto& item : m_node.items())
        {
            const bool known = std::any_of(keys.begin(), keys.end(), [&](const char* k) {
                return item.key() == k;
            });
            if (!known)
            {
                Fail(Key(item.key()), "unknown key");
            }
        }
    }

    void Number(const char* key, double& out) const
    {
        if (const json* v = Find(key))
        {
            if (!v->is_number())
            {
                Fail(Key(key), "must be a number");
            }
            out = v->get<double>();
        }
    }

    template <typename T>
    void Integer(const char* key, T& out) const
    {
        if (const json* v = Find(key))
        {
            if (!v->is_number_integer())
            {
                Fail(Key(key), "must be an integer");
            }
            if (v->is_number_unsigned())
            {
                const auto u = v->get<std::uint64_t>();
                if (u > std::numeric_limits<T>::max())
                {
                    Fail(Key(key), "is out of range");
                }
                out = static_cast<T>(u);
                return;
            }
            const auto s = v->get<std::int64_t>();
            if (s < 0)
            {
                Fail(Key(key), "must be non-negative");
            }
            if (static_cast<std::uint64_t>(s) > std::numeric_limits<T>::max())
            {
                Fail(Key(key), "is out of range");
            }
            out = static_cast<T>(s);
        }
    }

    template <typename E>
    void Enum(const char* key, E& out, std::initializer_list<std::pair<const char*, E>> names) const
    {
        if (const json* v = Find(key))
        {
            if (v->is_string())
            {
                const auto s = v->get<std::string>();
                for (const auto& [name, value] : names)
                {
                    if (s == name)
                    {
                        out = value;
                        return;
                    }
                }
            }
            std::string allowed;
            for (const auto& [name, value] : names)
            {
                allowed += allowed.empty() ? name : std::string(", ") + name;
            }
            Fail(Key(key), "must be one of: " + allowed);
        }
    }

    void Point(const char* key, Position& out) const
    {
        if (const json* v = Find(key))
        {
            if (!v->is_array() || v->size() != 3 ||
                !std::all_of(v->begin(), v->end(), [](const json& e) { return e.is_number(); }))
            {
                Fail(Key(key), "must be an array of three numbers [x, y, z]");
            }
            out = Position{(*v)[0].get<double>(), (*v)[1].get<double>(), (*v)[2].get<double>()};
        }
    }

    /// Reader for a nested object, or nullopt when the key is absent.
    std::optional<Reader> Child(const char* key) const
    {
        if (const json* v = Find(key))
        {
            return Reader(*v, Key(key));
        }
        return std::nullopt;
    }

    [[noreturn]] static void Fail(const std::string& key, const std::string& msg)
    {
        throw ValidationError(key + ": " + msg);
    }

  private:
    const json* Find(const char* key) const
    {
        auto it = m_node.find(key);
        return it == m_node.end() ? nullptr : &*it;
    }

    std::string Key(const std::string& k) const
    {
        return m_path.empty() ? k : m_path + "." + k;
    }

    const json& m_node;
    std::string m_path;
};

void
read_gains(const Reader& root, const char* key, AntennaGains& g)
{
    if (auto r = root.Child(key))
    {
        r->Allow({"gt_db", "gr_db"});
        r->Number("gt_db", g.gtDb);
        r->Number("gr_db", g.grDb);
    }
}

json
gains_json(const AntennaGains& g)
{
    return json{{"gt_db", g.gtDb}, {"gr_db", g.grDb}};
}

json
point_json(const Position& p)
{
    return json::array({p.x, p.y, p.z});
}

const char*
phase_policy_name(PhasePolicy p)
{
    switch (p)
    {
    case PhasePolicy::CoherentNear:
        return "coherent_near";
    case PhasePolicy::Random:
        return "random";
    case PhasePolicy::CoherentFar:
    default:
        return "coherent_far";
    }
}

} // namespace

Scenario
parse_scenario(std::string_view text)
{
    Scenario scn;
    if (std::all_of(text.begin(), text.end(), [](char c) {
            return c == ' ' || c == '\t' || c == '\n' || c == '\r';
        }))
    {
        return scn;
    }

    json doc;
    try
    {
        doc = json::parse(text);
    }
    catch (const json::parse_error& e)
    {
        throw ValidationError(std::string("config: malformed JSON: ") + e.what());
    }

    const Reader root(doc, "");
    root.Allow({"carrier",
                "tx_power",
                "noise_dbm",
                "split",
                "panel",
                "k_elements",
                "angles",
                "layout",
                "gains_modified",
                "gains_conventional",
                "gains_enhanced",
                "sweep",
                "trials",
                "master_seed",
                "phase_policy",
                "sinr_mode",
                "conventional_gain_mode",
                "fading"});

    root.Number("carrier", scn.carrierHz);
    root.Number("tx_power", scn.txPowerW);
    root.Number("noise_dbm", scn.noiseDbm);
    if (auto r = root.Child("split"))
    {
        r->Allow({"a1_sq", "a2_sq"});
        r->Number("a1_sq", scn.a1Sq);
        r->Number("a2_sq", scn.a2Sq);
    }
    if (auto r = root.Child("panel"))
    {
        r->Allow({"m_elems", "n_elems", "dx", "dy", "reflection_a"});
        r->Integer("m_elems", scn.panel.mElems);
        r->Integer("n_elems", scn.panel.nElems);
        r->Number("dx", scn.panel.dx);
        r->Number("dy", scn.panel.dy);
        r->Number("reflection_a", scn.panel.reflectionA);
    }
    root.Integer("k_elements", scn.kElements);
    if (auto r = root.Child("angles"))
    {
        r->Allow({"theta_t", "theta_r"});
        r->Number("theta_t", scn.angles.thetaTDeg);
        r->Number("theta_r", scn.angles.thetaRDeg);
    }
    if (auto r = root.Child("layout"))
    {
        r->Allow({"bs", "irs", "bearing_deg", "user_height", "cell_side"});
        r->Point("bs", scn.layout.bs);
        r->Point("irs", scn.layout.irs);
        r->Number("bearing_deg", scn.layout.bearingDeg);
        r->Number("user_height", scn.layout.userHeight);
        r->Number("cell_side", scn.layout.cellSide);
    }
    read_gains(root, "gains_modified", scn.gainsModified);
    read_gains(root, "gains_conventional", scn.gainsConventional);
    read_gains(root, "gains_enhanced", scn.gainsEnhanced);
    if (auto r = root.Child("sweep"))
    {
        r->Allow({"d_near_start", "d_near_stop", "points"});
        r->Number("d_near_start", scn.sweep.dNearStart);
        r->Number("d_near_stop", scn.sweep.dNearStop);
        r->Integer("points", scn.sweep.points);
    }
    root.Integer("trials", scn.trials);
    root.Integer("master_seed", scn.masterSeed);
    root.Enum("phase_policy",
              scn.phasePolicy,
              {{"coherent_far", PhasePolicy::CoherentFar},
               {"coherent_near", PhasePolicy::CoherentNear},
               {"random", PhasePolicy::Random}});
    root.Enum("sinr_mode",
              scn.sinrMode,
              {{"as_printed", SinrMode::AsPrinted}, {"own_channel", SinrMode::OwnChannel}});
    root.Enum("conventional_gain_mode",
              scn.conventionalGainMode,
              {{"per_link", ConventionalGainMode::PerLink},
               {"per_segment", ConventionalGainMode::PerSegment}});
    root.Enum("fading",
              scn.fading,
              {{"rayleigh_unit", FadingModel::RayleighUnit}, {"unit", FadingModel::Unit}});

    scn.Validate();
    return scn;
}

Scenario
load_scenario(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
    {
        throw IoError("cannot read config file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
    {
        throw IoError("error while reading config file " + path.string());
    }
    return parse_scenario(buf.str());
}

std::string
scenario_to_json(const Scenario& scn)
{
    json doc = json::object();
    doc["carrier"] = scn.carrierHz;
    doc["tx_power"] = scn.txPowerW;
    doc["noise_dbm"] = scn.noiseDbm;
    doc["split"] = {{"a1_sq", scn.a1Sq}, {"a2_sq", scn.a2Sq}};
    doc["panel"] = {{"m_elems", scn.panel.mElems},
                    {"n_elems", scn.panel.nElems},
                    {"dx", scn.panel.dx},
                    {"dy", scn.panel.dy},
                    {"reflection_a", scn.panel.reflectionA}};
    doc["k_elements"] = scn.kElements;
    doc["angles"] = {{"theta_t", scn.angles.thetaTDeg}, {"theta_r", scn.angles.thetaRDeg}};
    doc["layout"] = {{"bs", point_json(scn.layout.bs)},
                     {"irs", point_json(scn.layout.irs)},
                     {"bearing_deg", scn.layout.bearingDeg},
                     {"user_height", scn.layout.userHeight},
                     {"cell_side", scn.layout.cellSide}};
    doc["gains_modified"] = gains_json(scn.gainsModified);
    doc["gains_conventional"] = gains_json(scn.gainsConventional);
    doc["gains_enhanced"] = gains_json(scn.gainsEnhanced);
    doc["sweep"] = {{"d_near_start", scn.sweep.dNearStart},
                    {"d_near_stop", scn.sweep.dNearStop},
                    {"points", scn.sweep.points}};
    doc["trials"] = scn.trials;
    doc["master_seed"] = scn.masterSeed;
    doc["phase_policy"] = phase_policy_name(scn.phasePolicy);
    doc["sinr_mode"] = scn.sinrMode == SinrMode::AsPrinted ? "as_printed" : "own_channel";
    doc["conventional_gain_mode"] =
        scn.conventionalGainMode == ConventionalGainMode::PerLink ? "per_link" : "per_segment";
    doc["fading"] = scn.fading == FadingModel::Unit ? "unit" : "rayleigh_unit";
    return doc.dump(2) + "\n";
}

} // namespace irsnoma
