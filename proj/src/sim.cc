/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "irsnoma/sim.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace irsnoma
{

std::string
model_name(Model m)
{
    switch (m)
    {
    case Model::Conventional:
        return "conventional";
    case Model::ConventionalEnhanced:
        return "conventional_enhanced";
    case Model::Modified:
        return "modified";
    }
    return "unknown";
}

std::string
user_name(User u)
{
    return u == User::Near ? "u1" : "u2";
}

double
SweepParams::DNear(std::size_t i) const
{
    if (points <= 1)
    {
        return dNearStart;
    }
    const double step = (dNearStop - dNearStart) / static_cast<double>(points - 1);
    return dNearStart + step * static_cast<double>(i);
}

namespace
{

void
check_position(const Position& p, const std::string& key)
{
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
    {
        throw ValidationError(key + " coordinates must be finite");
    }
}

void
check_gains(const AntennaGains& g, const std::string& key)
{
    if (!std::isfinite(g.gtDb) || !std::isfinite(g.grDb))
    {
        throw ValidationError(key + " must be finite dB values");
    }
}

} // namespace

void
Scenario::Validate() const
{
    if (!std::isfinite(carrierHz) || carrierHz <= 0.0)
    {
        throw ValidationError("carrier must be > 0 Hz");
    }
    if (!std::isfinite(txPowerW) || txPowerW < 0.0)
    {
        throw ValidationError("tx_power must be >= 0 W");
    }
    if (!std::isfinite(noiseDbm))
    {
        throw ValidationError("noise_dbm must be finite");
    }
    validate_split(a1Sq, a2Sq);
    panel.Validate();
    if (kElements < 1)
    {
        throw ValidationError("k_elements must be >= 1");
    }
    angles.Validate();
    check_position(layout.bs, "layout.bs");
    check_position(layout.irs, "layout.irs");
    if (layout.bs == layout.irs)
    {
        throw ValidationError("layout.bs and layout.irs must differ");
    }
    if (!std::isfinite(layout.bearingDeg))
    {
        throw ValidationError("layout.bearing_deg must be finite");
    }
    if (!std::isfinite(layout.userHeight))
    {
        throw ValidationError("layout.user_height must be finite");
    }
    if (!std::isfinite(layout.cellSide) || layout.cellSide <= 0.0)
    {
        throw ValidationError("layout.cell_side must be > 0");
    }
    check_gains(gainsModified, "gains_modified");
    check_gains(gainsConventional, "gains_conventional");
    check_gains(gainsEnhanced, "gains_enhanced");
    if (!std::isfinite(sweep.dNearStart) || sweep.dNearStart <= 0.0)
    {
        throw ValidationError("sweep.d_near_start must be > 0");
    }
    if (!std::isfinite(sweep.dNearStop) || sweep.dNearStop < sweep.dNearStart)
    {
        throw ValidationError("sweep.d_near_stop must be >= sweep.d_near_start");
    }
    if (sweep.points < 1)
    {
        throw ValidationError("sweep.points must be >= 1");
    }
    if (trials < 1)
    {
        throw ValidationError("trials must be >= 1");
    }
}

const AntennaGains&
Scenario::GainsFor(Model m) const
{
    switch (m)
    {
    case Model::Conventional:
        return gainsConventional;
    case Model::ConventionalEnhanced:
        return gainsEnhanced;
    case Model::Modified:
        return gainsModified;
    }
    return gainsModified;
}

Layout
Scenario::LayoutAt(std::size_t pointIndex) const
{
    auto [u1, u2] =
        place_users(layout.irs, layout.bearingDeg, sweep.DNear(pointIndex), layout.userHeight);
    return Layout{layout.bs, layout.irs, u1, u2, layout.cellSide};
}

const ModelStats&
SweepRecord::For(Model m) const
{
    auto it = std::find_if(models.begin(), models.end(), [m](const ModelStats& s) {
        return s.model == m;
    });
    if (it == models.end())
    {
        throw ValidationError("sweep record has no " + model_name(m) + " entry");
    }
    return *it;
}

SweepPointError::SweepPointError(std::size_t pointIndex, const std::string& what)
    : InfeasibleGeometryError("sweep point " + std::to_string(pointIndex) + ": " + what),
      m_point(pointIndex)
{
}

namespace
{

/// Trial-invariant quantities of one sweep point.
struct PointContext
{
    double d1{0.0};
    double dNear{0.0};
    double dFar{0.0};
    std::array<std::array<double, 2>, 3> loss{}; // [model][user], linear
};

PointContext
make_context(const Scenario& scn, std::size_t pointIndex)
{
    const Layout lay = scn.LayoutAt(pointIndex);
    PointContext ctx;
    ctx.d1 = distance(lay.bs, lay.irs);
    ctx.dNear = distance(lay.irs, lay.u1);
    ctx.dFar = distance(lay.irs, lay.u2);

    const Frequency f(scn.carrierHz);
    const std::array<double, 2> d2{ctx.dNear, ctx.dFar};
    for (Model m : kAllModels)
    {
        const auto mi = static_cast<std::size_t>(m);
        for (std::size_t u = 0; u < 2; ++u)
        {
            if (m == Model::Modified)
            {
                ctx.loss[mi][u] = irs_pathloss_linear(ctx.d1,
                                                      d2[u],
                                                      scn.panel,
                                                      scn.angles,
                                                      scn.GainsFor(m),
                                                      f);
            }
            else
            {
                ctx.loss[mi][u] = db_to_linear(
                    conventional_link_db(ctx.d1, d2[u], scn.GainsFor(m), scn.conventionalGainMode));
            }
        }
    }
    return ctx;
}

TrialMetrics
evaluate_trial(const Scenario& scn,
               const PointContext& ctx,
               const PowerSplit& split,
               std::size_t pointIndex,
               std::size_t trialIndex)
{
    auto stream = [&](HopTag tag) {
        return Substream(SubstreamId{scn.masterSeed, pointIndex, trialIndex, tag});
    };
    const std::size_t k = scn.kElements;

    auto s0 = stream(HopTag::BsToIrs);
    auto s1 = stream(HopTag::IrsToNear);
    auto s2 = stream(HopTag::IrsToFar);
    const FadingVector g0 = sample_fading(s0, k, scn.fading);
    const FadingVector g1 = sample_fading(s1, k, scn.fading);
    const FadingVector g2 = sample_fading(s2, k, scn.fading);

    const PhaseConfig theta = [&] {
        switch (scn.phasePolicy)
        {
        case PhasePolicy::CoherentNear:
            return coherent_phases(g1, g0);
        case PhasePolicy::Random: {
            auto sp = stream(HopTag::Phases);
            return random_phases(sp, k);
        }
        case PhasePolicy::CoherentFar:
        default:
            return coherent_phases(g2, g0);
        }
    }();

    const Complex h1 = cascaded_gain(g1, theta, g0);
    const Complex h2 = cascaded_gain(g2, theta, g0);

    TrialMetrics out;
    out.h1Power = std::norm(h1);
    out.h2Power = std::norm(h2);

    const PowerWatts rho(scn.txPowerW);
    const PowerWatts noise = dbm_to_watts(Dbm{scn.noiseDbm});
    for (Model m : kAllModels)
    {
        const auto mi = static_cast<std::size_t>(m);
        LinkState link{h1, h2, ctx.loss[mi][0], ctx.loss[mi][1], rho, noise};
        auto& near = out.values[mi][static_cast<std::size_t>(User::Near)];
        auto& far = out.values[mi][static_cast<std::size_t>(User::Far)];
        near.rxPowerW = received_power_w(link, User::Near).Watts();
        near.ratio = snr_near(link, split);
        far.rxPowerW = received_power_w(link, User::Far).Watts();
        far.ratio = sinr_far(link, split, scn.sinrMode);
    }
    return out;
}

} // namespace

TrialMetrics
run_trial(const Scenario& scn, std::size_t pointIndex, std::size_t trialIndex)
{
    scn.Validate();
    if (pointIndex >= scn.sweep.points || trialIndex >= scn.trials)
    {
        throw ValidationError("run_trial: point or trial index out of range");
    }
    const PowerSplit split = validate_split(scn.a1Sq, scn.a2Sq);
    return evaluate_trial(scn, make_context(scn, pointIndex), split, pointIndex, trialIndex);
}

Stat
summarize(std::span<const double> xs)
{
    Stat s;
    s.count = xs.size();
    if (xs.empty())
    {
        return s;
    }
    double sum = 0.0;
    for (double x : xs)
    {
        sum += x;
    }
    s.mean = sum / static_cast<double>(xs.size());
    double sq = 0.0;
    for (double x : xs)
    {
        sq += (x - s.mean) * (x - s.mean);
    }
    s.stddev = std::sqrt(sq / static_cast<double>(xs.size()));
    return s;
}

std::vector<SweepRecord>
run_sweep(const Scenario& scn, std::span<const Model> models, unsigned workers)
{
    scn.Validate();
    const PowerSplit split = validate_split(scn.a1Sq, scn.a2Sq);
    const std::size_t points = scn.sweep.points;
    const std::size_t trials = scn.trials;

    std::vector<PointContext> contexts;
    contexts.reserve(points);
    for (std::size_t p = 0; p < points; ++p)
    {
        try
        {
            contexts.push_back(make_context(scn, p));
        }
        catch (const DomainError& e)
        {
            throw SweepPointError(p, e.what());
        }
    }

    if (workers == 0)
    {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    const std::size_t total = points * trials;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));

    std::vector<TrialMetrics> results(total);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failureMutex;
    constexpr std::size_t kChunk = 256;

    auto work = [&] {
        try
        {
            for (;;)
            {
                const std::size_t begin = next.fetch_add(kChunk);
                if (begin >= total)
                {
                    return;
                }
                const std::size_t end = std::min(total, begin + kChunk);
                for (std::size_t i = begin; i < end; ++i)
                {
                    const std::size_t p = i / trials;
                    results[i] = evaluate_trial(scn, contexts[p], split, p, i % trials);
                }
            }
        }
        catch (...)
        {
            std::lock_guard lock(failureMutex);
            if (!failure)
            {
                failure = std::current_exception();
            }
            next.store(total);
        }
    };

    if (workers <= 1)
    {
        work();
    }
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
        {
            pool.emplace_back(work);
        }
    }
    if (failure)
    {
        std::rethrow_exception(failure);
    }

    std::vector<SweepRecord> records;
    records.reserve(points);
    std::vector<double> buf(trials);
    for (std::size_t p = 0; p < points; ++p)
    {
        const auto first = results.begin() + static_cast<std::ptrdiff_t>(p * trials);
        auto collect = [&](auto&& field) {
            for (std::size_t t = 0; t < trials; ++t)
            {
                buf[t] = field(first[static_cast<std::ptrdiff_t>(t)]);
            }
            return summarize(buf);
        };

        SweepRecord rec;
        rec.dNear = scn.sweep.DNear(p);
        rec.dFar = 2.0 * rec.dNear;
        rec.cascadedPower[0] = collect([](const TrialMetrics& t) { return t.h1Power; });
        rec.cascadedPower[1] = collect([](const TrialMetrics& t) { return t.h2Power; });
        for (Model m : models)
        {
            ModelStats ms;
            ms.model = m;
            ms.gains = scn.GainsFor(m);
            for (User u : {User::Near, User::Far})
            {
                auto& us = ms.users[static_cast<std::size_t>(u)];
                us.rxPowerW =
                    collect([m, u](const TrialMetrics& t) { return t.At(m, u).rxPowerW; });
                us.ratio = collect([m, u](const TrialMetrics& t) { return t.At(m, u).ratio; });
            }
            rec.models.push_back(ms);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<SweepRecord>
run_sweep(const Scenario& scn, unsigned workers)
{
    return run_sweep(scn, kBaselineModels, workers);
}

std::vector<SweepRecord>
compare_models(const Scenario& scn, unsigned workers)
{
    return run_sweep(scn, kAllModels, workers);
}

} // namespace irsnoma
