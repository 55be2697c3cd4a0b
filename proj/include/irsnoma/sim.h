/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef IRSNOMA_SIM_H
#define IRSNOMA_SIM_H

#include "irsnoma/channel.h"
#include "irsnoma/errors.h"
#include "irsnoma/geometry.h"
#include "irsnoma/noma.h"
#include "irsnoma/pathloss.h"
#include "irsnoma/units.h"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace irsnoma
{

/// The three link-budget variants compared by the simulator.
enum class Model
{
    Conventional,         //!< log-distance loss, gains_conventional
    ConventionalEnhanced, //!< log-distance loss, gains_enhanced
    Modified,             //!< IRS frequency-distance loss, gains_modified
};

inline constexpr std::array<Model, 3> kAllModels{Model::Conventional,
                                                 Model::ConventionalEnhanced,
                                                 Model::Modified};
inline constexpr std::array<Model, 2> kBaselineModels{Model::Conventional, Model::Modified};

/// Name used in CSV output; lexical order matches kAllModels.
std::string model_name(Model m);
std::string user_name(User u);

struct LayoutParams
{
    Position bs{0.0, 0.0, 10.0};
    Position irs{50.0, 0.0, 10.0};
    double bearingDeg{0.0};
    double userHeight{1.5};
    double cellSide{200.0};
};

struct SweepParams
{
    double dNearStart{10.0};
    double dNearStop{100.0};
    std::uint32_t points{10};

    /// Linearly spaced near-user IRS distance of sweep point i.
    double DNear(std::size_t i) const;
};

/// Full experiment configuration. Default member values are the reference
/// parameter set (90 GHz, 6 W, -94 dBm, 64 elements, 5/10/20 dB gains).
struct Scenario
{
    double carrierHz{90e9};
    double txPowerW{6.0};
    double noiseDbm{-94.0};
    double a1Sq{0.2};
    double a2Sq{0.8};
    IrsPanel panel;
    std::uint32_t kElements{64};
    IncidenceAngles angles;
    LayoutParams layout;
    AntennaGains gainsModified{5.0, 5.0};
    AntennaGains gainsConventional{10.0, 10.0};
    AntennaGains gainsEnhanced{20.0, 20.0};
    SweepParams sweep;
    std::uint32_t trials{10000};
    std::uint64_t masterSeed{42};
    PhasePolicy phasePolicy{PhasePolicy::CoherentFar};
    SinrMode sinrMode{SinrMode::AsPrinted};
    ConventionalGainMode conventionalGainMode{ConventionalGainMode::PerLink};
    FadingModel fading{FadingModel::RayleighUnit};

    /// Checks every field; throws ValidationError naming the key.
    void Validate() const;

    const AntennaGains& GainsFor(Model m) const;

    /// Geometry of sweep point i. Throws InfeasibleGeometryError.
    Layout LayoutAt(std::size_t pointIndex) const;
};

/// Received power and decodability metric of one user under one model.
struct UserMetrics
{
    double rxPowerW{0.0};
    double ratio{0.0}; //!< SNR after SIC for u1, SINR for u2

    bool operator==(const UserMetrics&) const = default;
};

struct TrialMetrics
{
    /// Indexed [model][user] following Model and User enum order.
    std::array<std::array<UserMetrics, 2>, 3> values{};
    double h1Power{0.0}; //!< |h1|^2
    double h2Power{0.0}; //!< |h2|^2

    const UserMetrics& At(Model m, User u) const
    {
        return values[static_cast<std::size_t>(m)][static_cast<std::size_t>(u)];
    }

    bool operator==(const TrialMetrics&) const = default;
};

/// Mean and population standard deviation.
struct Stat
{
    double mean{0.0};
    double stddev{0.0};
    std::uint64_t count{0};
};

struct UserStats
{
    Stat rxPowerW;
    Stat ratio;
};

struct ModelStats
{
    Model model{Model::Conventional};
    AntennaGains gains;
    std::array<UserStats, 2> users{}; //!< indexed by User

    const UserStats& For(User u) const
    {
        return users[static_cast<std::size_t>(u)];
    }
};

struct SweepRecord
{
    double dNear{0.0};
    double dFar{0.0};
    std::vector<ModelStats> models;
    std::array<Stat, 2> cascadedPower{}; //!< |h_i|^2 statistics, indexed by User

    const ModelStats& For(Model m) const;
};

/// One Monte-Carlo trial: fresh fading, one shared phase configuration, all
/// three models evaluated on the same draw.
TrialMetrics run_trial(const Scenario& scn, std::size_t pointIndex, std::size_t trialIndex);

/// Point-indexed wrapper raised when a sweep point has no valid geometry.
class SweepPointError : public InfeasibleGeometryError
{
  public:
    SweepPointError(std::size_t pointIndex, const std::string& what);

    std::size_t PointIndex() const
    {
        return m_point;
    }

  private:
    std::size_t m_point;
};

/**
 * Evaluate every (point, trial) and reduce per point in ascending trial order.
 *
 * workers = 0 uses the hardware concurrency. The result does not depend on the
 * worker count.
 */
std::vector<SweepRecord> run_sweep(const Scenario& scn,
                                   std::span<const Model> models,
                                   unsigned workers = 0);

/// Baseline sweep: conventional and modified models.
std::vector<SweepRecord> run_sweep(const Scenario& scn, unsigned workers = 0);

/// All three models, including the gain-enhanced conventional one.
std::vector<SweepRecord> compare_models(const Scenario& scn, unsigned workers = 0);

/// Population mean and std of xs, accumulated in index order.
Stat summarize(std::span<const double> xs);

} // namespace irsnoma

#endif // IRSNOMA_SIM_H
