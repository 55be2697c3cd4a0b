/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef IRSNOMA_PATHLOSS_H
#define IRSNOMA_PATHLOSS_H

#include "irsnoma/units.h"

#include <cstdint>

namespace irsnoma
{

/**
 * Physical description of the reflecting panel used by the IRS-specific
 * path-loss model.
 *
 * mElems and nElems are the transmitting and receiving element counts; dx and
 * dy the element length and width in metres; reflectionA the amplitude
 * reflection coefficient in (0, 1].
 */
struct IrsPanel
{
    std::uint32_t mElems{64};
    std::uint32_t nElems{64};
    double dx{0.0038};
    double dy{0.0038};
    double reflectionA{0.9};

    /// Throws ValidationError naming the offending field.
    void Validate() const;
};

/// Transmit/receive angles at the panel, degrees, each in (-90, 90).
struct IncidenceAngles
{
    double thetaTDeg{45.0};
    double thetaRDeg{45.0};

    void Validate() const;
};

struct AntennaGains
{
    double gtDb{0.0};
    double grDb{0.0};

    bool operator==(const AntennaGains&) const = default;
};

/// Where the antenna gains of the log-distance model are subtracted.
enum class ConventionalGainMode
{
    PerLink,    //!< once for the end-to-end BS -> IRS -> user link
    PerSegment, //!< inside every L(d), i.e. twice per link
};

/// 35.1 + 36.7 log10(d), no antenna gains.
Decibel conventional_segment_db(double d);

/// End-to-end log-distance loss of the BS -> IRS -> user link.
Decibel conventional_link_db(double d1,
                             double d2,
                             const AntennaGains& gains,
                             ConventionalGainMode mode = ConventionalGainMode::PerLink);

/// Aperture gain 4 pi dx dy / lambda^2 of one element.
double scattering_gain(const IrsPanel& panel, double lambda);

/**
 * Frequency-distance path loss of a far-field IRS link as a linear ratio:
 *
 *   64 pi^3 (d1 d2)^2 / (M^2 N^2 lambda^2 A^2 G Gt Gr dx dy cos(theta_t) cos(theta_r))
 *
 * with G = scattering_gain(panel, lambda). Substituting G cancels lambda, so
 * the result is independent of the carrier at a fixed panel.
 */
double irs_pathloss_linear(double d1,
                           double d2,
                           const IrsPanel& panel,
                           const IncidenceAngles& angles,
                           const AntennaGains& gains,
                           Frequency f);

} // namespace irsnoma

#endif // IRSNOMA_PATHLOSS_H
