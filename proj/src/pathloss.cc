/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "irsnoma/pathloss.h"

#include "irsnoma/errors.h"

#include <cmath>
#include <numbers>
#include <string>

namespace irsnoma
{

namespace
{

void
require_distance(double d, const char* name)
{
    if (!std::isfinite(d) || d <= 0.0)
    {
        throw DomainError(std::string(name) + " must be > 0 m, got " + std::to_string(d));
    }
}

void
require_gains(const AntennaGains& g)
{
    if (!std::isfinite(g.gtDb) || !std::isfinite(g.grDb))
    {
        throw ValidationError("antenna gains must be finite");
    }
}

double
cos_deg(double deg)
{
    return std::cos(deg * std::numbers::pi / 180.0);
}

} // namespace

void
IrsPanel::Validate() const
{
    if (mElems < 1)
    {
        throw ValidationError("panel.m_elems must be >= 1");
    }
    if (nElems < 1)
    {
        throw ValidationError("panel.n_elems must be >= 1");
    }
    if (!std::isfinite(dx) || dx <= 0.0)
    {
        throw ValidationError("panel.dx must be > 0");
    }
    if (!std::isfinite(dy) || dy <= 0.0)
    {
        throw ValidationError("panel.dy must be > 0");
    }
    if (!std::isfinite(reflectionA) || reflectionA <= 0.0 || reflectionA > 1.0)
    {
        throw ValidationError("panel.reflection_a must lie in (0, 1]");
    }
}

void
IncidenceAngles::Validate() const
{
    auto check = [](double deg, const char* key) {
        if (!std::isfinite(deg) || deg <= -90.0 || deg >= 90.0)
        {
            throw ValidationError(std::string(key) + " must lie in (-90, 90) degrees");
        }
    };
    check(thetaTDeg, "angles.theta_t");
    check(thetaRDeg, "angles.theta_r");
}

Decibel
conventional_segment_db(double d)
{
    require_distance(d, "distance");
    return Decibel{35.1 + 36.7 * std::log10(d)};
}

Decibel
conventional_link_db(double d1, double d2, const AntennaGains& gains, ConventionalGainMode mode)
{
    require_gains(gains);
    const double segments =
        conventional_segment_db(d1).value + conventional_segment_db(d2).value;
    const double gainSum = gains.gtDb + gains.grDb;
    const double applications = mode == ConventionalGainMode::PerSegment ? 2.0 : 1.0;
    return Decibel{segments - applications * gainSum};
}

double
scattering_gain(const IrsPanel& panel, double lambda)
{
    if (!std::isfinite(lambda) || lambda <= 0.0)
    {
        throw DomainError("wavelength must be > 0 m");
    }
    return 4.0 * std::numbers::pi * panel.dx * panel.dy / (lambda * lambda);
}

double
irs_pathloss_linear(double d1,
                    double d2,
                    const IrsPanel& panel,
                    const IncidenceAngles& angles,
                    const AntennaGains& gains,
                    Frequency f)
{
    require_distance(d1, "d1");
    require_distance(d2, "d2");
    require_gains(gains);

    // cos(90 deg) evaluates to ~6e-17, so test the wrapped angle instead of the cosine.
    auto facing = [](double deg) {
        return std::isfinite(deg) && std::abs(std::remainder(deg, 360.0)) < 90.0;
    };
    if (!facing(angles.thetaTDeg) || !facing(angles.thetaRDeg))
    {
        throw DomainError("incidence angle cosines must be > 0");
    }
    const double cosT = cos_deg(angles.thetaTDeg);
    const double cosR = cos_deg(angles.thetaRDeg);

    const double lambda = wavelength(f);
    const double g = scattering_gain(panel, lambda);
    const double m = panel.mElems;
    const double n = panel.nElems;
    const double a = panel.reflectionA;
    const double gt = db_to_linear(Decibel{gains.gtDb});
    const double gr = db_to_linear(Decibel{gains.grDb});
    const double pi = std::numbers::pi;

    const double num = 64.0 * pi * pi * pi * (d1 * d2) * (d1 * d2);
    const double den = m * m * n * n * lambda * lambda * a * a * g * gt * gr * panel.dx *
                       panel.dy * cosT * cosR;
    return num / den;
}

} // namespace irsnoma
