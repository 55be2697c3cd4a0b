/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "irsnoma/noma.h"

#include "irsnoma/errors.h"

#include <cmath>
#include <complex>
#include <string>

namespace irsnoma
{

void
LinkState::Validate() const
{
    if (!(l1 > 0.0) || !(l2 > 0.0))
    {
        throw DomainError("link path losses must be > 0");
    }
    if (!(noise.Watts() > 0.0))
    {
        throw DomainError("noise power must be > 0 W");
    }
}

PowerSplit
validate_split(double a1Sq, double a2Sq)
{
    auto inOpenUnit = [](double v) { return std::isfinite(v) && v > 0.0 && v < 1.0; };
    if (!inOpenUnit(a1Sq) || !inOpenUnit(a2Sq))
    {
        throw SplitConstraintError("power_split: a1_sq and a2_sq must lie in (0, 1)");
    }
    if (std::abs(a1Sq + a2Sq - 1.0) > 1e-9)
    {
        throw SplitConstraintError("power_split: a1_sq + a2_sq must equal 1, got " +
                                   std::to_string(a1Sq + a2Sq));
    }
    if (a2Sq <= a1Sq)
    {
        throw SplitOrderingError("power_split: far-user share a2_sq must exceed a1_sq");
    }
    return PowerSplit(std::sqrt(a1Sq), std::sqrt(a2Sq));
}

PowerWatts
received_power_w(const LinkState& link, User user)
{
    link.Validate();
    const double h = std::norm(user == User::Near ? link.h1 : link.h2);
    const double l = user == User::Near ? link.l1 : link.l2;
    return PowerWatts(link.rho.Watts() * h / l);
}

double
sinr_far(const LinkState& link, const PowerSplit& split, SinrMode mode)
{
    link.Validate();
    const double rho = link.rho.Watts();
    const double own = std::norm(link.h2) / link.l2;
    const double interfererGain =
        mode == SinrMode::AsPrinted ? std::norm(link.h1) / link.l1 : own;
    const double signal = rho * split.A2Sq() * own;
    const double interference = rho * split.A1Sq() * interfererGain;
    return signal / (interference + link.noise.Watts());
}

double
snr_near(const LinkState& link, const PowerSplit& split)
{
    link.Validate();
    return link.rho.Watts() * split.A1Sq() * std::norm(link.h1) /
           (link.l1 * link.noise.Watts());
}

} // namespace irsnoma
