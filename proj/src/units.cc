/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "irsnoma/units.h"

#include "irsnoma/errors.h"

#include <cmath>
#include <string>

namespace irsnoma
{

PowerWatts::PowerWatts(double watts)
    : m_watts(watts)
{
    if (!std::isfinite(watts) || watts < 0.0)
    {
        throw ValidationError("power must be finite and >= 0 W, got " + std::to_string(watts));
    }
}

Frequency::Frequency(double hz)
    : m_hz(hz)
{
    if (!std::isfinite(hz) || hz <= 0.0)
    {
        throw DomainError("frequency must be > 0 Hz, got " + std::to_string(hz));
    }
}

double
db_to_linear(Decibel x)
{
    if (!std::isfinite(x.value))
    {
        throw ValidationError("dB value must be finite");
    }
    return std::pow(10.0, x.value / 10.0);
}

Decibel
linear_to_db(double ratio)
{
    if (!(ratio > 0.0))
    {
        throw DomainError("linear ratio must be > 0 to express in dB, got " +
                          std::to_string(ratio));
    }
    return Decibel{10.0 * std::log10(ratio)};
}

PowerWatts
dbm_to_watts(Dbm x)
{
    if (!std::isfinite(x.value))
    {
        throw ValidationError("dBm value must be finite");
    }
    return PowerWatts(std::pow(10.0, (x.value - 30.0) / 10.0));
}

Dbm
watts_to_dbm(PowerWatts p)
{
    return Dbm{linear_to_db(p.Watts()).value + 30.0};
}

double
wavelength(Frequency f)
{
    return kSpeedOfLight / f.Hz();
}

} // namespace irsnoma
