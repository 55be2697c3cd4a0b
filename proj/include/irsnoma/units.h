/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef IRSNOMA_UNITS_H
#define IRSNOMA_UNITS_H

namespace irsnoma
{

/// Speed of light in vacuum, exact SI value [m/s].
inline constexpr double kSpeedOfLight = 299792458.0;

/// A dimensionless ratio expressed in dB.
struct Decibel
{
    double value{0.0};
};

/// An absolute power level referenced to 1 mW.
struct Dbm
{
    double value{0.0};
};

/// Power in watts, never negative.
class PowerWatts
{
  public:
    PowerWatts() = default;
    explicit PowerWatts(double watts);

    double Watts() const
    {
        return m_watts;
    }

  private:
    double m_watts{0.0};
};

/// Carrier frequency in Hz, strictly positive.
class Frequency
{
  public:
    explicit Frequency(double hz);

    double Hz() const
    {
        return m_hz;
    }

  private:
    double m_hz;
};

double db_to_linear(Decibel x);
Decibel linear_to_db(double ratio);
PowerWatts dbm_to_watts(Dbm x);
Dbm watts_to_dbm(PowerWatts p);

/// Wavelength c/f in metres.
double wavelength(Frequency f);

} // namespace irsnoma

#endif // IRSNOMA_UNITS_H
