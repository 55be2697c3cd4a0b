/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef IRSNOMA_NOMA_H
#define IRSNOMA_NOMA_H

#include "irsnoma/channel.h"
#include "irsnoma/units.h"

namespace irsnoma
{

enum class User
{
    Near, //!< u1, decodes after SIC
    Far,  //!< u2, treats u1's message as interference
};

/// Superposition amplitude coefficients; a2 > a1 and a1^2 + a2^2 = 1.
class PowerSplit
{
  public:
    double A1() const
    {
        return m_a1;
    }

    double A2() const
    {
        return m_a2;
    }

    double A1Sq() const
    {
        return m_a1 * m_a1;
    }

    double A2Sq() const
    {
        return m_a2 * m_a2;
    }

  private:
    friend PowerSplit validate_split(double a1Sq, double a2Sq);
    PowerSplit(double a1, double a2)
        : m_a1(a1),
          m_a2(a2)
    {
    }

    double m_a1;
    double m_a2;
};

/// Everything the SINR formulas need for one trial of one path-loss model.
struct LinkState
{
    Complex h1;          //!< cascaded gain to u1
    Complex h2;          //!< cascaded gain to u2
    double l1{1.0};      //!< linear end-to-end loss to u1
    double l2{1.0};      //!< linear end-to-end loss to u2
    PowerWatts rho;      //!< BS transmit power
    PowerWatts noise{1.0};

    /// Throws DomainError unless l1, l2 and noise are strictly positive.
    void Validate() const;
};

/// Interference term of the far-user SINR.
enum class SinrMode
{
    AsPrinted,  //!< u1's cascaded gain and loss in the denominator
    OwnChannel, //!< u2's own cascaded gain and loss in the denominator
};

/**
 * Build a split from squared coefficients.
 *
 * Throws SplitConstraintError when |a1Sq + a2Sq - 1| > 1e-9 (or an input is
 * outside (0, 1)), SplitOrderingError when a2Sq <= a1Sq.
 */
PowerSplit validate_split(double a1Sq, double a2Sq);

/// Total superimposed power rho |h|^2 / l at the given user.
PowerWatts received_power_w(const LinkState& link, User user);

/// Far-user SINR, treating the near user's message as interference.
double sinr_far(const LinkState& link, const PowerSplit& split, SinrMode mode);

/// Near-user SNR after ideal SIC of the far user's message.
double snr_near(const LinkState& link, const PowerSplit& split);

} // namespace irsnoma

#endif // IRSNOMA_NOMA_H
