/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef IRSNOMA_CHANNEL_H
#define IRSNOMA_CHANNEL_H

#include "irsnoma/rng.h"

#include <complex>
#include <cstddef>
#include <vector>

namespace irsnoma
{

using Complex = std::complex<double>;

/// Small-scale fading coefficients of one hop, one entry per IRS element.
struct FadingVector
{
    std::vector<Complex> coeffs;

    std::size_t size() const
    {
        return coeffs.size();
    }
};

/// Per-element IRS phase shifts; the diagonal of Theta.
class PhaseConfig
{
  public:
    /// Angles are wrapped into [0, 2pi).
    explicit PhaseConfig(std::vector<double> thetas);

    const std::vector<double>& Thetas() const
    {
        return m_thetas;
    }

    std::size_t size() const
    {
        return m_thetas.size();
    }

  private:
    std::vector<double> m_thetas;
};

enum class FadingModel
{
    RayleighUnit, //!< i.i.d. CN(0, 1) entries
    Unit,         //!< every entry 1+0j; a deterministic diagnostic channel
};

/// Which user the shared phase configuration is matched to.
enum class PhasePolicy
{
    CoherentFar,
    CoherentNear,
    Random,
};

/// Wrap an angle in radians into [0, 2pi).
double wrap_phase(double theta);

FadingVector sample_fading(Substream& stream, std::size_t k, FadingModel model);

/// g_user^T * diag(e^{j theta}) * g_bs.
Complex cascaded_gain(const FadingVector& gUser, const PhaseConfig& phases, const FadingVector& gBs);

/// Phases that co-phase every element so the cascaded gain is real and maximal.
PhaseConfig coherent_phases(const FadingVector& gUser, const FadingVector& gBs);

PhaseConfig random_phases(Substream& stream, std::size_t k);

} // namespace irsnoma

#endif // IRSNOMA_CHANNEL_H
