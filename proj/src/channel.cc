/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "irsnoma/channel.h"

#include "irsnoma/errors.h"

#include <cmath>
#include <numbers>
#include <string>

namespace irsnoma
{

namespace
{

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void
require_same_length(std::size_t a, std::size_t b, const char* what)
{
    if (a != b)
    {
        throw DimensionError(std::string(what) + ": length mismatch (" + std::to_string(a) +
                             " vs " + std::to_string(b) + ")");
    }
}

void
require_nonzero(std::size_t k)
{
    if (k == 0)
    {
        throw DomainError("element count must be >= 1");
    }
}

} // namespace

double
wrap_phase(double theta)
{
    double r = std::fmod(theta, kTwoPi);
    if (r < 0.0)
    {
        r += kTwoPi;
    }
    // fmod of a tiny negative value can round back up to exactly 2pi
    if (r >= kTwoPi)
    {
        r = 0.0;
    }
    return r;
}

PhaseConfig::PhaseConfig(std::vector<double> thetas)
    : m_thetas(std::move(thetas))
{
    for (auto& t : m_thetas)
    {
        if (!std::isfinite(t))
        {
            throw DomainError("phase shifts must be finite");
        }
        t = wrap_phase(t);
    }
}

FadingVector
sample_fading(Substream& stream, std::size_t k, FadingModel model)
{
    require_nonzero(k);
    FadingVector v;
    v.coeffs.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
    {
        switch (model)
        {
        case FadingModel::RayleighUnit:
            v.coeffs.push_back(stream.ComplexGaussian());
            break;
        case FadingModel::Unit:
            v.coeffs.emplace_back(1.0, 0.0);
            break;
        }
    }
    return v;
}

Complex
cascaded_gain(const FadingVector& gUser, const PhaseConfig& phases, const FadingVector& gBs)
{
    require_same_length(gUser.size(), phases.size(), "cascaded_gain");
    require_same_length(gUser.size(), gBs.size(), "cascaded_gain");

    Complex sum{0.0, 0.0};
    const auto& thetas = phases.Thetas();
    for (std::size_t k = 0; k < thetas.size(); ++k)
    {
        sum += gUser.coeffs[k] * std::polar(1.0, thetas[k]) * gBs.coeffs[k];
    }
    return sum;
}

PhaseConfig
coherent_phases(const FadingVector& gUser, const FadingVector& gBs)
{
    require_same_length(gUser.size(), gBs.size(), "coherent_phases");
    std::vector<double> thetas(gUser.size());
    for (std::size_t k = 0; k < thetas.size(); ++k)
    {
        thetas[k] = -std::arg(gUser.coeffs[k] * gBs.coeffs[k]);
    }
    return PhaseConfig(std::move(thetas));
}

PhaseConfig
random_phases(Substream& stream, std::size_t k)
{
    require_nonzero(k);
    std::vector<double> thetas(k);
    for (auto& t : thetas)
    {
        t = kTwoPi * stream.Uniform();
    }
    return PhaseConfig(std::move(thetas));
}

} // namespace irsnoma
