/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef IRSNOMA_RNG_H
#define IRSNOMA_RNG_H

#include <array>
#include <complex>
#include <cstdint>
#include <limits>

namespace irsnoma
{

/// Which random quantity a substream feeds.
enum class HopTag : std::uint64_t
{
    BsToIrs = 1,
    IrsToNear = 2,
    IrsToFar = 3,
    Phases = 4,
};

/**
 * xoshiro256** generator (Blackman and Vigna). Seeding is four splitmix64
 * steps, so a fresh stream per (trial, hop) costs nothing next to its draws.
 * Satisfies UniformRandomBitGenerator.
 */
class Xoshiro256
{
  public:
    using result_type = std::uint64_t;

    explicit Xoshiro256(std::uint64_t seed);

    static constexpr result_type min()
    {
        return 0;
    }

    static constexpr result_type max()
    {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()();

  private:
    std::array<std::uint64_t, 4> m_s;
};

/// Name of an independent random stream.
struct SubstreamId
{
    std::uint64_t masterSeed{0};
    std::uint64_t point{0};
    std::uint64_t trial{0};
    HopTag tag{HopTag::BsToIrs};
};

/**
 * Deterministic random stream named by a SubstreamId.
 *
 * Two streams with the same id produce the same sequence on every platform:
 * variates are built from raw 64-bit engine output, not from the standard
 * library distribution classes.
 */
class Substream
{
  public:
    explicit Substream(const SubstreamId& id);

    /// Uniform on [0, 1).
    double Uniform();

    /// Circularly-symmetric complex Gaussian with E|z|^2 = 1.
    std::complex<double> ComplexGaussian();

  private:
    Xoshiro256 m_engine;
};

/// 64-bit seed for a substream, derived by splitmix64 mixing.
std::uint64_t substream_seed(const SubstreamId& id);

} // namespace irsnoma

#endif // IRSNOMA_RNG_H
