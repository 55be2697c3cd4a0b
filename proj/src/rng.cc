/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "irsnoma/rng.h"

#include <cmath>

namespace irsnoma
{

namespace
{

std::uint64_t
splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t
rotl(std::uint64_t x, int k)
{
    return (x << k) | (x >> (64 - k));
}

constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;

} // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed)
{
    for (auto& word : m_s)
    {
        word = splitmix64(seed);
        seed += 0x9e3779b97f4a7c15ULL;
    }
}

Xoshiro256::result_type
Xoshiro256::operator()()
{
    const std::uint64_t result = rotl(m_s[1] * 5, 7) * 9;
    const std::uint64_t t = m_s[1] << 17;
    m_s[2] ^= m_s[0];
    m_s[3] ^= m_s[1];
    m_s[1] ^= m_s[2];
    m_s[0] ^= m_s[3];
    m_s[2] ^= t;
    m_s[3] = rotl(m_s[3], 45);
    return result;
}

std::uint64_t
substream_seed(const SubstreamId& id)
{
    std::uint64_t h = splitmix64(id.masterSeed);
    h = splitmix64(h ^ id.point);
    h = splitmix64(h ^ id.trial);
    return splitmix64(h ^ static_cast<std::uint64_t>(id.tag));
}

Substream::Substream(const SubstreamId& id)
    : m_engine(substream_seed(id))
{
}

double
Substream::Uniform()
{
    return static_cast<double>(m_engine() >> 11) * kTwoPow53Inv;
}

std::complex<double>
Substream::ComplexGaussian()
{
    // Marsaglia polar method: for (u, v) uniform in the unit disc, s = u^2 + v^2
    // is uniform on (0, 1), so -ln(s) ~ Exp(1) is |z|^2 and (u, v)/sqrt(s) the phase.
    for (;;)
    {
        const double u = 2.0 * Uniform() - 1.0;
        const double v = 2.0 * Uniform() - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0)
        {
            const double scale = std::sqrt(-std::log(s) / s);
            return {u * scale, v * scale};
        }
    }
}

} // namespace irsnoma
