/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "irsnoma/channel.h"
#include "irsnoma/errors.h"
#include "oracles.h"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace irsnoma;

namespace
{

constexpr double kPi = std::numbers::pi;

FadingVector
fv(std::vector<Complex> c)
{
    return FadingVector{std::move(c)};
}

FadingVector
random_fv(oracle::RefRandom& rnd, std::size_t k)
{
    return fv(rnd.GaussianVector(k));
}

PhaseConfig
random_pc(oracle::RefRandom& rnd, std::size_t k)
{
    std::vector<double> t(k);
    for (auto& x : t)
    {
        x = rnd.Uniform(0.0, 2.0 * kPi);
    }
    return PhaseConfig(t);
}

} // namespace

TEST_CASE("PhaseConfig wraps into [0, 2pi)")
{
    PhaseConfig pc({-kPi / 2, 2 * kPi, 5 * kPi, -1e-300, 0.25});
    const auto& t = pc.Thetas();
    CHECK(t[0] == doctest::Approx(3 * kPi / 2));
    CHECK(t[1] == doctest::Approx(0.0));
    CHECK(t[2] == doctest::Approx(kPi));
    for (double x : t)
    {
        CHECK(x >= 0.0);
        CHECK(x < 2 * kPi);
    }
    CHECK(t[4] == 0.25);
}

TEST_CASE("sample_fading")
{
    const SubstreamId id{9, 1, 2, HopTag::BsToIrs};
    Substream a(id);
    Substream b(id);
    const auto va = sample_fading(a, 16, FadingModel::RayleighUnit);
    const auto vb = sample_fading(b, 16, FadingModel::RayleighUnit);
    CHECK(va.coeffs == vb.coeffs);

    Substream c(id);
    CHECK(sample_fading(c, 3, FadingModel::RayleighUnit).size() == 3);
    CHECK_THROWS_AS(sample_fading(c, 0, FadingModel::RayleighUnit), DomainError);

    const auto ones = sample_fading(c, 4, FadingModel::Unit);
    for (auto z : ones.coeffs)
    {
        CHECK(z == Complex{1.0, 0.0});
    }
}

TEST_CASE("sample_fading has unit mean-square amplitude")
{
    // 64-entry vectors pooled to 1e6 entries.
    double sum = 0.0;
    std::size_t n = 0;
    for (std::uint64_t t = 0; t < 15625; ++t)
    {
        Substream s({123, 0, t, HopTag::IrsToNear});
        for (auto z : sample_fading(s, 64, FadingModel::RayleighUnit).coeffs)
        {
            sum += std::norm(z);
            ++n;
        }
    }
    CHECK(n == 1000000);
    CHECK(std::abs(sum / n - 1.0) < 0.01);
}

TEST_CASE("cascaded_gain")
{
    const auto ones = fv({1, 1, 1, 1});
    CHECK(cascaded_gain(ones, PhaseConfig({0, 0, 0, 0}), ones) == Complex{4.0, 0.0});

    const auto h = cascaded_gain(fv({{0, 1}}), PhaseConfig({kPi / 2}), fv({1}));
    CHECK(h.real() == doctest::Approx(-1.0));
    CHECK(std::abs(h.imag()) < 1e-15);

    CHECK_THROWS_AS(cascaded_gain(fv({1, 1}), PhaseConfig({0}), fv({1, 1})), DimensionError);
    CHECK_THROWS_AS(cascaded_gain(fv({1, 1}), PhaseConfig({0, 0}), fv({1})), DimensionError);
}

TEST_CASE("cascaded_gain matches the dense diagonal-matrix product")
{
    oracle::RefRandom rnd(2024);
    for (int i = 0; i < 200; ++i)
    {
        const auto gu = random_fv(rnd, 8);
        const auto gb = random_fv(rnd, 8);
        const auto pc = random_pc(rnd, 8);
        const auto ref = oracle::dense_triple_product(gu.coeffs, pc.Thetas(), gb.coeffs);
        CHECK(std::abs(cascaded_gain(gu, pc, gb) - ref) < 1e-12);
    }
}

TEST_CASE("cascaded_gain is linear in each fading vector")
{
    oracle::RefRandom rnd(99);
    for (int i = 0; i < 200; ++i)
    {
        const std::size_t k = 1 + static_cast<std::size_t>(rnd.Uniform(0, 16));
        const auto a = random_fv(rnd, k);
        const auto b = random_fv(rnd, k);
        const auto g = random_fv(rnd, k);
        const auto pc = random_pc(rnd, k);
        const Complex alpha = rnd.Gaussian();
        const Complex beta = rnd.Gaussian();
        FadingVector mix;
        for (std::size_t j = 0; j < k; ++j)
        {
            mix.coeffs.push_back(alpha * a.coeffs[j] + beta * b.coeffs[j]);
        }
        const Complex lhsUser = cascaded_gain(mix, pc, g);
        const Complex rhsUser = alpha * cascaded_gain(a, pc, g) + beta * cascaded_gain(b, pc, g);
        CHECK(std::abs(lhsUser - rhsUser) < 1e-12 * (1.0 + std::abs(rhsUser)));
        const Complex lhsBs = cascaded_gain(g, pc, mix);
        const Complex rhsBs = alpha * cascaded_gain(g, pc, a) + beta * cascaded_gain(g, pc, b);
        CHECK(std::abs(lhsBs - rhsBs) < 1e-12 * (1.0 + std::abs(rhsBs)));
    }
}

TEST_CASE("coherent_phases")
{
    SUBCASE("aligned inputs need no shift")
    {
        const auto pc = coherent_phases(fv({1.0, 2.0, 0.5}), fv({3.0, 1.0, 4.0}));
        for (double t : pc.Thetas())
        {
            CHECK(t == 0.0);
        }
    }
    SUBCASE("hand example")
    {
        const auto gu = fv({{0, 1}});
        const auto gb = fv({1});
        const auto pc = coherent_phases(gu, gb);
        CHECK(pc.Thetas()[0] == doctest::Approx(3 * kPi / 2));
        const auto h = cascaded_gain(gu, pc, gb);
        CHECK(h.real() == doctest::Approx(1.0));
        CHECK(std::abs(h.imag()) < 1e-15);
    }
    SUBCASE("dimension mismatch")
    {
        CHECK_THROWS_AS(coherent_phases(fv({1, 1}), fv({1})), DimensionError);
    }
}

TEST_CASE("coherent phases reach the amplitude sum and beat any other configuration")
{
    oracle::RefRandom rnd(314);
    for (int inst = 0; inst < 50; ++inst)
    {
        const std::size_t k = 1 + static_cast<std::size_t>(rnd.Uniform(0, 64));
        const auto gu = random_fv(rnd, k);
        const auto gb = random_fv(rnd, k);
        const Complex best = cascaded_gain(gu, coherent_phases(gu, gb), gb);
        double amplitudeSum = 0.0;
        for (std::size_t j = 0; j < k; ++j)
        {
            amplitudeSum += std::abs(gu.coeffs[j]) * std::abs(gb.coeffs[j]);
        }
        CHECK(best.real() >= 0.0);
        CHECK(std::abs(best.imag()) < 1e-9 * amplitudeSum);
        CHECK(best.real() == doctest::Approx(amplitudeSum).epsilon(1e-12));
        for (int r = 0; r < 100; ++r)
        {
            CHECK(std::abs(cascaded_gain(gu, random_pc(rnd, k), gb)) <= std::abs(best) + 1e-12);
        }
    }
}

TEST_CASE("random_phases")
{
    const SubstreamId id{5, 0, 0, HopTag::Phases};
    Substream a(id);
    Substream b(id);
    CHECK(random_phases(a, 10).Thetas() == random_phases(b, 10).Thetas());
    CHECK_THROWS_AS(random_phases(a, 0), DomainError);

    const auto one = random_phases(a, 1);
    REQUIRE(one.size() == 1);
    CHECK(one.Thetas()[0] >= 0.0);
    CHECK(one.Thetas()[0] < 2 * kPi);

    double sum = 0.0;
    std::size_t n = 0;
    for (std::uint64_t t = 0; t < 100000; ++t)
    {
        Substream s({17, 1, t, HopTag::Phases});
        const PhaseConfig pc = random_phases(s, 64);
        for (double th : pc.Thetas())
        {
            sum += th;
            ++n;
        }
    }
    CHECK(std::abs(sum / n - kPi) < 0.02);
}
