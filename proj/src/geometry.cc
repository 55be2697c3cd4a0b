/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#include "irsnoma/geometry.h"

#include "irsnoma/errors.h"

#include <cmath>
#include <numbers>
#include <string>

namespace irsnoma
{

namespace
{

void
check_finite(const Position& p)
{
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z))
    {
        throw ValidationError("position coordinates must be finite");
    }
}

} // namespace

double
distance(const Position& p, const Position& q)
{
    check_finite(p);
    check_finite(q);
    return std::hypot(p.x - q.x, p.y - q.y, p.z - q.z);
}

std::pair<Position, Position>
place_users(const Position& irs, double bearingDeg, double dNear, double userHeight)
{
    check_finite(irs);
    if (!std::isfinite(dNear) || dNear <= 0.0)
    {
        throw DomainError("d_near must be > 0 m, got " + std::to_string(dNear));
    }
    if (!std::isfinite(bearingDeg) || !std::isfinite(userHeight))
    {
        throw ValidationError("bearing and user height must be finite");
    }

    const double dz = std::abs(irs.z - userHeight);
    if (dNear < dz)
    {
        throw InfeasibleGeometryError("d_near " + std::to_string(dNear) +
                                      " m is shorter than the IRS-user height difference " +
                                      std::to_string(dz) + " m");
    }

    const double bearing = bearingDeg * std::numbers::pi / 180.0;
    const double ux = std::cos(bearing);
    const double uy = std::sin(bearing);

    auto at = [&](double d3) {
        const double horizontal = std::sqrt(d3 * d3 - dz * dz);
        return Position{irs.x + horizontal * ux, irs.y + horizontal * uy, userHeight};
    };
    return {at(dNear), at(2.0 * dNear)};
}

bool
inside_cell(const Position& p, double side)
{
    return p.x >= 0.0 && p.x <= side && p.y >= -side / 2.0 && p.y <= side / 2.0;
}

} // namespace irsnoma
