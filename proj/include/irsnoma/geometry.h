/*
 * Copyright (c) 2026 irsnoma contributors
 *
 * SPDX-License-Identifier: GPL-2.0-only
 */

#ifndef IRSNOMA_GEOMETRY_H
#define IRSNOMA_GEOMETRY_H

#include <utility>

namespace irsnoma
{

/// Cartesian position in metres.
struct Position
{
    double x{0.0};
    double y{0.0};
    double z{0.0};

    bool operator==(const Position&) const = default;
};

/**
 * Placement of the base station, the IRS and the NOMA pair.
 *
 * u1 is the near user and u2 the far user; the far user sits at twice the
 * near user's 3D distance from the IRS.
 */
struct Layout
{
    Position bs;
    Position irs;
    Position u1;
    Position u2;
    double cellSide{200.0};
};

/// Euclidean distance in metres.
double distance(const Position& p, const Position& q);

/**
 * Put both users on the horizontal ray leaving the IRS ground projection at
 * bearingDeg (0 deg = +x, 90 deg = +y), at height userHeight, such that the 3D
 * distances to the IRS are dNear and 2*dNear.
 *
 * Throws InfeasibleGeometryError when dNear is shorter than the vertical
 * offset between the IRS and the users.
 */
std::pair<Position, Position> place_users(const Position& irs,
                                          double bearingDeg,
                                          double dNear,
                                          double userHeight);

/// True when p lies inside the square cell [0, side] x [-side/2, side/2]
/// centred on the y axis, as used by the default drop.
bool inside_cell(const Position& p, double side);

} // namespace irsnoma

#endif // IRSNOMA_GEOMETRY_H
