#pragma once

#include <vector>

namespace snow {

/// A point in the Cartesian embedding of the lattice (unit cell spacing).
struct CartesianPoint {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const CartesianPoint&, const CartesianPoint&) = default;
};

/// Convex hull of a point set (monotone chain), counterclockwise, no
/// duplicate endpoint. Collinear input collapses to its two extremes;
/// fewer than 3 distinct points come back as-is.
std::vector<CartesianPoint> convex_hull(std::vector<CartesianPoint> points);

/// True if p lies inside or on the boundary of a convex CCW polygon,
/// with `tol` slack on the edge tests.
bool polygon_contains(const std::vector<CartesianPoint>& polygon, CartesianPoint p,
                      double tol = 1e-9);

}  // namespace snow
