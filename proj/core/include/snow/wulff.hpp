#pragma once

#include <stdexcept>
#include <vector>

#include "snow/geometry.hpp"

namespace snow {

/// One sampled direction of the surface free energy plot: unit normal at
/// `angle` (radians from +x) with support value energy > 0.
struct WulffSample {
    double angle = 0.0;
    double energy = 1.0;
};

/// The sampled directions leave a gap of half a turn or more, so the
/// half-plane intersection is unbounded.
struct WulffUnboundedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The half-plane intersection has no interior (bad or degenerate input).
struct WulffEmptyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Equilibrium shape from a surface free energy plot: the intersection of
/// the half-planes r . n(angle) <= energy over all samples, returned as a
/// convex polygon in counterclockwise order. Requires at least 3 samples
/// with distinct directions and positive energies (std::invalid_argument
/// otherwise); unbounded and empty intersections raise the two dedicated
/// errors above.
std::vector<CartesianPoint> wulff_shape(const std::vector<WulffSample>& samples);

}  // namespace snow
