#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "snow/automaton.hpp"

namespace snow {

/// Growth latency L = T - B of a frozen cell. Throws std::domain_error with
/// a message distinguishing never-boundary from never-frozen cells.
std::int64_t latency(const SimTrace& trace, AxialCoord c);

/// L(0, j) along the +j main branch together with the check that each
/// cell's first-boundary time equals its predecessor's freeze time.
struct MainBranchSeries {
    std::vector<std::pair<int, std::int64_t>> latencies;  ///< (j, L)
    bool handoff_exact = true;       ///< B(0, j+1) == T(0, j) for every j
    std::vector<int> handoff_violations;
    int max_j = 0;                   ///< highest frozen j on the axis
};
MainBranchSeries main_branch_latency_series(const SimTrace& trace);

/// Freeze-time ordering over the diagonal i + j = K, j >= i >= 0: the
/// on-axis cell should be earliest and the mid-diagonal cell latest.
struct OrderingReport {
    int k = 0;
    bool all_frozen = false;
    std::vector<AxialCoord> unfrozen;
    bool axis_is_min = false;
    bool midpoint_is_max = false;
    AxialCoord midpoint;
    std::vector<AxialCoord> min_violations;  ///< cells with T < T(0, K)
    std::vector<AxialCoord> max_violations;  ///< cells with T > T(midpoint)
};
OrderingReport check_growth_ordering(const SimTrace& trace, int k);

/// A run of frozen cells extending from a main-branch cell in the +i
/// direction. length == cells.size() - 1; tip == cells.back().
struct SideBranch {
    AxialCoord root;
    std::vector<AxialCoord> cells;
    int length = 0;
    AxialCoord tip;
};
SideBranch side_branch(const SimTrace& trace, AxialCoord root);

/// The prefix of a side branch in which every cell's recorded source is its
/// -i predecessor.
struct StraightPath {
    AxialCoord root;
    std::vector<AxialCoord> cells;
    int length = 0;
};
StraightPath straight_path(const SimTrace& trace, AxialCoord root);

/// All frozen cells whose source chain passes through the off-axis part of
/// the straight path from root, plus the root itself.
struct BranchCluster {
    AxialCoord root;
    std::vector<AxialCoord> cells;
    int reach = 0;                 ///< max distance from root over the cluster
    int cells_at_reach = 0;
    bool reach_equals_straight = false;  ///< reach == straight-path length
};
BranchCluster side_branch_cluster(const SimTrace& trace, AxialCoord root);

/// Recorded growth direction of every cell that ever became boundary
/// (except the seed, which has none).
std::vector<std::pair<AxialCoord, DirectionAngle>> direction_trace(const SimTrace& trace);

/// Envelope fitting controls. A side branch keeps the lattice j of its root,
/// so tips are windowed by their lattice j (recovered from the embedding as
/// y - x/sqrt(3)); rows hugging the origin or the edge are excluded.
struct EnvelopeOptions {
    double min_j = 0.0;
    double max_j = 0.0;
};

/// Fitted frontier of side-branch tips on the +i side: the line
/// x = slope * y + intercept through the outer convex-hull vertices, pushed
/// out so no kept tip lies beyond it. theta is its angle to the j-axis.
struct EnvelopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double theta = 0.0;  ///< radians in (0, pi)
    std::vector<CartesianPoint> support;  ///< hull vertices used for the slope
};

/// Fits the envelope through tip points. Throws std::domain_error when
/// fewer than 2 usable off-axis hull vertices remain.
EnvelopeFit fit_envelope(const std::vector<CartesianPoint>& tips, const EnvelopeOptions& opts);

/// Tips of all side branches rooted at (0, j), j >= 1, in Cartesian
/// coordinates, plus default envelope options for this trace (keep roots
/// between 10% and 90% of the radius).
std::vector<CartesianPoint> side_branch_tips(const SimTrace& trace);
EnvelopeOptions default_envelope_options(const SimTrace& trace);

/// Main-to-side growth latency ratio sin(2pi/3 - theta) / sin(theta) for
/// theta in (0, 2pi/3); std::domain_error outside.
double latency_ratio(double theta);

/// Frozen-cell count divided by the number of grid cells inside the convex
/// hull of the frozen set (1.0 while the hull is degenerate).
double fill_factor(const SimTrace& trace);

/// Checks that the s, u and v fields are invariant under the 60-degree
/// rotation and the mirror, within tol per cell.
struct SymmetryReport {
    bool symmetric = true;
    double max_deviation = 0.0;
    std::optional<AxialCoord> first_asymmetric;
};
SymmetryReport check_symmetry(const GridState& g, double tol = 0.0);

/// True when the receptive cells (frozen plus boundary) form one connected
/// component containing the origin.
bool receptive_set_connected(const GridState& g);

}  // namespace snow
