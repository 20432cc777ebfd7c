#pragma once

#include "snow/grid.hpp"

namespace snow {

/// Per-step water adjustments of the shell redistribution rule. A cell can
/// be touched by up to three triples per step: its own (when it is a
/// qualifying boundary cell) and one for each of its two ring neighbors.
/// Each contribution lands in its own slot, so the result is independent of
/// iteration order and bitwise stable under the lattice symmetries.
struct RedistributionBuffer {
    std::vector<double> own;
    std::vector<double> recv_a;  ///< from the triple of ring_neighbors_of(c)[0]
    std::vector<double> recv_b;  ///< from the triple of ring_neighbors_of(c)[1]

    void reset(std::size_t cells);
    /// Net adjustment for one cell.
    double delta(int idx) const {
        const auto k = static_cast<std::size_t>(idx);
        return own[k] + (recv_a[k] + recv_b[k]);
    }
};

/// Mean water over a cell and its two same-ring neighbors, from the current
/// s field. Throws std::invalid_argument for the origin.
double triple_average(const GridState& g, AxialCoord z0);

/// For every boundary cell whose two ring neighbors are both non-frozen,
/// adds epsilon * (triple mean - s) for each member of the triple. All
/// triples read the same pre-adjustment s field.
void accumulate_redistribution(const GridState& g, RedistributionBuffer& buf);

/// Adds each cell's accumulated delta to s (and to v or u so s = u + v keeps
/// holding). Total water over the grid is unchanged up to rounding.
void apply_redistribution(GridState& g, const RedistributionBuffer& buf);

}  // namespace snow
