#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "snow/hex.hpp"
#include "snow/params.hpp"

namespace snow {

/// Per-cell classification, recomputed once per step from the current s
/// field. Receptive = Frozen or Boundary.
enum class CellClass : std::uint8_t {
    Frozen,         ///< s >= 1
    Boundary,       ///< not frozen, at least one frozen neighbor
    NonReceptive,   ///< everything else; edge cells are always here
};

/// Geometry and index tables for the hexagon of cells with distance <= R
/// from the origin (1 + 3R(R+1) cells). Rows are laid out by i; everything
/// here is immutable after construction and shared between states of a run.
class HexIndex {
public:
    explicit HexIndex(int radius);

    int radius() const { return radius_; }
    int cell_count() const { return static_cast<int>(coords_.size()); }

    bool contains(AxialCoord c) const;
    /// Dense index of a cell, or -1 if outside the hexagon.
    int index_of(AxialCoord c) const;
    AxialCoord coord_of(int idx) const { return coords_[static_cast<std::size_t>(idx)]; }

    /// Distance from the origin (the ring the cell sits on).
    int ring_of(int idx) const { return rings_[static_cast<std::size_t>(idx)]; }
    bool is_edge(int idx) const { return ring_of(idx) == radius_; }

    /// Neighbor indices in the fixed offset order; -1 where the neighbor
    /// falls outside the grid (only happens for edge cells).
    const std::array<std::int32_t, 6>& neighbors_of(int idx) const {
        return neighbor_idx_[static_cast<std::size_t>(idx)];
    }

    /// Indices of the two same-ring neighbors; {-1, -1} for the origin.
    const std::array<std::int32_t, 2>& ring_neighbors_of(int idx) const {
        return ring_neighbor_idx_[static_cast<std::size_t>(idx)];
    }

    /// Index maps of the 60-degree rotation and the j-axis mirror (the
    /// hexagon is closed under both).
    int rotated_of(int idx) const { return rot_idx_[static_cast<std::size_t>(idx)]; }
    int reflected_of(int idx) const { return refl_idx_[static_cast<std::size_t>(idx)]; }

private:
    int radius_;
    std::vector<int> row_start_;                          // per i + R
    std::vector<AxialCoord> coords_;
    std::vector<std::uint16_t> rings_;
    std::vector<std::array<std::int32_t, 6>> neighbor_idx_;
    std::vector<std::array<std::int32_t, 2>> ring_neighbor_idx_;
    std::vector<std::int32_t> rot_idx_;
    std::vector<std::int32_t> refl_idx_;
};

/// Full synchronous automaton state at one step boundary. s = u + v holds
/// cell-wise; cls is the classification used by the step that produced this
/// state (the next step re-derives it from s).
struct GridState {
    std::shared_ptr<const HexIndex> geo;
    SimParams params;
    std::int64_t t = 0;
    std::vector<double> s;
    std::vector<double> u;
    std::vector<double> v;
    std::vector<CellClass> cls;

    const HexIndex& index() const { return *geo; }
    int cell_count() const { return geo->cell_count(); }

    double water_at(AxialCoord c) const;
    CellClass class_at(AxialCoord c) const;
    /// Overwrites s of one cell (test and perturbation hook); u/v are
    /// re-derived by the next classify_and_partition.
    void set_water(AxialCoord c, double value);

    /// Compensated sum of s over the whole grid.
    double total_water() const;
};

}  // namespace snow
