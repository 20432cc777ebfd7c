#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "snow/geometry.hpp"

namespace snow {

// Lattice coordinate conventions
// ------------------------------
// A cell is addressed by integer axial coordinates (i, j). The two lattice
// axes meet at 60 degrees: in the Cartesian embedding the i-axis unit step
// points at +30 degrees and the j-axis unit step points straight up, so
//
//     p(i, j) = (i * sqrt(3)/2,  i/2 + j).
//
// The graph distance from the origin of a cell (i, j) is
// (|i| + |j| + |i+j|) / 2; the cells with i + j = K and j >= i >= 0 all sit
// exactly K sites from the origin, and the wedge j >= i >= 0 spans one
// twelfth of the plane.

/// Integer axial coordinate of a lattice cell.
struct AxialCoord {
    int i = 0;
    int j = 0;

    friend bool operator==(const AxialCoord&, const AxialCoord&) = default;
    friend AxialCoord operator+(AxialCoord a, AxialCoord b) { return {a.i + b.i, a.j + b.j}; }
    friend AxialCoord operator-(AxialCoord a, AxialCoord b) { return {a.i - b.i, a.j - b.j}; }
};

constexpr AxialCoord kOrigin{0, 0};

/// The six neighbor offsets in fixed order.
constexpr std::array<AxialCoord, 6> kNeighborOffsets = {{
    {+1, 0}, {0, +1}, {-1, +1}, {-1, 0}, {0, -1}, {+1, -1},
}};

/// Orientation of a source cell relative to its destination, measured from
/// the horizontal axis of the Cartesian embedding. Exactly six values.
enum class DirectionAngle : std::uint8_t {
    P30 = 0,   // +30, offset (+1, 0)
    P90 = 1,   // +90, offset (0, +1)
    P150 = 2,  // +150, offset (-1, +1)
    M150 = 3,  // -150, offset (-1, 0)
    M90 = 4,   // -90, offset (0, -1)
    M30 = 5,   // -30, offset (+1, -1)
};

/// Signed degrees of a DirectionAngle (+30, +90, +150, -150, -90, -30).
int angle_degrees(DirectionAngle a);

/// The neighbor offset a DirectionAngle corresponds to.
AxialCoord angle_offset(DirectionAngle a);

/// Fixed tie-break order used when several source candidates froze in the
/// same step: -150, -90, -30, +30, +90, +150.
constexpr std::array<DirectionAngle, 6> kSourceTieBreakOrder = {
    DirectionAngle::M150, DirectionAngle::M90, DirectionAngle::M30,
    DirectionAngle::P30,  DirectionAngle::P90, DirectionAngle::P150,
};

/// The six neighbors of c, in the fixed offset order.
std::array<AxialCoord, 6> neighbors(AxialCoord c);

/// Graph distance between two cells: (|di| + |dj| + |di+dj|) / 2.
int hex_distance(AxialCoord a, AxialCoord b);

/// All cells at graph distance r from the origin (1 cell for r = 0,
/// otherwise 6r), in a fixed deterministic order.
std::vector<AxialCoord> ring_cells(int r);

/// The two neighbors of c that lie on the same origin-centered ring as c.
/// Throws std::invalid_argument for the origin.
std::pair<AxialCoord, AxialCoord> ring_neighbors(AxialCoord c);

/// Orientation of src as seen from dest; src must be one of the six
/// neighbors of dest or std::invalid_argument is thrown.
DirectionAngle direction_angle(AxialCoord dest, AxialCoord src);

/// Cartesian embedding p(i, j) = (i * sqrt(3)/2, i/2 + j).
CartesianPoint to_cartesian(AxialCoord c);

/// 60-degree counterclockwise rotation about the origin.
AxialCoord rotate60(AxialCoord c);

/// Mirror across the vertical j-axis of the embedding.
AxialCoord reflect(AxialCoord c);

}  // namespace snow
