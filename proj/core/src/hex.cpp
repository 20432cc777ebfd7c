#include "snow/hex.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace snow {

namespace {

// Degrees for each DirectionAngle, indexed by the enum value.
constexpr std::array<int, 6> kDegrees = {+30, +90, +150, -150, -90, -30};

}  // namespace

int angle_degrees(DirectionAngle a) { return kDegrees[static_cast<std::size_t>(a)]; }

AxialCoord angle_offset(DirectionAngle a) {
    return kNeighborOffsets[static_cast<std::size_t>(a)];
}

std::array<AxialCoord, 6> neighbors(AxialCoord c) {
    std::array<AxialCoord, 6> out;
    for (std::size_t k = 0; k < 6; ++k) out[k] = c + kNeighborOffsets[k];
    return out;
}

int hex_distance(AxialCoord a, AxialCoord b) {
    const int di = a.i - b.i;
    const int dj = a.j - b.j;
    return (std::abs(di) + std::abs(dj) + std::abs(di + dj)) / 2;
}

std::vector<AxialCoord> ring_cells(int r) {
    if (r < 0) throw std::invalid_argument("ring_cells: negative radius");
    if (r == 0) return {kOrigin};
    std::vector<AxialCoord> out;
    out.reserve(static_cast<std::size_t>(6 * r));
    for (int i = -r; i <= r; ++i)
        for (int j = -r; j <= r; ++j)
            if (hex_distance({i, j}, kOrigin) == r) out.push_back({i, j});
    return out;
}

std::pair<AxialCoord, AxialCoord> ring_neighbors(AxialCoord c) {
    if (c == kOrigin)
        throw std::invalid_argument("ring_neighbors: origin has no ring neighbors");
    const int r = hex_distance(c, kOrigin);
    AxialCoord found[2];
    int n = 0;
    for (AxialCoord nb : neighbors(c)) {
        if (hex_distance(nb, kOrigin) == r) {
            if (n < 2) found[n] = nb;
            ++n;
        }
    }
    if (n != 2)
        throw std::logic_error("ring_neighbors: cell does not have exactly 2 on-ring neighbors");
    return {found[0], found[1]};
}

DirectionAngle direction_angle(AxialCoord dest, AxialCoord src) {
    const AxialCoord off = src - dest;
    for (std::size_t k = 0; k < 6; ++k)
        if (off == kNeighborOffsets[k]) return static_cast<DirectionAngle>(k);
    throw std::invalid_argument("direction_angle: cells are not adjacent");
}

CartesianPoint to_cartesian(AxialCoord c) {
    constexpr double kHalfSqrt3 = 0.86602540378443864676;
    return {c.i * kHalfSqrt3, 0.5 * c.i + c.j};
}

AxialCoord rotate60(AxialCoord c) { return {-c.j, c.i + c.j}; }

AxialCoord reflect(AxialCoord c) { return {-c.i, c.i + c.j}; }

}  // namespace snow
