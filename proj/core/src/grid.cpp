#include "snow/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "snow/numeric.hpp"

namespace snow {

void validate(const SimParams& p) {
    if (!(p.alpha > 0.0)) throw std::invalid_argument("SimParams: alpha must be > 0");
    if (!(p.beta > 0.0 && p.beta < 1.0))
        throw std::invalid_argument("SimParams: beta must be in (0, 1)");
    if (!(p.gamma >= 0.0)) throw std::invalid_argument("SimParams: gamma must be >= 0");
    if (!(p.epsilon >= 0.0)) throw std::invalid_argument("SimParams: epsilon must be >= 0");
    if (p.radius < 2) throw std::invalid_argument("SimParams: radius must be >= 2");
    if (p.max_steps < 0) throw std::invalid_argument("SimParams: max_steps must be >= 0");
    if (p.stop_margin < 1) throw std::invalid_argument("SimParams: stop_margin must be >= 1");
}

HexIndex::HexIndex(int radius) : radius_(radius) {
    if (radius < 1) throw std::invalid_argument("HexIndex: radius must be >= 1");
    const int R = radius;
    const std::size_t n = static_cast<std::size_t>(1 + 3 * R * (R + 1));
    coords_.reserve(n);
    row_start_.assign(static_cast<std::size_t>(2 * R + 2), 0);

    // |i| <= R, |j| <= R, |i + j| <= R
    for (int i = -R; i <= R; ++i) {
        row_start_[static_cast<std::size_t>(i + R)] = static_cast<int>(coords_.size());
        const int jlo = std::max(-R, -i - R);
        const int jhi = std::min(R, R - i);
        for (int j = jlo; j <= jhi; ++j) coords_.push_back({i, j});
    }
    row_start_[static_cast<std::size_t>(2 * R + 1)] = static_cast<int>(coords_.size());

    rings_.resize(coords_.size());
    for (std::size_t idx = 0; idx < coords_.size(); ++idx)
        rings_[idx] = static_cast<std::uint16_t>(hex_distance(coords_[idx], kOrigin));

    neighbor_idx_.resize(coords_.size());
    ring_neighbor_idx_.resize(coords_.size());
    rot_idx_.resize(coords_.size());
    refl_idx_.resize(coords_.size());
    for (std::size_t idx = 0; idx < coords_.size(); ++idx) {
        const AxialCoord c = coords_[idx];
        const int ring = rings_[idx];
        const auto nbs = neighbors(c);
        int on_ring = 0;
        ring_neighbor_idx_[idx] = {-1, -1};
        for (std::size_t k = 0; k < 6; ++k) {
            const int nb = index_of(nbs[k]);
            neighbor_idx_[idx][k] = nb;
            if (ring > 0 && nb >= 0 && rings_[static_cast<std::size_t>(nb)] == ring) {
                if (on_ring < 2) ring_neighbor_idx_[idx][on_ring] = static_cast<std::int32_t>(nb);
                ++on_ring;
            }
        }
        rot_idx_[idx] = index_of(rotate60(c));
        refl_idx_[idx] = index_of(reflect(c));
    }
}

bool HexIndex::contains(AxialCoord c) const {
    return hex_distance(c, kOrigin) <= radius_;
}

int HexIndex::index_of(AxialCoord c) const {
    const int R = radius_;
    if (c.i < -R || c.i > R) return -1;
    const int jlo = std::max(-R, -c.i - R);
    const int jhi = std::min(R, R - c.i);
    if (c.j < jlo || c.j > jhi) return -1;
    return row_start_[static_cast<std::size_t>(c.i + R)] + (c.j - jlo);
}

double GridState::water_at(AxialCoord c) const {
    const int idx = geo->index_of(c);
    if (idx < 0) throw std::out_of_range("GridState: cell outside grid");
    return s[static_cast<std::size_t>(idx)];
}

CellClass GridState::class_at(AxialCoord c) const {
    const int idx = geo->index_of(c);
    if (idx < 0) throw std::out_of_range("GridState: cell outside grid");
    return cls[static_cast<std::size_t>(idx)];
}

void GridState::set_water(AxialCoord c, double value) {
    const int idx = geo->index_of(c);
    if (idx < 0) throw std::out_of_range("GridState: cell outside grid");
    s[static_cast<std::size_t>(idx)] = value;
}

double GridState::total_water() const { return stable_sum(s); }

}  // namespace snow
