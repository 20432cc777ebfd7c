#include "snow/interface_control.hpp"

#include <stdexcept>

namespace snow {

void RedistributionBuffer::reset(std::size_t cells) {
    own.assign(cells, 0.0);
    recv_a.assign(cells, 0.0);
    recv_b.assign(cells, 0.0);
}

double triple_average(const GridState& g, AxialCoord z0) {
    const int idx = g.geo->index_of(z0);
    if (idx < 0) throw std::out_of_range("triple_average: cell outside grid");
    if (z0 == kOrigin)
        throw std::invalid_argument("triple_average: origin has no ring neighbors");
    const auto& rn = g.geo->ring_neighbors_of(idx);
    const auto a = static_cast<std::size_t>(rn[0]);
    const auto b = static_cast<std::size_t>(rn[1]);
    const auto z = static_cast<std::size_t>(idx);
    return (g.s[z] + (g.s[a] + g.s[b])) / 3.0;
}

void accumulate_redistribution(const GridState& g, RedistributionBuffer& buf) {
    const HexIndex& geo = g.index();
    const std::size_t n = static_cast<std::size_t>(geo.cell_count());
    buf.reset(n);
    const double eps = g.params.epsilon;

    // recv slot of `cell` owned by contributor `from`
    auto recv_slot = [&](std::int32_t cell, std::int32_t from) -> double& {
        const auto k = static_cast<std::size_t>(cell);
        return geo.ring_neighbors_of(cell)[0] == from ? buf.recv_a[k] : buf.recv_b[k];
    };

    for (std::size_t z0 = 0; z0 < n; ++z0) {
        if (g.cls[z0] != CellClass::Boundary) continue;
        const auto& rn = geo.ring_neighbors_of(static_cast<int>(z0));
        const std::int32_t a = rn[0], b = rn[1];
        if (g.cls[static_cast<std::size_t>(a)] == CellClass::Frozen ||
            g.cls[static_cast<std::size_t>(b)] == CellClass::Frozen)
            continue;
        const double sz = g.s[z0];
        const double sa = g.s[static_cast<std::size_t>(a)];
        const double sb = g.s[static_cast<std::size_t>(b)];
        const double mean = (sz + (sa + sb)) / 3.0;
        buf.own[z0] = eps * (mean - sz);
        recv_slot(a, static_cast<std::int32_t>(z0)) = eps * (mean - sa);
        recv_slot(b, static_cast<std::int32_t>(z0)) = eps * (mean - sb);
    }
}

void apply_redistribution(GridState& g, const RedistributionBuffer& buf) {
    const std::size_t n = g.s.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double d = buf.own[i] + (buf.recv_a[i] + buf.recv_b[i]);
        g.s[i] += d;
        // keep s = u + v observable between steps
        if (g.cls[i] == CellClass::NonReceptive)
            g.u[i] += d;
        else
            g.v[i] += d;
    }
}

}  // namespace snow
