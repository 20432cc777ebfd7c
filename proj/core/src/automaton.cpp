#include "snow/automaton.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "snow/interface_control.hpp"
#include "snow/numeric.hpp"

namespace snow {

namespace {

inline void sort3(double& a, double& b, double& c) {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
}

// Neighbor sum evaluated as opposite-pair sums combined in sorted order.
// The pair set is permuted into itself by the 60-degree rotation and the
// mirror, and two-operand addition is commutative, so symmetric states
// produce bitwise identical sums at symmetric cells.
inline double neighbor_sum_symmetric(const std::vector<double>& u,
                                     const std::array<std::int32_t, 6>& nb) {
    double p0 = u[static_cast<std::size_t>(nb[0])] + u[static_cast<std::size_t>(nb[3])];
    double p1 = u[static_cast<std::size_t>(nb[1])] + u[static_cast<std::size_t>(nb[4])];
    double p2 = u[static_cast<std::size_t>(nb[2])] + u[static_cast<std::size_t>(nb[5])];
    sort3(p0, p1, p2);
    return (p0 + p1) + p2;
}

}  // namespace

SimTrace SimTrace::empty(std::shared_ptr<const HexIndex> geo, SimParams params) {
    SimTrace tr;
    tr.geo = std::move(geo);
    tr.params = params;
    const std::size_t n = static_cast<std::size_t>(tr.geo->cell_count());
    tr.first_boundary.assign(n, -1);
    tr.freeze_time.assign(n, -1);
    tr.source.assign(n, -1);
    tr.angle.assign(n, -1);
    tr.source_tie.assign(n, 0);
    return tr;
}

bool SimTrace::frozen(AxialCoord c) const {
    const int idx = geo->index_of(c);
    return idx >= 0 && freeze_time[static_cast<std::size_t>(idx)] >= 0;
}

bool SimTrace::ever_boundary(AxialCoord c) const {
    const int idx = geo->index_of(c);
    return idx >= 0 && first_boundary[static_cast<std::size_t>(idx)] >= 0;
}

FreezeEvent SimTrace::freeze_event(AxialCoord c) const {
    const int idx = geo->index_of(c);
    if (idx < 0) throw std::out_of_range("freeze_event: cell outside grid");
    const auto k = static_cast<std::size_t>(idx);
    if (freeze_time[k] < 0) throw std::domain_error("freeze_event: cell never froze");
    FreezeEvent ev;
    ev.cell = c;
    ev.first_boundary = first_boundary[k];
    ev.freeze_time = freeze_time[k];
    ev.has_source = source[k] >= 0;
    if (ev.has_source) {
        ev.source = geo->coord_of(source[k]);
        ev.angle = static_cast<DirectionAngle>(angle[k]);
    }
    return ev;
}

GridState init_state(const SimParams& params) {
    validate(params);
    GridState g;
    g.geo = std::make_shared<HexIndex>(params.radius);
    g.params = params;
    g.t = 0;
    const std::size_t n = static_cast<std::size_t>(g.geo->cell_count());
    g.s.assign(n, params.beta);
    g.s[static_cast<std::size_t>(g.geo->index_of(kOrigin))] = 1.0;
    g.u.assign(n, 0.0);
    g.v.assign(n, 0.0);
    g.cls.assign(n, CellClass::NonReceptive);
    classify_and_partition(g);
    return g;
}

void classify_and_partition(GridState& g) {
    const HexIndex& geo = g.index();
    const std::size_t n = static_cast<std::size_t>(geo.cell_count());
    for (std::size_t i = 0; i < n; ++i) {
        if (geo.is_edge(static_cast<int>(i))) {
            g.cls[i] = CellClass::NonReceptive;
            continue;
        }
        if (g.s[i] >= 1.0) {
            g.cls[i] = CellClass::Frozen;
            continue;
        }
        bool frozen_neighbor = false;
        for (const std::int32_t nb : geo.neighbors_of(static_cast<int>(i))) {
            if (nb >= 0 && g.s[static_cast<std::size_t>(nb)] >= 1.0) {
                frozen_neighbor = true;
                break;
            }
        }
        g.cls[i] = frozen_neighbor ? CellClass::Boundary : CellClass::NonReceptive;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (g.cls[i] == CellClass::NonReceptive) {
            g.u[i] = g.s[i];
            g.v[i] = 0.0;
        } else {
            g.v[i] = g.s[i];
            g.u[i] = 0.0;
        }
    }
}

std::vector<double> add_vapor(const GridState& g) {
    const std::size_t n = g.s.size();
    std::vector<double> v_plus(n);
    const double gamma = g.params.gamma;
    for (std::size_t i = 0; i < n; ++i)
        v_plus[i] = g.cls[i] == CellClass::NonReceptive ? 0.0 : g.v[i] + gamma;
    return v_plus;
}

std::vector<double> diffuse(const GridState& g) {
    const HexIndex& geo = g.index();
    const std::size_t n = g.u.size();
    std::vector<double> u_plus(n);
    const double half_alpha = 0.5 * g.params.alpha;
    const double beta = g.params.beta;
    for (std::size_t i = 0; i < n; ++i) {
        if (geo.is_edge(static_cast<int>(i))) {
            u_plus[i] = beta;
            continue;
        }
        const double mean = neighbor_sum_symmetric(g.u, geo.neighbors_of(static_cast<int>(i))) / 6.0;
        u_plus[i] = g.u[i] + half_alpha * (mean - g.u[i]);
    }
    return u_plus;
}

void combine(GridState& g, std::span<const double> u_plus, std::span<const double> v_plus) {
    const std::size_t n = g.s.size();
    if (u_plus.size() != n || v_plus.size() != n)
        throw std::invalid_argument("combine: field size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        g.u[i] = u_plus[i];
        g.v[i] = v_plus[i];
        g.s[i] = u_plus[i] + v_plus[i];
    }
    ++g.t;
}

StepEvents step(GridState& g, StepDiagnostics* diag) {
    const HexIndex& geo = g.index();
    const std::size_t n = g.s.size();

    classify_and_partition(g);
    std::vector<double> s_before;
    if (diag) s_before = g.s;

    const std::vector<double> v_plus = add_vapor(g);
    const std::vector<double> u_plus = diffuse(g);
    combine(g, u_plus, v_plus);

    double drift = 0.0;
    if (g.params.epsilon > 0.0) {
        const double before = stable_sum(g.s);
        RedistributionBuffer buf;
        accumulate_redistribution(g, buf);
        apply_redistribution(g, buf);
        drift = std::abs(stable_sum(g.s) - before);
    }

    // Event detection against the finished post-step field. g.cls still
    // holds the classification from the start of this step.
    StepEvents ev;
    for (std::size_t i = 0; i < n; ++i)
        if (g.s[i] >= 1.0 && g.cls[i] != CellClass::Frozen)
            ev.frozen.push_back(static_cast<std::int32_t>(i));

    std::vector<std::int32_t> candidates;
    for (const std::int32_t f : ev.frozen)
        for (const std::int32_t nb : geo.neighbors_of(f))
            if (nb >= 0 && g.s[static_cast<std::size_t>(nb)] < 1.0) candidates.push_back(nb);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const std::int32_t c : candidates) {
        bool had_frozen_neighbor = false;
        for (const std::int32_t nb : geo.neighbors_of(c)) {
            if (nb >= 0 && g.cls[static_cast<std::size_t>(nb)] == CellClass::Frozen) {
                had_frozen_neighbor = true;
                break;
            }
        }
        if (had_frozen_neighbor) continue;  // was boundary before this step

        BoundaryHit hit;
        hit.cell = c;
        int found = 0;
        for (const DirectionAngle a : kSourceTieBreakOrder) {
            const std::int32_t nb = geo.neighbors_of(c)[static_cast<std::size_t>(a)];
            if (nb >= 0 && g.s[static_cast<std::size_t>(nb)] >= 1.0) {
                if (found == 0) {
                    hit.source = nb;
                    hit.angle = a;
                }
                ++found;
            }
        }
        hit.tie = found > 1;
        ev.became_boundary.push_back(hit);
    }

    if (diag) {
        diag->t = g.t;
        diag->redistribution_drift = drift;
        diag->total_water = stable_sum(g.s);
        std::int32_t frozen_cells = 0;
        std::int32_t max_ring = 0;
        double growth_err = 0.0;
        std::int32_t nr_gain = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (g.s[i] >= 1.0) {
                ++frozen_cells;
                max_ring = std::max(max_ring, static_cast<std::int32_t>(geo.ring_of(static_cast<int>(i))));
            }
            const double ds = g.s[i] - s_before[i];
            if (g.cls[i] == CellClass::Frozen)
                growth_err = std::max(growth_err, std::abs(ds - g.params.gamma));
            else if (g.cls[i] == CellClass::NonReceptive && !geo.is_edge(static_cast<int>(i)) &&
                     ds > 1e-15)
                ++nr_gain;
        }
        diag->frozen_cells = frozen_cells;
        diag->max_frozen_ring = max_ring;
        diag->frozen_growth_error = growth_err;
        diag->nr_water_gain_cells = nr_gain;
    }
    return ev;
}

TraceRecorder::TraceRecorder(const GridState& initial)
    : trace_(SimTrace::empty(initial.geo, initial.params)) {
    // t = 0 records: the seed counts as frozen and boundary at time 0, and
    // its six neighbors become boundary with the seed as source.
    const HexIndex& geo = *initial.geo;
    const int origin = geo.index_of(kOrigin);
    trace_.first_boundary[static_cast<std::size_t>(origin)] = 0;
    trace_.freeze_time[static_cast<std::size_t>(origin)] = 0;
    for (const std::int32_t nb : geo.neighbors_of(origin)) {
        const auto k = static_cast<std::size_t>(nb);
        trace_.first_boundary[k] = 0;
        trace_.source[k] = origin;
        trace_.angle[k] =
            static_cast<std::int8_t>(direction_angle(geo.coord_of(nb), kOrigin));
    }
}

void TraceRecorder::absorb(const GridState& g, const StepEvents& events,
                           const StepDiagnostics& diag) {
    const HexIndex& geo = *g.geo;
    for (const BoundaryHit& hit : events.became_boundary) {
        const auto k = static_cast<std::size_t>(hit.cell);
        trace_.first_boundary[k] = g.t;
        trace_.source[k] = hit.source;
        trace_.angle[k] = static_cast<std::int8_t>(hit.angle);
        trace_.source_tie[k] = hit.tie ? 1 : 0;
    }
    for (const std::int32_t f : events.frozen) {
        const auto k = static_cast<std::size_t>(f);
        trace_.freeze_time[k] = g.t;
        if (trace_.first_boundary[k] < 0) {
            // froze in the same step it gained a frozen neighbor
            trace_.first_boundary[k] = g.t;
            int found = 0;
            for (const DirectionAngle a : kSourceTieBreakOrder) {
                const std::int32_t nb = geo.neighbors_of(f)[static_cast<std::size_t>(a)];
                if (nb >= 0 && g.s[static_cast<std::size_t>(nb)] >= 1.0 && nb != f) {
                    if (found == 0) {
                        trace_.source[k] = nb;
                        trace_.angle[k] = static_cast<std::int8_t>(a);
                    }
                    ++found;
                }
            }
            trace_.source_tie[k] = found > 1 ? 1 : 0;
        }
    }
    trace_.diagnostics.push_back(diag);
}

SimTrace TraceRecorder::finish(GridState&& final_state, StopReason reason) {
    trace_.steps = final_state.t;
    trace_.stop_reason = reason;
    trace_.final_state = std::move(final_state);
    return std::move(trace_);
}

SimTrace run(const SimParams& params) {
    validate(params);
    GridState g = init_state(params);
    TraceRecorder recorder(g);

    StopReason reason = StopReason::BudgetExhausted;
    const int stop_ring = params.radius - params.stop_margin;
    while (g.t < params.max_steps) {
        StepDiagnostics d;
        const StepEvents ev = step(g, &d);
        recorder.absorb(g, ev, d);
        if (d.max_frozen_ring >= stop_ring) {
            reason = StopReason::MarginReached;
            break;
        }
    }
    return recorder.finish(std::move(g), reason);
}

}  // namespace snow
