#include "snow/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace snow {

namespace {

constexpr double kTwoThirdsPi = 2.0 * (std::numbers::pi / 3.0);

std::size_t require_cell(const SimTrace& trace, AxialCoord c, const char* who) {
    const int idx = trace.geo->index_of(c);
    if (idx < 0) throw std::out_of_range(std::string(who) + ": cell outside grid");
    return static_cast<std::size_t>(idx);
}

std::size_t require_branch_root(const SimTrace& trace, AxialCoord root, const char* who) {
    if (root.i != 0 || root.j < 0)
        throw std::invalid_argument(std::string(who) + ": root not on the +j main branch");
    const std::size_t idx = require_cell(trace, root, who);
    if (trace.freeze_time[idx] < 0)
        throw std::invalid_argument(std::string(who) + ": root never froze");
    return idx;
}

}  // namespace

std::int64_t latency(const SimTrace& trace, AxialCoord c) {
    const std::size_t idx = require_cell(trace, c, "latency");
    if (trace.freeze_time[idx] < 0) {
        if (trace.first_boundary[idx] < 0)
            throw std::domain_error("latency: cell never became boundary");
        throw std::domain_error("latency: cell became boundary but never froze");
    }
    return trace.freeze_time[idx] - trace.first_boundary[idx];
}

MainBranchSeries main_branch_latency_series(const SimTrace& trace) {
    MainBranchSeries out;
    int j = 1;
    while (trace.frozen({0, j})) {
        out.latencies.emplace_back(j, latency(trace, {0, j}));
        ++j;
    }
    out.max_j = j - 1;
    for (int jj = 0; jj < out.max_j; ++jj) {
        const auto cur = static_cast<std::size_t>(trace.geo->index_of({0, jj}));
        const auto next = static_cast<std::size_t>(trace.geo->index_of({0, jj + 1}));
        if (trace.first_boundary[next] != trace.freeze_time[cur]) {
            out.handoff_exact = false;
            out.handoff_violations.push_back(jj + 1);
        }
    }
    return out;
}

OrderingReport check_growth_ordering(const SimTrace& trace, int k) {
    if (k < 1) throw std::invalid_argument("check_growth_ordering: k must be >= 1");
    OrderingReport rep;
    rep.k = k;
    rep.midpoint = k % 2 == 0 ? AxialCoord{k / 2, k / 2} : AxialCoord{(k - 1) / 2, (k + 1) / 2};

    std::vector<std::pair<AxialCoord, std::int64_t>> diag;
    for (int i = 0; 2 * i <= k; ++i) {
        const AxialCoord c{i, k - i};
        const int idx = trace.geo->index_of(c);
        if (idx < 0 || trace.freeze_time[static_cast<std::size_t>(idx)] < 0) {
            rep.unfrozen.push_back(c);
            continue;
        }
        diag.emplace_back(c, trace.freeze_time[static_cast<std::size_t>(idx)]);
    }
    rep.all_frozen = rep.unfrozen.empty();
    if (diag.empty()) return rep;

    std::int64_t axis_t = -1, mid_t = -1;
    for (const auto& [c, t] : diag) {
        if (c == AxialCoord{0, k}) axis_t = t;
        if (c == rep.midpoint) mid_t = t;
    }
    if (axis_t >= 0) {
        rep.axis_is_min = true;
        for (const auto& [c, t] : diag)
            if (t < axis_t) {
                rep.axis_is_min = false;
                rep.min_violations.push_back(c);
            }
    }
    if (mid_t >= 0 && rep.all_frozen) {
        rep.midpoint_is_max = true;
        for (const auto& [c, t] : diag)
            if (t > mid_t) {
                rep.midpoint_is_max = false;
                rep.max_violations.push_back(c);
            }
    }
    return rep;
}

SideBranch side_branch(const SimTrace& trace, AxialCoord root) {
    require_branch_root(trace, root, "side_branch");
    SideBranch br;
    br.root = root;
    br.cells.push_back(root);
    int i = 1;
    while (trace.frozen({i, root.j})) {
        br.cells.push_back({i, root.j});
        ++i;
    }
    br.length = static_cast<int>(br.cells.size()) - 1;
    br.tip = br.cells.back();
    return br;
}

StraightPath straight_path(const SimTrace& trace, AxialCoord root) {
    require_branch_root(trace, root, "straight_path");
    StraightPath path;
    path.root = root;
    path.cells.push_back(root);
    int i = 1;
    while (true) {
        const AxialCoord c{i, root.j};
        const int idx = trace.geo->index_of(c);
        if (idx < 0 || trace.freeze_time[static_cast<std::size_t>(idx)] < 0) break;
        const std::int32_t src = trace.source[static_cast<std::size_t>(idx)];
        if (src < 0 || trace.geo->coord_of(src) != AxialCoord{i - 1, root.j}) break;
        path.cells.push_back(c);
        ++i;
    }
    path.length = static_cast<int>(path.cells.size()) - 1;
    return path;
}

BranchCluster side_branch_cluster(const SimTrace& trace, AxialCoord root) {
    const StraightPath path = straight_path(trace, root);
    BranchCluster cl;
    cl.root = root;

    const std::size_t n = trace.freeze_time.size();
    // 0 unknown, 1 member, 2 non-member
    std::vector<std::uint8_t> mark(n, 0);
    for (std::size_t k = 1; k < path.cells.size(); ++k)
        mark[static_cast<std::size_t>(trace.geo->index_of(path.cells[k]))] = 1;

    // membership = source chain reaches the off-axis part of the path;
    // memoized walk over the source tree
    std::vector<std::int32_t> chain;
    for (std::size_t i = 0; i < n; ++i) {
        if (trace.freeze_time[i] < 0 || mark[i] != 0) continue;
        chain.clear();
        std::int32_t cur = static_cast<std::int32_t>(i);
        std::uint8_t verdict = 2;
        while (cur >= 0) {
            const auto kc = static_cast<std::size_t>(cur);
            if (mark[kc] != 0) {
                verdict = mark[kc];
                break;
            }
            chain.push_back(cur);
            cur = trace.source[kc];
        }
        for (const std::int32_t c : chain) mark[static_cast<std::size_t>(c)] = verdict;
    }

    cl.cells.push_back(root);
    for (std::size_t i = 0; i < n; ++i)
        if (mark[i] == 1) {
            const AxialCoord c = trace.geo->coord_of(static_cast<int>(i));
            if (c != root) cl.cells.push_back(c);
        }

    for (const AxialCoord c : cl.cells) {
        const int d = hex_distance(c, root);
        if (d > cl.reach) {
            cl.reach = d;
            cl.cells_at_reach = 1;
        } else if (d == cl.reach) {
            ++cl.cells_at_reach;
        }
    }
    cl.reach_equals_straight = cl.reach == path.length;
    return cl;
}

std::vector<std::pair<AxialCoord, DirectionAngle>> direction_trace(const SimTrace& trace) {
    std::vector<std::pair<AxialCoord, DirectionAngle>> out;
    const std::size_t n = trace.first_boundary.size();
    for (std::size_t i = 0; i < n; ++i)
        if (trace.first_boundary[i] >= 0 && trace.angle[i] >= 0)
            out.emplace_back(trace.geo->coord_of(static_cast<int>(i)),
                             static_cast<DirectionAngle>(trace.angle[i]));
    return out;
}

EnvelopeFit fit_envelope(const std::vector<CartesianPoint>& tips, const EnvelopeOptions& opts) {
    const auto lattice_j = [](const CartesianPoint& p) {
        return p.y - p.x / std::numbers::sqrt3;
    };
    const auto in_window = [&](const CartesianPoint& p) {
        const double j = lattice_j(p);
        return j >= opts.min_j && j <= opts.max_j;
    };

    std::vector<CartesianPoint> windowed;
    for (const CartesianPoint& p : tips)
        if (in_window(p)) windowed.push_back(p);
    const std::vector<CartesianPoint> hull = convex_hull(windowed);

    // Off-axis hull vertices form the frontier.
    std::vector<CartesianPoint> support;
    for (const CartesianPoint& p : hull)
        if (p.x > 1e-12) support.push_back(p);
    if (support.size() < 2)
        throw std::domain_error("fit_envelope: fewer than 2 usable frontier tips");

    // least squares for x as a function of y
    double sy = 0.0, sx = 0.0, syy = 0.0, sxy = 0.0;
    for (const CartesianPoint& p : support) {
        sy += p.y;
        sx += p.x;
        syy += p.y * p.y;
        sxy += p.x * p.y;
    }
    const double m = static_cast<double>(support.size());
    const double denom = m * syy - sy * sy;
    if (std::abs(denom) < 1e-12)
        throw std::domain_error("fit_envelope: frontier tips are degenerate in y");

    EnvelopeFit fit;
    fit.slope = (m * sxy - sx * sy) / denom;
    // push the line outward until every kept tip is on or inside it
    double intercept = -std::numeric_limits<double>::infinity();
    for (const CartesianPoint& p : windowed)
        intercept = std::max(intercept, p.x - fit.slope * p.y);
    fit.intercept = intercept;
    fit.theta = std::atan(fit.slope);
    if (fit.theta <= 0.0) fit.theta += std::numbers::pi;
    fit.support = std::move(support);
    return fit;
}

std::vector<CartesianPoint> side_branch_tips(const SimTrace& trace) {
    std::vector<CartesianPoint> tips;
    int j = 1;
    while (trace.frozen({0, j})) {
        tips.push_back(to_cartesian(side_branch(trace, {0, j}).tip));
        ++j;
    }
    return tips;
}

EnvelopeOptions default_envelope_options(const SimTrace& trace) {
    const double r = trace.params.radius;
    return {0.1 * r, 0.9 * r};
}

double latency_ratio(double theta) {
    if (!(theta > 0.0 && theta < kTwoThirdsPi))
        throw std::domain_error("latency_ratio: theta must be in (0, 2pi/3)");
    return std::sin(kTwoThirdsPi - theta) / std::sin(theta);
}

double fill_factor(const SimTrace& trace) {
    std::vector<CartesianPoint> frozen_pts;
    std::int64_t frozen = 0;
    const std::size_t n = trace.freeze_time.size();
    for (std::size_t i = 0; i < n; ++i)
        if (trace.freeze_time[i] >= 0) {
            ++frozen;
            frozen_pts.push_back(to_cartesian(trace.geo->coord_of(static_cast<int>(i))));
        }
    if (frozen == 0) return 1.0;
    const std::vector<CartesianPoint> hull = convex_hull(std::move(frozen_pts));
    if (hull.size() < 3) return 1.0;

    std::int64_t inside = 0;
    for (int i = 0; i < trace.geo->cell_count(); ++i)
        if (polygon_contains(hull, to_cartesian(trace.geo->coord_of(i)))) ++inside;
    return static_cast<double>(frozen) / static_cast<double>(inside);
}

SymmetryReport check_symmetry(const GridState& g, double tol) {
    SymmetryReport rep;
    const HexIndex& geo = g.index();
    const int n = geo.cell_count();
    const auto check_map = [&](auto map_of) {
        for (int i = 0; i < n; ++i) {
            const auto a = static_cast<std::size_t>(i);
            const auto b = static_cast<std::size_t>(map_of(i));
            const double dev = std::max({std::abs(g.s[a] - g.s[b]), std::abs(g.u[a] - g.u[b]),
                                         std::abs(g.v[a] - g.v[b])});
            rep.max_deviation = std::max(rep.max_deviation, dev);
            if (dev > tol && !rep.first_asymmetric) {
                rep.symmetric = false;
                rep.first_asymmetric = geo.coord_of(i);
            }
        }
    };
    check_map([&](int i) { return geo.rotated_of(i); });
    check_map([&](int i) { return geo.reflected_of(i); });
    return rep;
}

bool receptive_set_connected(const GridState& g) {
    const HexIndex& geo = g.index();
    const int n = geo.cell_count();
    const auto receptive = [&](int i) { return g.cls[static_cast<std::size_t>(i)] != CellClass::NonReceptive; };

    const int origin = geo.index_of(kOrigin);
    std::int64_t total = 0;
    for (int i = 0; i < n; ++i)
        if (receptive(i)) ++total;
    if (total == 0) return true;
    if (!receptive(origin)) return false;

    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::int32_t> queue{static_cast<std::int32_t>(origin)};
    seen[static_cast<std::size_t>(origin)] = 1;
    std::int64_t reached = 0;
    while (!queue.empty()) {
        const std::int32_t cur = queue.back();
        queue.pop_back();
        ++reached;
        for (const std::int32_t nb : geo.neighbors_of(cur))
            if (nb >= 0 && !seen[static_cast<std::size_t>(nb)] && receptive(nb)) {
                seen[static_cast<std::size_t>(nb)] = 1;
                queue.push_back(nb);
            }
    }
    return reached == total;
}

}  // namespace snow
