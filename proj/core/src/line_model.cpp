#include "snow/line_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace snow {

void validate(const LineParams& p) {
    if (p.n < 2) throw std::invalid_argument("LineParams: n must be >= 2");
    if (!(p.alpha > 0.0)) throw std::invalid_argument("LineParams: alpha must be > 0");
    if (!(p.beta > 0.0 && p.beta < 1.0))
        throw std::invalid_argument("LineParams: beta must be in (0, 1)");
    if (!(p.gamma >= 0.0)) throw std::invalid_argument("LineParams: gamma must be >= 0");
    if (p.max_steps < 0) throw std::invalid_argument("LineParams: max_steps must be >= 0");
}

double steady_vapor(int i, int k, int n, double beta) {
    if (k >= n) throw std::domain_error("steady_vapor: requires k < n");
    if (i < k || i > n) throw std::domain_error("steady_vapor: requires k <= i <= n");
    return static_cast<double>(i - k) / static_cast<double>(n - k) * beta;
}

std::vector<double> steady_vapor_relaxed(int k, int n, double beta, double tol,
                                         std::int64_t max_iters) {
    if (k >= n) throw std::domain_error("steady_vapor_relaxed: requires k < n");
    if (!(tol > 0.0)) throw std::invalid_argument("steady_vapor_relaxed: tol must be > 0");
    const int m = n - k;  // segment length, profile has m + 1 points
    if (max_iters == 0) max_iters = 40LL * m * m + 10'000;

    // Jacobi converges through the slowest mode, whose error exceeds the
    // equation residual by about 2 m^2 / pi^2, so the stop threshold is the
    // requested tolerance divided by that factor.
    const double pi2 = std::numbers::pi * std::numbers::pi;
    const double residual_target =
        std::max(tol * pi2 / (2.0 * static_cast<double>(m) * static_cast<double>(m)), 1e-16);

    std::vector<double> cur(static_cast<std::size_t>(m + 1), 0.0);
    std::vector<double> next(cur.size());
    cur.back() = beta;
    next.front() = 0.0;
    next.back() = beta;
    for (std::int64_t it = 0; it < max_iters; ++it) {
        double residual = 0.0;
        for (int i = 1; i < m; ++i) {
            const auto z = static_cast<std::size_t>(i);
            next[z] = 0.5 * (cur[z - 1] + cur[z + 1]);
            residual = std::max(residual, std::abs(next[z] - cur[z]));
        }
        cur.swap(next);
        if (residual < residual_target) return cur;
    }
    throw std::runtime_error("steady_vapor_relaxed: no convergence within iteration budget");
}

double predicted_accumulation(int k, int n, double alpha, double beta, double gamma) {
    if (k >= n) throw std::domain_error("predicted_accumulation: requires k < n");
    return 0.25 * alpha * beta / static_cast<double>(n - k) + gamma;
}

double predicted_latency(int k, int n, double alpha, double beta, double gamma) {
    if (k >= n) throw std::domain_error("predicted_latency: requires k < n");
    const double denom = predicted_accumulation(k, n, alpha, beta, gamma);
    if (!(denom > 0.0)) throw std::domain_error("predicted_latency: zero accumulation");
    return (1.0 - beta / static_cast<double>(n - k + 1)) / denom;
}

std::int64_t LineTrace::latency(int k) const {
    const auto z = static_cast<std::size_t>(k);
    if (k < 0 || z >= freeze_time.size() || freeze_time[z] < 0)
        throw std::domain_error("LineTrace::latency: cell " + std::to_string(k) +
                                " never froze");
    return freeze_time[z] - first_boundary[z];
}

int LineTrace::frozen_count() const {
    return static_cast<int>(
        std::count_if(freeze_time.begin(), freeze_time.end(), [](auto t) { return t >= 0; }));
}

LineTrace simulate_line(const LineParams& params) {
    validate(params);
    const int n = params.n;
    const std::size_t cells = static_cast<std::size_t>(n + 1);

    enum class Cls : unsigned char { Frozen, Boundary, NonReceptive };
    std::vector<double> s(cells, params.beta), u(cells, 0.0), v(cells, 0.0);
    std::vector<double> u_plus(cells), v_plus(cells);
    std::vector<Cls> cls(cells, Cls::NonReceptive);
    s[0] = 1.0;

    LineTrace tr;
    tr.params = params;
    tr.first_boundary.assign(cells, -1);
    tr.freeze_time.assign(cells, -1);
    tr.accumulation.assign(cells, {});
    tr.first_boundary[0] = 0;
    tr.freeze_time[0] = 0;
    if (n >= 1) tr.first_boundary[1] = 0;

    const double half_alpha = 0.5 * params.alpha;
    std::int64_t t = 0;
    int frozen = 1;
    while (t < params.max_steps && frozen < n) {
        // classify and partition; the edge cell z_n is always nonreceptive
        for (std::size_t i = 0; i < cells; ++i) {
            if (i == cells - 1) {
                cls[i] = Cls::NonReceptive;
            } else if (s[i] >= 1.0) {
                cls[i] = Cls::Frozen;
            } else {
                const bool fnb = (i > 0 && s[i - 1] >= 1.0) || s[i + 1] >= 1.0;
                cls[i] = fnb ? Cls::Boundary : Cls::NonReceptive;
            }
            if (cls[i] == Cls::NonReceptive) {
                u[i] = s[i];
                v[i] = 0.0;
            } else {
                v[i] = s[i];
                u[i] = 0.0;
            }
        }

        int growing = -1;  // the unique boundary cell
        for (std::size_t i = 0; i < cells; ++i)
            if (cls[i] == Cls::Boundary) growing = static_cast<int>(i);

        for (std::size_t i = 0; i < cells; ++i) {
            v_plus[i] = cls[i] == Cls::NonReceptive ? 0.0 : v[i] + params.gamma;
            if (i == cells - 1) {
                u_plus[i] = params.beta;
            } else {
                const double mean = i == 0 ? u[1] : 0.5 * (u[i - 1] + u[i + 1]);
                u_plus[i] = u[i] + half_alpha * (mean - u[i]);
            }
        }

        const double s_growing_before = growing >= 0 ? s[static_cast<std::size_t>(growing)] : 0.0;
        for (std::size_t i = 0; i < cells; ++i) {
            u[i] = u_plus[i];
            v[i] = v_plus[i];
            s[i] = u_plus[i] + v_plus[i];
        }
        ++t;

        if (growing >= 0) {
            const auto z = static_cast<std::size_t>(growing);
            tr.accumulation[z].push_back(s[z] - s_growing_before);
            if (s[z] >= 1.0) {
                tr.freeze_time[z] = t;
                ++frozen;
                if (growing + 1 < n) tr.first_boundary[z + 1] = t;
            }
        }
    }
    tr.steps = t;
    tr.completed = frozen == n;
    return tr;
}

std::vector<LineComparisonRow> compare_line_model(const LineTrace& trace) {
    const LineParams& p = trace.params;
    std::vector<LineComparisonRow> rows;
    for (int k = 1; k < p.n; ++k) {
        const auto z = static_cast<std::size_t>(k);
        if (trace.freeze_time[z] < 0) break;
        LineComparisonRow row;
        row.k = k;
        row.first_boundary = trace.first_boundary[z];
        row.freeze_time = trace.freeze_time[z];
        row.latency = trace.latency(k);
        row.predicted_latency = predicted_latency(k, p.n, p.alpha, p.beta, p.gamma);
        row.predicted_accumulation = predicted_accumulation(k, p.n, p.alpha, p.beta, p.gamma);
        const auto& ds = trace.accumulation[z];
        if (!ds.empty()) {
            row.ds_first = ds.front();
            row.ds_min = *std::min_element(ds.begin(), ds.end());
            row.ds_max = *std::max_element(ds.begin(), ds.end());
        }
        row.latency_below_prediction =
            static_cast<double>(row.latency) < row.predicted_latency;
        row.accumulation_above_prediction = row.ds_min >= row.predicted_accumulation;
        rows.push_back(row);
    }
    return rows;
}

std::vector<LineComparisonRow> compare_line_model(const LineParams& params) {
    return compare_line_model(simulate_line(params));
}

}  // namespace snow
