#pragma once

#include <cstdint>
#include <vector>

namespace snow {

/// Parameters of the 1D line automaton: cells z_0 .. z_n, where z_n is the
/// edge cell held at beta and z_0 starts frozen.
struct LineParams {
    int n = 50;
    double alpha = 1.0;
    double beta = 0.4;
    double gamma = 0.001;
    std::int64_t max_steps = 1'000'000;
};

void validate(const LineParams& params);

/// Closed-form steady vapour profile (i - k)/(n - k) * beta on the segment
/// with a frozen front at k: zero at i = k, beta at i = n. Requires
/// k <= i <= n and k < n.
double steady_vapor(int i, int k, int n, double beta);

/// Independent route to the same profile: relaxes the two-neighbor
/// averaging equation with the same boundary conditions by fixed-point
/// iteration until the returned values are within tol of the fixed point.
/// Returns the profile over i = k .. n (n - k + 1 values). Throws
/// std::runtime_error if the iteration budget is exhausted first.
std::vector<double> steady_vapor_relaxed(int k, int n, double beta, double tol,
                                         std::int64_t max_iters = 0);

/// Predicted per-step accumulation at the growing cell:
/// (alpha/4) * beta / (n - k) + gamma.
double predicted_accumulation(int k, int n, double alpha, double beta, double gamma);

/// Predicted growth latency (1 - beta/(n-k+1)) / predicted_accumulation.
double predicted_latency(int k, int n, double alpha, double beta, double gamma);

/// Result of a line run. Exactly one boundary cell exists at any time, so
/// per-step accumulation at the growing cell is recorded as one series per
/// cell index.
struct LineTrace {
    LineParams params;
    std::vector<std::int64_t> first_boundary;        ///< B, -1 = never
    std::vector<std::int64_t> freeze_time;           ///< T, -1 = never
    std::vector<std::vector<double>> accumulation;   ///< ds per step of [B, T)
    std::int64_t steps = 0;
    bool completed = false;  ///< all of z_0 .. z_{n-1} froze in budget

    std::int64_t latency(int k) const;  ///< T - B; throws if k never froze
    int frozen_count() const;
};

/// Runs the line automaton until every non-edge cell froze or the budget
/// runs out.
LineTrace simulate_line(const LineParams& params);

/// One row of the simulation-vs-prediction table.
struct LineComparisonRow {
    int k = 0;
    std::int64_t first_boundary = 0;
    std::int64_t freeze_time = 0;
    std::int64_t latency = 0;
    double predicted_latency = 0.0;
    double predicted_accumulation = 0.0;
    double ds_first = 0.0;
    double ds_min = 0.0;
    double ds_max = 0.0;
    bool latency_below_prediction = false;       ///< L < L-hat
    bool accumulation_above_prediction = false;  ///< ds-hat <= ds at every step
};

/// Joint table for every frozen cell k >= 1 of a finished trace.
std::vector<LineComparisonRow> compare_line_model(const LineTrace& trace);

/// Convenience: simulate then tabulate.
std::vector<LineComparisonRow> compare_line_model(const LineParams& params);

}  // namespace snow
