#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "snow/line_model.hpp"

using namespace snow;

TEST_CASE("steady_vapor boundary conditions and the worked value") {
    CHECK(steady_vapor(25, 25, 50, 0.4) == 0.0);
    CHECK(steady_vapor(50, 25, 50, 0.4) == 0.4);
    CHECK(steady_vapor(30, 25, 50, 0.4) == doctest::Approx(0.08).epsilon(1e-15));
    CHECK_THROWS_AS(steady_vapor(24, 25, 50, 0.4), std::domain_error);
    CHECK_THROWS_AS(steady_vapor(51, 25, 50, 0.4), std::domain_error);
    CHECK_THROWS_AS(steady_vapor(50, 50, 50, 0.4), std::domain_error);
}

TEST_CASE("relaxed profile agrees with the closed form") {
    const auto profile = steady_vapor_relaxed(25, 50, 0.4, 1e-12);
    REQUIRE(profile.size() == 26);
    for (int i = 25; i <= 50; ++i)
        CHECK(std::abs(profile[i - 25] - steady_vapor(i, 25, 50, 0.4)) < 1e-10);
}

TEST_CASE("relaxed profile: shortest segment and monotonicity") {
    const auto p2 = steady_vapor_relaxed(0, 2, 0.4, 1e-12);
    REQUIRE(p2.size() == 3);
    CHECK(p2[0] == 0.0);
    CHECK(p2[1] == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(p2[2] == 0.4);

    const auto p = steady_vapor_relaxed(10, 60, 0.35, 1e-12);
    for (std::size_t i = 1; i < p.size(); ++i) CHECK(p[i] >= p[i - 1]);
}

TEST_CASE("relaxed profile rejects a hopeless iteration budget") {
    CHECK_THROWS_AS(steady_vapor_relaxed(0, 120, 0.4, 1e-12, 10), std::runtime_error);
}

TEST_CASE("predicted accumulation: worked value and monotonicity in k") {
    CHECK(predicted_accumulation(25, 50, 1.0, 0.4, 0.001) ==
          doctest::Approx(0.005).epsilon(1e-15));
    for (int k = 1; k < 49; ++k)
        CHECK(predicted_accumulation(k + 1, 50, 1.0, 0.4, 0.001) >
              predicted_accumulation(k, 50, 1.0, 0.4, 0.001));
    CHECK(predicted_accumulation(10, 50, 1.0, 0.0, 0.0) == 0.0);
}

TEST_CASE("predicted latency: worked value, monotone drop, gamma domination") {
    CHECK(predicted_latency(25, 50, 1.0, 0.4, 0.001) ==
          doctest::Approx(196.92307692307693).epsilon(1e-12));
    for (int k = 1; k < 49; ++k)
        CHECK(predicted_latency(k + 1, 50, 1.0, 0.4, 0.001) <
              predicted_latency(k, 50, 1.0, 0.4, 0.001));
    CHECK(predicted_latency(25, 50, 1.0, 0.4, 1e9) < 1e-8);
    CHECK_THROWS_AS(predicted_latency(50, 50, 1.0, 0.4, 0.001), std::domain_error);
}

TEST_CASE("simulate_line: the front advances one cell at a time") {
    LineParams p;
    const LineTrace tr = simulate_line(p);
    REQUIRE(tr.completed);
    CHECK(tr.frozen_count() == 50);
    for (int k = 1; k < 50; ++k) {
        CHECK(tr.freeze_time[k - 1] == tr.first_boundary[k]);
        CHECK(tr.freeze_time[k] > tr.freeze_time[k - 1]);
    }
    // the edge cell never freezes or becomes boundary
    CHECK(tr.freeze_time[50] == -1);
    CHECK(tr.first_boundary[50] == -1);
}

TEST_CASE("simulate_line: accumulation at mid-line starts high, then flattens") {
    LineParams p;
    const LineTrace tr = simulate_line(p);
    const auto& ds = tr.accumulation[25];
    REQUIRE(ds.size() == static_cast<std::size_t>(tr.latency(25)));
    const double dhat = predicted_accumulation(25, p.n, p.alpha, p.beta, p.gamma);
    CHECK(ds.front() > dhat);
    CHECK(ds.front() > 1.5 * ds.back());  // early spike well above the plateau
    CHECK(ds[7] < 0.75 * ds.front());     // the spike decays within a few steps
    // late-window flatness: last quarter varies by a few percent
    const std::size_t q = ds.size() / 4;
    const double lo = *std::min_element(ds.end() - q, ds.end());
    const double hi = *std::max_element(ds.end() - q, ds.end());
    CHECK((hi - lo) / lo < 0.05);
}

TEST_CASE("simulate_line: latency rises, peaks early, then falls") {
    LineParams p;
    const LineTrace tr = simulate_line(p);
    std::vector<std::int64_t> lat;
    for (int k = 1; k < p.n; ++k) lat.push_back(tr.latency(k));
    const auto peak = std::max_element(lat.begin(), lat.end());
    const auto peak_idx = static_cast<std::size_t>(peak - lat.begin());
    CHECK(peak_idx < lat.size() / 2);
    for (std::size_t i = 0; i < peak_idx; ++i) CHECK(lat[i] <= lat[i + 1]);
    for (std::size_t i = peak_idx; i + 1 < lat.size(); ++i) CHECK(lat[i] >= lat[i + 1]);
}

TEST_CASE("simulate_line honors a tiny budget") {
    LineParams p;
    p.max_steps = 10;
    const LineTrace tr = simulate_line(p);
    CHECK_FALSE(tr.completed);
    CHECK(tr.steps == 10);
}

TEST_CASE("comparison table: bounds and row count at the reference parameters") {
    LineParams p;
    const LineTrace tr = simulate_line(p);
    const auto rows = compare_line_model(tr);
    CHECK(rows.size() == static_cast<std::size_t>(tr.frozen_count() - 1));
    // L < L-hat away from the edge; the last cells can exceed the
    // prediction by under one step (integer latencies, tight bound)
    for (const auto& row : rows) {
        if (row.k <= 45) {
            CHECK(row.latency_below_prediction);
            CHECK(static_cast<double>(row.latency) < row.predicted_latency);
        } else if (!row.latency_below_prediction) {
            CHECK(static_cast<double>(row.latency) < row.predicted_latency + 1.0);
        }
    }
    // prediction is a lower bound on the per-step accumulation at mid-line
    for (const auto& row : rows)
        if (row.k >= 20 && row.k <= 45) CHECK(row.accumulation_above_prediction);
    // simulated latency approaches the prediction as k grows
    const auto& early = rows[9];   // k = 10
    const auto& late = rows[39];   // k = 40
    CHECK(static_cast<double>(late.latency) / late.predicted_latency >
          static_cast<double>(early.latency) / early.predicted_latency);
}

TEST_CASE("line parameter validation") {
    LineParams p;
    p.n = 1;
    CHECK_THROWS_AS(simulate_line(p), std::invalid_argument);
    p = {};
    p.beta = 1.5;
    CHECK_THROWS_AS(simulate_line(p), std::invalid_argument);
    p = {};
    p.gamma = -1.0;
    CHECK_THROWS_AS(simulate_line(p), std::invalid_argument);
}
