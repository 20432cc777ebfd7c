#include "snow/wulff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace snow {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

double wrap_angle(double a) {
    a = std::fmod(a, kTau);
    if (a < 0.0) a += kTau;
    return a;
}

}  // namespace

std::vector<CartesianPoint> wulff_shape(const std::vector<WulffSample>& samples) {
    if (samples.size() < 3)
        throw std::invalid_argument("wulff_shape: need at least 3 samples");
    for (const WulffSample& s : samples)
        if (!(s.energy > 0.0))
            throw std::invalid_argument("wulff_shape: energies must be > 0");

    std::vector<double> angles;
    angles.reserve(samples.size());
    for (const WulffSample& s : samples) angles.push_back(wrap_angle(s.angle));
    std::sort(angles.begin(), angles.end());
    for (std::size_t i = 1; i < angles.size(); ++i)
        if (angles[i] - angles[i - 1] < 1e-12)
            throw std::invalid_argument("wulff_shape: directions must be distinct");

    // Bounded iff no angular gap between consecutive normals reaches pi.
    double max_gap = angles.front() + kTau - angles.back();
    for (std::size_t i = 1; i < angles.size(); ++i)
        max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
    if (max_gap >= std::numbers::pi - 1e-12)
        throw WulffUnboundedError("wulff_shape: directions span less than half the circle");

    // All pairwise boundary-line intersections, kept if feasible for every
    // half-plane. Sample counts are small, so O(n^3) is fine.
    const std::size_t n = samples.size();
    std::vector<double> nx(n), ny(n);
    for (std::size_t i = 0; i < n; ++i) {
        nx[i] = std::cos(samples[i].angle);
        ny[i] = std::sin(samples[i].angle);
    }
    std::vector<CartesianPoint> feasible;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double det = nx[i] * ny[j] - nx[j] * ny[i];
            if (std::abs(det) < 1e-14) continue;  // parallel boundaries
            const CartesianPoint p{
                (samples[i].energy * ny[j] - samples[j].energy * ny[i]) / det,
                (nx[i] * samples[j].energy - nx[j] * samples[i].energy) / det,
            };
            bool ok = true;
            for (std::size_t k = 0; k < n; ++k) {
                if (p.x * nx[k] + p.y * ny[k] > samples[k].energy * (1.0 + 1e-12) + 1e-12) {
                    ok = false;
                    break;
                }
            }
            if (ok) feasible.push_back(p);
        }
    }

    std::vector<CartesianPoint> hull = convex_hull(std::move(feasible));
    if (hull.size() < 3)
        throw WulffEmptyError("wulff_shape: intersection has empty interior");
    return hull;
}

}  // namespace snow
