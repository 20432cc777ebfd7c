#include "snow/geometry.hpp"

#include <algorithm>

namespace snow {

namespace {

double cross(CartesianPoint o, CartesianPoint a, CartesianPoint b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

std::vector<CartesianPoint> convex_hull(std::vector<CartesianPoint> points) {
    std::sort(points.begin(), points.end(), [](CartesianPoint a, CartesianPoint b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t n = points.size();
    if (n < 3) return points;

    std::vector<CartesianPoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
        hull[k++] = points[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
        while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return hull;
}

bool polygon_contains(const std::vector<CartesianPoint>& polygon, CartesianPoint p,
                      double tol) {
    const std::size_t n = polygon.size();
    if (n == 0) return false;
    if (n == 1)
        return std::abs(p.x - polygon[0].x) <= tol && std::abs(p.y - polygon[0].y) <= tol;
    if (n == 2) {
        // degenerate segment: p must be within tol of it
        const CartesianPoint a = polygon[0], b = polygon[1];
        if (std::abs(cross(a, b, p)) > tol) return false;
        const double dot = (p.x - a.x) * (b.x - a.x) + (p.y - a.y) * (b.y - a.y);
        const double len2 = (b.x - a.x) * (b.x - a.x) + (b.y - a.y) * (b.y - a.y);
        return dot >= -tol && dot <= len2 + tol;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (cross(polygon[i], polygon[(i + 1) % n], p) < -tol) return false;
    }
    return true;
}

}  // namespace snow
