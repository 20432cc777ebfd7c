#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <set>

#include "snow/hex.hpp"

using namespace snow;

namespace {

std::set<std::pair<int, int>> as_set(const std::vector<AxialCoord>& cells) {
    std::set<std::pair<int, int>> out;
    for (AxialCoord c : cells) out.insert({c.i, c.j});
    return out;
}

// breadth-first-search distances over the adjacency graph, the independent
// route to hex_distance
std::map<std::pair<int, int>, int> bfs_distances(AxialCoord from, int box) {
    std::map<std::pair<int, int>, int> dist;
    std::deque<AxialCoord> queue{from};
    dist[{from.i, from.j}] = 0;
    while (!queue.empty()) {
        const AxialCoord cur = queue.front();
        queue.pop_front();
        const int d = dist[{cur.i, cur.j}];
        for (AxialCoord nb : neighbors(cur)) {
            if (std::abs(nb.i) > box || std::abs(nb.j) > box || std::abs(nb.i + nb.j) > box)
                continue;
            if (dist.count({nb.i, nb.j})) continue;
            dist[{nb.i, nb.j}] = d + 1;
            queue.push_back(nb);
        }
    }
    return dist;
}

}  // namespace

TEST_CASE("neighbors of the origin are the six fixed offsets") {
    const auto nbs = neighbors(kOrigin);
    CHECK(nbs[0] == AxialCoord{1, 0});
    CHECK(nbs[1] == AxialCoord{0, 1});
    CHECK(nbs[2] == AxialCoord{-1, 1});
    CHECK(nbs[3] == AxialCoord{-1, 0});
    CHECK(nbs[4] == AxialCoord{0, -1});
    CHECK(nbs[5] == AxialCoord{1, -1});
}

TEST_CASE("neighbors of (0,5) include the axis cells above and below") {
    const auto nbs = neighbors({0, 5});
    CHECK(std::count(nbs.begin(), nbs.end(), AxialCoord{0, 4}) == 1);
    CHECK(std::count(nbs.begin(), nbs.end(), AxialCoord{0, 6}) == 1);
}

TEST_CASE("adjacency is symmetric") {
    for (int i = -4; i <= 4; ++i)
        for (int j = -4; j <= 4; ++j) {
            const AxialCoord c{i, j};
            for (AxialCoord nb : neighbors(c)) {
                const auto back = neighbors(nb);
                CHECK(std::count(back.begin(), back.end(), c) == 1);
            }
        }
}

TEST_CASE("cells on the K-diagonal with j >= i >= 0 are K sites from the origin") {
    for (int k = 0; k <= 30; ++k)
        for (int i = 0; 2 * i <= k; ++i)
            CHECK(hex_distance({i, k - i}, kOrigin) == k);
}

TEST_CASE("hex_distance basics") {
    CHECK(hex_distance({1, -1}, kOrigin) == 1);
    CHECK(hex_distance({1, 1}, kOrigin) == 2);
    CHECK(hex_distance({0, 0}, {0, 0}) == 0);
}

TEST_CASE("hex_distance equals breadth-first-search distance") {
    const auto dist = bfs_distances(kOrigin, 12);
    for (int i = -5; i <= 5; ++i)
        for (int j = -5; j <= 5; ++j)
            CHECK(hex_distance({i, j}, kOrigin) == dist.at({i, j}));

    // translation invariance against a second BFS root
    const AxialCoord root{2, -1};
    const auto dist2 = bfs_distances(root, 12);
    for (int i = -4; i <= 4; ++i)
        for (int j = -4; j <= 4; ++j)
            CHECK(hex_distance({i, j}, root) == dist2.at({i, j}));
}

TEST_CASE("hex_distance satisfies the triangle inequality") {
    for (int ai = -3; ai <= 3; ai += 2)
        for (int aj = -3; aj <= 3; aj += 2)
            for (int bi = -3; bi <= 3; bi += 3)
                for (int bj = -3; bj <= 3; bj += 3)
                    for (int ci = -2; ci <= 2; ci += 2)
                        for (int cj = -2; cj <= 2; cj += 2) {
                            const AxialCoord a{ai, aj}, b{bi, bj}, c{ci, cj};
                            CHECK(hex_distance(a, c) <=
                                  hex_distance(a, b) + hex_distance(b, c));
                        }
}

TEST_CASE("ring_cells counts and contents") {
    CHECK(as_set(ring_cells(0)) == as_set({kOrigin}));
    const auto ring1 = ring_cells(1);
    CHECK(ring1.size() == 6);
    const auto nbs = neighbors(kOrigin);
    CHECK(as_set(ring1) == as_set({nbs.begin(), nbs.end()}));

    const auto ring2 = ring_cells(2);
    CHECK(ring2.size() == 12);
    const auto set2 = as_set(ring2);
    CHECK(set2.count({0, 2}) == 1);
    CHECK(set2.count({-1, 2}) == 1);
    CHECK(set2.count({1, 1}) == 1);

    for (int r = 1; r <= 20; ++r) {
        const auto ring = ring_cells(r);
        CHECK(ring.size() == static_cast<std::size_t>(6 * r));
        for (AxialCoord c : ring) CHECK(hex_distance(c, kOrigin) == r);
    }
}

TEST_CASE("ring_cells agrees with a bounding-box enumeration") {
    for (int r = 0; r <= 8; ++r) {
        std::set<std::pair<int, int>> oracle;
        for (int i = -2 * r - 1; i <= 2 * r + 1; ++i)
            for (int j = -2 * r - 1; j <= 2 * r + 1; ++j)
                if (hex_distance({i, j}, kOrigin) == r) oracle.insert({i, j});
        CHECK(as_set(ring_cells(r)) == oracle);
    }
}

TEST_CASE("ring_neighbors examples") {
    const auto [a2, b2] = ring_neighbors({0, 2});
    CHECK(as_set({a2, b2}) == as_set({{-1, 2}, {1, 1}}));
    const auto [a1, b1] = ring_neighbors({0, 1});
    CHECK(as_set({a1, b1}) == as_set({{-1, 1}, {1, 0}}));
    CHECK_THROWS_AS(ring_neighbors(kOrigin), std::invalid_argument);
}

TEST_CASE("every non-origin cell has exactly two on-ring neighbors (r <= 50)") {
    for (int r = 1; r <= 50; ++r) {
        for (AxialCoord c : ring_cells(r)) {
            const auto [a, b] = ring_neighbors(c);  // throws if not exactly 2
            CHECK(a != b);
            CHECK(hex_distance(a, kOrigin) == r);
            CHECK(hex_distance(b, kOrigin) == r);
            CHECK(hex_distance(a, c) == 1);
            CHECK(hex_distance(b, c) == 1);
        }
    }
}

TEST_CASE("direction_angle maps the six offsets as documented") {
    CHECK(direction_angle(kOrigin, {1, 0}) == DirectionAngle::P30);
    CHECK(direction_angle(kOrigin, {-1, 0}) == DirectionAngle::M150);
    CHECK(direction_angle(kOrigin, {0, 1}) == DirectionAngle::P90);
    CHECK(direction_angle(kOrigin, {0, -1}) == DirectionAngle::M90);
    CHECK(direction_angle(kOrigin, {1, -1}) == DirectionAngle::M30);
    CHECK(direction_angle(kOrigin, {-1, 1}) == DirectionAngle::P150);
    CHECK(angle_degrees(DirectionAngle::P30) == 30);
    CHECK(angle_degrees(DirectionAngle::M150) == -150);
}

TEST_CASE("main-branch growth points down: dest (0,j), src (0,j-1)") {
    for (int j = 1; j <= 5; ++j)
        CHECK(direction_angle({0, j}, {0, j - 1}) == DirectionAngle::M90);
}

TEST_CASE("direction_angle matches the embedding geometry") {
    for (std::size_t k = 0; k < 6; ++k) {
        const AxialCoord src = kNeighborOffsets[k];
        const CartesianPoint p = to_cartesian(src);
        const double deg = std::atan2(p.y, p.x) * 180.0 / std::numbers::pi;
        CHECK(angle_degrees(direction_angle(kOrigin, src)) ==
              doctest::Approx(deg).epsilon(1e-12));
    }
}

TEST_CASE("direction_angle antisymmetry and coverage") {
    std::set<int> seen;
    const AxialCoord c{3, -2};
    for (AxialCoord nb : neighbors(c)) {
        const int fwd = angle_degrees(direction_angle(c, nb));
        const int back = angle_degrees(direction_angle(nb, c));
        CHECK(((fwd - back) % 360 + 360) % 360 == 180);
        seen.insert(fwd);
    }
    CHECK(seen == std::set<int>{-150, -90, -30, 30, 90, 150});
    CHECK_THROWS_AS(direction_angle(kOrigin, {2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(direction_angle(kOrigin, kOrigin), std::invalid_argument);
}

TEST_CASE("to_cartesian basics") {
    CHECK(to_cartesian(kOrigin) == CartesianPoint{0.0, 0.0});
    CHECK(to_cartesian({0, 1}) == CartesianPoint{0.0, 1.0});
    const CartesianPoint e_i = to_cartesian({1, 0});
    CHECK(e_i.x == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-15));
    CHECK(e_i.y == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("rotate60 and reflect orders") {
    for (int i = -4; i <= 4; ++i)
        for (int j = -4; j <= 4; ++j) {
            const AxialCoord c{i, j};
            AxialCoord r = c;
            for (int k = 0; k < 6; ++k) r = rotate60(r);
            CHECK(r == c);
            CHECK(reflect(reflect(c)) == c);
        }
    CHECK(rotate60({1, 0}) == AxialCoord{0, 1});
}

TEST_CASE("rotate60 and reflect preserve distance and adjacency") {
    for (int i = -4; i <= 4; ++i)
        for (int j = -4; j <= 4; ++j) {
            const AxialCoord c{i, j};
            CHECK(hex_distance(rotate60(c), kOrigin) == hex_distance(c, kOrigin));
            CHECK(hex_distance(reflect(c), kOrigin) == hex_distance(c, kOrigin));

            std::set<std::pair<int, int>> rotated_nbs, reflected_nbs;
            for (AxialCoord nb : neighbors(c)) {
                rotated_nbs.insert({rotate60(nb).i, rotate60(nb).j});
                reflected_nbs.insert({reflect(nb).i, reflect(nb).j});
            }
            const auto exp_rot = neighbors(rotate60(c));
            const auto exp_refl = neighbors(reflect(c));
            CHECK(rotated_nbs == as_set({exp_rot.begin(), exp_rot.end()}));
            CHECK(reflected_nbs == as_set({exp_refl.begin(), exp_refl.end()}));
        }
}

TEST_CASE("rotation shifts the neighbor slots cyclically") {
    for (std::size_t k = 0; k < 6; ++k)
        CHECK(rotate60(kNeighborOffsets[k]) == kNeighborOffsets[(k + 1) % 6]);
}

TEST_CASE("convex_hull of a square with interior points") {
    std::vector<CartesianPoint> pts = {
        {0, 0}, {2, 0}, {2, 2}, {0, 2}, {1, 1}, {0.5, 1.5}, {2, 0},
    };
    const auto hull = convex_hull(pts);
    CHECK(hull.size() == 4);
    for (const CartesianPoint& p : pts) CHECK(polygon_contains(hull, p));
    CHECK_FALSE(polygon_contains(hull, {3.0, 1.0}));
}
