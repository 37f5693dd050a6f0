#include <doctest.h>

#include <set>

#include "f0f2/geometry.hpp"

using namespace f0f2;

TEST_CASE("dual polygons of the two surfaces") {
    LatticePolygon rect = dual_polygon({Surface::F0, 2, 2});
    CHECK(rect.vertices() == std::vector<Point>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK_FALSE(rect.degenerate());

    // F2 with f=0 collapses a quadrangle edge into a triangle.
    LatticePolygon tri = dual_polygon({Surface::F2, 2, 0});
    CHECK(tri.vertices() == std::vector<Point>{{0, 0}, {2, 0}, {0, 4}});

    LatticePolygon quad = dual_polygon({Surface::F2, 1, 2});
    CHECK(quad.vertices() == std::vector<Point>{{0, 0}, {1, 0}, {1, 2}, {0, 4}});

    // a=0 gives the vertical segment, first-class but flagged.
    LatticePolygon seg = dual_polygon({Surface::F2, 0, 3});
    CHECK(seg.degenerate());
    CHECK(seg.lattice_points().size() == 4);

    CHECK_THROWS_AS(dual_polygon({Surface::F2, 1, -1}), std::invalid_argument);
}

TEST_CASE("lattice point sets and interior counts") {
    LatticePolygon tri = dual_polygon({Surface::F2, 2, 0});
    CHECK(tri.lattice_points().size() == 9);
    CHECK(tri.interior_count() == 1);
    CHECK(tri.contains({1, 1}));
    CHECK_FALSE(tri.contains({1, 3}));
    CHECK(tri.index_of({2, 0}) == static_cast<int>(tri.lattice_points().size()) - 1);

    LatticePolygon rect = dual_polygon({Surface::F0, 2, 2});
    CHECK(rect.lattice_points().size() == 9);
    CHECK(rect.interior_count() == 1);
}

TEST_CASE("direction multisets balance and have the right size") {
    SUBCASE("F2(1,0)") {
        DirectionMultiset m = direction_multiset({Surface::F2, 1, 0});
        std::multiset<std::pair<int, int>> got;
        for (auto [v, c] : m.entries)
            for (int i = 0; i < c; ++i) got.insert({v.x, v.y});
        CHECK(got == std::multiset<std::pair<int, int>>{{-1, 0}, {-1, 0}, {0, -1}, {2, 1}});
    }
    SUBCASE("F0(1,1)") {
        DirectionMultiset m = direction_multiset({Surface::F0, 1, 1});
        CHECK(m.total() == 4);
    }
    for (int a = 0; a <= 3; ++a)
        for (int f = 0; f <= 3; ++f) {
            if (a + f < 1) continue;
            for (Surface s : {Surface::F0, Surface::F2}) {
                SurfaceDegree deg{s, a, f};
                DirectionMultiset m = direction_multiset(deg);
                CHECK(m.weighted_sum() == Vec{0, 0});
                CHECK(m.total() == 4 * a + 2 * deg.class_b());
            }
        }
}

TEST_CASE("point counts") {
    CHECK(point_count({Surface::F0, 2, 2}, 0) == 7);
    CHECK(point_count({Surface::F2, 2, 0}, 1) == 8);
    CHECK(point_count({Surface::F2, 0, 1}, 0) == 1);
}

TEST_CASE("lambda extremes") {
    auto [p1, q1] = lambda_extremes(dual_polygon({Surface::F0, 2, 2}));
    CHECK(p1 == Point{0, 2});
    CHECK(q1 == Point{2, 0});

    auto [p2, q2] = lambda_extremes(dual_polygon({Surface::F2, 2, 0}));
    CHECK(p2 == Point{0, 4});
    CHECK(q2 == Point{2, 0});

    auto [p3, q3] = lambda_extremes(dual_polygon({Surface::F2, 0, 3}));
    CHECK(p3 == Point{0, 3});
    CHECK(q3 == Point{0, 0});
}

TEST_CASE("rectangle transpose is coordinate swap") {
    for (int a = 0; a <= 3; ++a)
        for (int f = 0; f <= 3; ++f) {
            if (a + f < 1) continue;
            LatticePolygon one = dual_polygon({Surface::F0, a, f});
            LatticePolygon two = dual_polygon({Surface::F0, f, a});
            std::set<std::pair<int, int>> swapped;
            for (Point p : one.lattice_points()) swapped.insert({p.y, p.x});
            std::set<std::pair<int, int>> other;
            for (Point p : two.lattice_points()) other.insert({p.x, p.y});
            CHECK(swapped == other);
        }
}

TEST_CASE("lambda order is strict and total on polygon points") {
    LatticePolygon quad = dual_polygon({Surface::F2, 2, 3});
    const auto& pts = quad.lattice_points();
    LambdaLess less;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        CHECK(less(pts[i], pts[i + 1]));
        CHECK_FALSE(less(pts[i + 1], pts[i]));
    }
}

TEST_CASE("degree validation") {
    CHECK_THROWS_AS((SurfaceDegree{Surface::F2, -1, 2}).validate_query(), std::invalid_argument);
    CHECK_THROWS_AS((SurfaceDegree{Surface::F2, 0, 0}).validate_query(), std::invalid_argument);
    CHECK_NOTHROW((SurfaceDegree{Surface::F0, 1, 0}).validate_query());
    CHECK((SurfaceDegree{Surface::F0, 2, 5}).class_b() == 3);
    CHECK((SurfaceDegree{Surface::F2, 2, 5}).class_b() == 5);
}
