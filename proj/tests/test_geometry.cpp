#include <doctest.h>

#include <random>

#include "hull/geometry.hpp"
#include "test_util.hpp"

using namespace hull;
using namespace hull::testing;

TEST_CASE("orientation signs") {
    CHECK(orientation(p2(0, 0), p2(1, 0), p2(0, 1)) == 1);
    CHECK(orientation(p2(0, 0), p2(1, 1), p2(2, 2)) == 0);
    CHECK(orientation(p2(0, 0), p2(0, 1), p2(1, 0)) == -1);
}

TEST_CASE("orientation is antisymmetric in its last two arguments") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int i = 0; i < 200; ++i) {
        Point2 a = p2(c(rng), c(rng)), b = p2(c(rng), c(rng)), d = p2(c(rng), c(rng));
        CHECK(orientation(a, b, d) == -orientation(a, d, b));
    }
}

TEST_CASE("convex hull degenerate ranks") {
    auto pt = convex_hull_2d({p2(0, 0)});
    CHECK(pt.rank() == 0);
    CHECK(pt.vertices() == std::vector<Point2>{p2(0, 0)});

    auto seg = convex_hull_2d({p2(0, 0), p2(1, 0), p2(2, 0)});
    CHECK(seg.rank() == 1);
    CHECK(seg.vertices() == std::vector<Point2>{p2(0, 0), p2(2, 0)});
}

TEST_CASE("convex hull drops interior and edge-interior points") {
    auto sq = convex_hull_2d({p2(0, 0), p2(1, 0), p2(0, 1), p2(1, 1), p2q(1, 2, 1, 2)});
    CHECK(sq.rank() == 2);
    CHECK(sq.vertices().size() == 4);

    // midpoint of an edge must not be a vertex
    auto tri = convex_hull_2d({p2(0, 0), p2(2, 0), p2(1, 0), p2(0, 2)});
    CHECK(tri.vertices().size() == 3);
}

TEST_CASE("point in polygon") {
    auto sq = convex_hull_2d({p2(0, 0), p2(1, 0), p2(0, 1), p2(1, 1)});
    CHECK(sq.contains(p2q(1, 2, 1, 2)));
    CHECK(sq.contains(p2q(1, 1, 1, 2)));  // boundary (1, 1/2)
    CHECK(!sq.contains(p2(2, 0)));

    auto seg = ConvexPolygon::segment(p2(0, 0), p2(2, 2));
    CHECK(seg.contains(p2(1, 1)));
    CHECK(!seg.contains(p2(3, 3)));
    CHECK(!seg.contains(p2(1, 0)));
}

TEST_CASE("segment intersection point") {
    auto d = segment_intersection_point({p2(0, 0), p2(1, 1)}, {p2(1, 0), p2(0, 1)});
    REQUIRE(d.has_value());
    CHECK(*d == p2q(1, 2, 1, 2));

    CHECK(!segment_intersection_point({p2(0, 0), p2(1, 0)}, {p2(0, 1), p2(1, 1)}).has_value());
    CHECK(!segment_intersection_point({p2(0, 0), p2(2, 0)}, {p2(1, 0), p2(3, 0)}).has_value());

    // collinear segments touching at a single point do intersect there
    auto touch = segment_intersection_point({p2(0, 0), p2(1, 0)}, {p2(1, 0), p2(2, 0)});
    REQUIRE(touch.has_value());
    CHECK(*touch == p2(1, 0));

    // T-junction at an endpoint
    auto tj = segment_intersection_point({p2(0, -1), p2(0, 1)}, {p2(0, 0), p2(5, 0)});
    REQUIRE(tj.has_value());
    CHECK(*tj == p2(0, 0));
}

TEST_CASE("convex polygon intersection") {
    auto unit = convex_hull_2d({p2(0, 0), p2(1, 0), p2(0, 1), p2(1, 1)});
    auto shifted = convex_hull_2d({p2q(1, 2, 1, 2), p2q(3, 2, 1, 2), p2q(1, 2, 3, 2), p2q(3, 2, 3, 2)});
    auto inter = convex_polygon_intersection(unit, shifted);
    REQUIRE(inter.has_value());
    CHECK(inter->rank() == 2);
    CHECK(inter->vertices() ==
          std::vector<Point2>{p2q(1, 2, 1, 2), p2q(1, 1, 1, 2), p2(1, 1), p2q(1, 2, 1, 1)});

    auto s1 = ConvexPolygon::segment(p2(0, 0), p2(1, 0));
    auto s2 = ConvexPolygon::segment(p2(0, 0), p2(0, 1));
    auto corner = convex_polygon_intersection(s1, s2);
    REQUIRE(corner.has_value());
    CHECK(corner->rank() == 0);
    CHECK(corner->vertices()[0] == p2(0, 0));

    auto far = convex_hull_2d({p2(5, 5), p2(6, 5), p2(5, 6), p2(6, 6)});
    CHECK(!convex_polygon_intersection(unit, far).has_value());
}

TEST_CASE("hull properties on random rational inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c(-8, 8);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> n(1, 12);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Point2> pts;
        int count = n(rng);
        for (int i = 0; i < count; ++i)
            pts.push_back(Point2{make_rational(c(rng), den(rng)), make_rational(c(rng), den(rng))});
        auto hull = convex_hull_2d(pts);

        // vertices come from the input; every input point is contained
        for (const Point2& v : hull.vertices())
            CHECK(std::find(pts.begin(), pts.end(), v) != pts.end());
        for (const Point2& p : pts) CHECK(hull.contains(p));

        // idempotence
        auto again = convex_hull_2d(hull.vertices());
        CHECK(again == hull);

        // permutation invariance
        std::shuffle(pts.begin(), pts.end(), rng);
        CHECK(convex_hull_2d(pts) == hull);
    }
}

TEST_CASE("intersection is symmetric and contained in both") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> c(-5, 5);
    std::uniform_int_distribution<int> n(1, 6);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<Point2> a, b;
        for (int i = 0, m = n(rng); i < m; ++i) a.push_back(p2(c(rng), c(rng)));
        for (int i = 0, m = n(rng); i < m; ++i) b.push_back(p2(c(rng), c(rng)));
        auto pa = convex_hull_2d(a);
        auto pb = convex_hull_2d(b);
        auto ab = convex_polygon_intersection(pa, pb);
        auto ba = convex_polygon_intersection(pb, pa);
        CHECK(ab.has_value() == ba.has_value());
        if (!ab) continue;
        CHECK(*ab == *ba);
        for (const Point2& v : ab->vertices()) {
            CHECK(pa.contains(v));
            CHECK(pb.contains(v));
        }
    }
}
