#include <doctest.h>

#include <random>
#include <set>

#include "hull/grid.hpp"
#include "test_util.hpp"

using namespace hull;
using namespace hull::testing;

namespace {

unsigned long long choose4(std::size_t n) {
    if (n < 4) return 0;
    return static_cast<unsigned long long>(n) * (n - 1) * (n - 2) * (n - 3) / 24;
}

}  // namespace

TEST_CASE("project splits and deduplicates") {
    auto pr = project(spiral_staircase());
    CHECK(pr.planar == std::vector<Point2>{p2(0, 0), p2(0, 1), p2(1, 0), p2(1, 1)});
    CHECK(pr.heights == std::vector<Rational>{Rational(0), Rational(1), Rational(2)});

    auto single = project({p3(3, 4, 5)});
    CHECK(single.planar == std::vector<Point2>{p2(3, 4)});
    CHECK(single.heights == std::vector<Rational>{Rational(5)});

    auto stacked = project({p3(1, 1, 0), p3(1, 1, 5)});
    CHECK(stacked.planar.size() == 1);
    CHECK(stacked.heights.size() == 2);
}

TEST_CASE("first derived set") {
    auto square = first_derived_set({p2(1, 0), p2(0, 0), p2(0, 1), p2(1, 1)});
    CHECK(square == std::vector<Point2>{p2q(1, 2, 1, 2)});

    CHECK(first_derived_set({p2(0, 0), p2(3, 0), p2(0, 3)}).empty());

    auto cross = first_derived_set({p2(0, 0), p2(2, 0), p2(1, -1), p2(1, 1)});
    CHECK(cross == std::vector<Point2>{p2(1, 0)});
}

TEST_CASE("parallel derived set matches the serial reference") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> c(-4, 4);
    std::uniform_int_distribution<int> n(1, 8);
    for (int iter = 0; iter < 50; ++iter) {
        std::vector<Point2> f;
        for (int i = 0, m = n(rng); i < m; ++i) f.push_back(p2(c(rng), c(rng)));
        CHECK(first_derived_set(f) == first_derived_set_serial(f));
    }
}

TEST_CASE("grid of the spiral staircase") {
    Grid g = build_grid(spiral_staircase());
    CHECK(g.planar_points.size() == 5);
    CHECK(g.heights.size() == 3);
    CHECK(g.size() == 15);
}

TEST_CASE("grid edge cases") {
    Grid single = build_grid({p3(3, 4, 5)});
    CHECK(single.size() == 1);
    CHECK(single.points[0] == p3(3, 4, 5));

    // all points at one height: product structure with a single level
    Grid flat = build_grid({p3(0, 0, 2), p3(1, 0, 2), p3(0, 1, 2), p3(1, 1, 2)});
    CHECK(flat.heights == std::vector<Rational>{Rational(2)});
    CHECK(flat.size() == flat.planar_points.size());
}

TEST_CASE("grid contains K, respects the size bound, ignores order and duplicates") {
    std::mt19937_64 rng(22);
    for (int iter = 0; iter < 100; ++iter) {
        auto k = random_instance(rng);
        Grid g = build_grid(k);

        for (const Point3& p : k)
            CHECK(std::find(g.points.begin(), g.points.end(), p) != g.points.end());

        auto pr = project(k);
        auto derived = first_derived_set(pr.planar);
        CHECK(derived.size() <= choose4(pr.planar.size()));
        CHECK(g.size() <= (choose4(pr.planar.size()) + pr.planar.size()) * pr.heights.size());

        auto shuffled = k;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        shuffled.push_back(shuffled.front());  // duplicate
        Grid g2 = build_grid(shuffled);
        CHECK(g.points == g2.points);
    }
}

TEST_CASE("derived set commutes with invertible affine maps") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> c(-3, 3);
    std::uniform_int_distribution<int> n(3, 7);
    for (int iter = 0; iter < 30; ++iter) {
        std::vector<Point2> f;
        for (int i = 0, m = n(rng); i < m; ++i) f.push_back(p2(c(rng), c(rng)));
        AdmissibleMap t = random_map(rng);

        auto mapped_derived = first_derived_set(t.apply(f));
        auto derived_mapped = t.apply(first_derived_set(f));
        std::sort(derived_mapped.begin(), derived_mapped.end());
        CHECK(mapped_derived == derived_mapped);
    }
}
