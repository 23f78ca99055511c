#include <doctest.h>

#include <random>

#include "hull/io.hpp"
#include "test_util.hpp"

using namespace hull;
using namespace hull::testing;

TEST_CASE("rational literal parsing") {
    CHECK(*parse_rational("1/2") == make_rational(1, 2));
    CHECK(*parse_rational("-3/6") == make_rational(-1, 2));
    CHECK(*parse_rational("7") == Rational(7));
    CHECK(*parse_rational("0.25") == make_rational(1, 4));
    CHECK(*parse_rational("-0.5") == make_rational(-1, 2));
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("nan").has_value());
    CHECK(!parse_rational("1e3").has_value());
    CHECK(!parse_rational("").has_value());
    CHECK(format_rational(make_rational(2, 4)) == "1/2");
    CHECK(format_rational(Rational(-3)) == "-3");
}

TEST_CASE("input parsing forms") {
    auto doc = parse_input(R"({"points": [["1","0","0"],["0","0","0"],["0","0","1"],
                                           ["0","1","1"],["0","1","2"],["1","1","2"]]})");
    CHECK(doc.points == spiral_staircase());

    auto bare = parse_input(R"([["1/2","1/2","1"]])");
    CHECK(bare.points ==
          std::vector<Point3>{p3q(make_rational(1, 2), make_rational(1, 2), Rational(1))});

    auto dec = parse_input(R"([["0.25","0","3"]])");
    CHECK(dec.points == std::vector<Point3>{p3q(make_rational(1, 4), Rational(0), Rational(3))});

    auto ints = parse_input(R"([[1, 0, 2]])");
    CHECK(ints.points == std::vector<Point3>{p3(1, 0, 2)});
}

TEST_CASE("input parsing rejections") {
    CHECK_THROWS_AS(parse_input("not json"), ParseError);
    CHECK_THROWS_AS(parse_input("[]"), ParseError);
    CHECK_THROWS_AS(parse_input(R"([["1/0","0","0"]])"), ParseError);
    CHECK_THROWS_AS(parse_input(R"([[0.25, 0, 3]])"), ParseError);  // float literal
    CHECK_THROWS_AS(parse_input(R"([["1","2"]])"), ParseError);
    CHECK_THROWS_AS(parse_input(R"({"points": [["1","0","0"]], "labels": ["a","b"]})"),
                    ParseError);
}

TEST_CASE("input round-trip") {
    InputDocument doc;
    doc.points = spiral_staircase();
    doc.labels = {"a", "b", "c", "d", "e", "f"};
    auto text = serialize_input(doc);
    auto back = parse_input(text);
    CHECK(back.points == doc.points);
    CHECK(back.labels == doc.labels);
    CHECK(serialize_input(back) == text);
}

namespace {

ComplexDocument compute_document(const std::vector<Point3>& k) {
    auto trace = eliminate(k);
    ComplexDocument doc;
    doc.complex = hv_hull(trace.final_set);
    doc.extremal_points = complex_extremal_points(doc.complex, trace.final_set);
    doc.scaffold_points = scaffolding(trace.final_set, k);
    for (const auto& b : trace.batches) doc.removed_per_step.push_back(b.size());
    return doc;
}

}  // namespace

TEST_CASE("complex document round-trip on random instances") {
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 25; ++iter) {
        auto doc = compute_document(random_instance(rng));
        auto text = serialize_complex(doc);
        auto back = parse_complex(text);
        CHECK(back == doc);
        CHECK(serialize_complex(back) == text);  // byte-identical re-serialization
    }
}

TEST_CASE("deterministic output for the same input") {
    auto k = spiral_staircase();
    CHECK(serialize_complex(compute_document(k)) == serialize_complex(compute_document(k)));
}

TEST_CASE("mesh export shapes") {
    // single full-dimensional triangle level: 3 vertices, 1 face
    auto tri = hv_hull(ActiveSet::from_points({p3(0, 0, 0), p3(2, 0, 0), p3(0, 2, 0)}));
    auto obj = export_mesh(tri);
    std::size_t v_count = 0, f_count = 0, l_count = 0;
    for (std::size_t pos = 0; pos < obj.size();) {
        auto end = obj.find('\n', pos);
        auto line = obj.substr(pos, end - pos);
        if (line.starts_with("v ")) ++v_count;
        if (line.starts_with("f ")) ++f_count;
        if (line.starts_with("l ")) ++l_count;
        pos = end + 1;
    }
    CHECK(v_count == 3);
    CHECK(f_count == 1);
    CHECK(l_count == 0);

    // staircase: five line records, no faces
    auto m = hv_hull(eliminate(spiral_staircase()).final_set);
    auto stair = export_mesh(m);
    std::size_t lines = 0, faces = 0;
    for (std::size_t pos = 0; pos < stair.size();) {
        auto end = stair.find('\n', pos);
        auto line = stair.substr(pos, end - pos);
        if (line.starts_with("l ")) ++lines;
        if (line.starts_with("f ")) ++faces;
        pos = end + 1;
    }
    CHECK(lines == 5);
    CHECK(faces == 0);

    // identical squares stacked: a closed box, all side walls present
    auto box = hv_hull(ActiveSet::from_points({p3(0, 0, 0), p3(1, 0, 0), p3(0, 1, 0),
                                               p3(1, 1, 0), p3(0, 0, 1), p3(1, 0, 1),
                                               p3(0, 1, 1), p3(1, 1, 1)}));
    auto box_obj = export_mesh(box);
    std::size_t box_faces = 0;
    for (std::size_t pos = 0; pos < box_obj.size();) {
        auto end = box_obj.find('\n', pos);
        if (box_obj.substr(pos, end - pos).starts_with("f ")) ++box_faces;
        pos = end + 1;
    }
    // 2 level fans (2 tris each) + slab: 4 walls (2 tris) + top/bottom fans
    CHECK(box_faces == 16);
}
