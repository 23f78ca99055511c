#pragma once

#include <map>
#include <set>
#include <vector>

#include "hull/geometry.hpp"

namespace hull {

// The finite ambient universe the elimination runs in: the product of the
// planar points (input projections plus first derived set) with the input
// heights.
struct Grid {
    std::vector<Point2> planar_points;  // sorted, F union F1
    std::vector<Rational> heights;      // sorted, strictly increasing
    std::vector<Point3> points;         // planar_points x heights
    std::map<Rational, std::vector<Point2>> by_level;
    std::map<Point2, std::vector<Rational>> by_column;

    std::size_t size() const { return points.size(); }
};

struct Projection {
    std::vector<Point2> planar;    // sorted, deduplicated
    std::vector<Rational> heights; // sorted, deduplicated
};

// Splits a non-empty 3-D point set into its planar projection and its
// height set.
Projection project(const std::vector<Point3>& k);

// All single-point transversal intersections of pairs of closed segments
// with endpoints in f, excluding points of f itself. Sorted, deduplicated.
// The parallel version chunks the O(|f|^4) pair enumeration over OpenMP
// threads and merges deterministically; the serial version is the reference
// it is tested against.
std::vector<Point2> first_derived_set(const std::vector<Point2>& f);
std::vector<Point2> first_derived_set_serial(const std::vector<Point2>& f);

Grid build_grid(const std::vector<Point3>& k);

}  // namespace hull
