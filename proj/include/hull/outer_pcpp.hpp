#pragma once

#include <optional>
#include <vector>

#include "hull/geometry.hpp"

namespace hull {

// Open region {l(x,y) > 0, eps * (z - z0) > 0}. Its complement is the zero
// set of a product of two hinge functions, which is separately convex, so
// any shovel disjoint from K certifies non-membership in the outer hull.
struct Shovel {
    Rational a, b, c;  // l(x, y) = a*x + b*y + c, (a, b) != (0, 0)
    Rational z0;
    int eps;  // -1 or +1
};

bool shovel_contains(const Shovel& s, const Point3& p);

struct PcppResult {
    bool member;
    std::optional<Shovel> witness;  // present iff !member
};

// Membership of p in the shovel outer hull of k. The search enumerates one
// z0 per interval between consecutive relevant heights (plus one beyond
// each end) for each eps; for a fixed side, p is excludable iff its
// projection lies outside the planar hull of the k-points on that side.
// The witness reported is the one with lexicographically smallest
// (eps, interval index).
PcppResult pcpp_member(const std::vector<Point3>& k, const Point3& p);

}  // namespace hull
