#include "hull/outer_pcpp.hpp"

#include <algorithm>
#include <cassert>

namespace hull {

bool shovel_contains(const Shovel& s, const Point3& p) {
    if (s.a * p.xy.x + s.b * p.xy.y + s.c <= 0) return false;
    return s.eps * (p.z - s.z0) > 0;
}

namespace {

// Affine functional strictly positive at pp and <= 0 on the polygon, from
// the closest point of the polygon to pp. Requires pp outside the polygon.
Shovel separating_functional(const ConvexPolygon& poly, const Point2& pp) {
    Point2 c = poly.closest_point(pp);
    Rational dx = pp.x - c.x;
    Rational dy = pp.y - c.y;
    assert(dx != 0 || dy != 0);
    return Shovel{dx, dy, -(dx * c.x + dy * c.y), Rational(0), +1};
}

}  // namespace

PcppResult pcpp_member(const std::vector<Point3>& k, const Point3& p) {
    assert(!k.empty());
    std::vector<Rational> heights;
    for (const Point3& q : k) heights.push_back(q.z);
    heights.push_back(p.z);
    std::sort(heights.begin(), heights.end());
    heights.erase(std::unique(heights.begin(), heights.end()), heights.end());

    std::vector<Rational> candidates;
    candidates.push_back(heights.front() - 1);
    for (std::size_t i = 0; i + 1 < heights.size(); ++i)
        candidates.push_back((heights[i] + heights[i + 1]) / 2);
    candidates.push_back(heights.back() + 1);

    for (int eps : {-1, +1}) {
        for (const Rational& z0 : candidates) {
            if (eps * (p.z - z0) <= 0) continue;
            std::vector<Point2> side;
            for (const Point3& q : k)
                if (eps * (q.z - z0) > 0) side.push_back(q.xy);
            Shovel witness;
            if (side.empty()) {
                witness = Shovel{Rational(1), Rational(0), 1 - p.xy.x, z0, eps};
            } else {
                ConvexPolygon poly = convex_hull_2d(std::move(side));
                if (poly.contains(p.xy)) continue;
                witness = separating_functional(poly, p.xy);
                witness.z0 = z0;
                witness.eps = eps;
            }
            return PcppResult{false, witness};
        }
    }
    return PcppResult{true, std::nullopt};
}

}  // namespace hull
