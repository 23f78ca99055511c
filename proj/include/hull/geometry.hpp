#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "hull/rational.hpp"

namespace hull {

struct Point2 {
    Rational x;
    Rational y;

    friend bool operator==(const Point2& a, const Point2& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator<(const Point2& a, const Point2& b) {
        int cx = cmp(a.x, b.x);
        if (cx != 0) return cx < 0;
        return cmp(a.y, b.y) < 0;
    }
};

struct Point3 {
    Point2 xy;
    Rational z;  // height

    friend bool operator==(const Point3& a, const Point3& b) {
        return a.z == b.z && a.xy == b.xy;
    }
    // Lexicographic (z, x, y): the order the sequential strategy eliminates in.
    friend bool operator<(const Point3& a, const Point3& b) {
        int cz = cmp(a.z, b.z);
        if (cz != 0) return cz < 0;
        return a.xy < b.xy;
    }
};

struct Segment2 {
    Point2 a;
    Point2 b;  // a != b
};

// Sign of the cross product (b-a) x (c-a): +1 counter-clockwise, -1
// clockwise, 0 collinear. Exact.
int orientation(const Point2& a, const Point2& b, const Point2& c);

// Ordered vertex list of a possibly degenerate planar convex set.
// rank 0: one point; rank 1: two distinct points; rank 2: >= 3 vertices in
// strictly convex CCW order starting at the lexicographic minimum. No vertex
// ever lies in the convex hull of the others.
class ConvexPolygon {
public:
    static ConvexPolygon point(Point2 p);
    static ConvexPolygon segment(Point2 a, Point2 b);

    // Hull of an arbitrary non-empty point set; edge-interior points are
    // absorbed, never reported as vertices.
    static ConvexPolygon hull_of(std::vector<Point2> points);

    int rank() const;
    const std::vector<Point2>& vertices() const { return verts_; }

    bool contains(const Point2& p) const;

    // Closest point of the polygon (as a closed convex set) to p; p itself
    // when p is inside.
    Point2 closest_point(const Point2& p) const;

    friend bool operator==(const ConvexPolygon& a, const ConvexPolygon& b) {
        return a.verts_ == b.verts_;
    }

private:
    explicit ConvexPolygon(std::vector<Point2> verts) : verts_(std::move(verts)) {}
    std::vector<Point2> verts_;  // canonical CCW order, lex-min first
};

inline ConvexPolygon convex_hull_2d(std::vector<Point2> points) {
    return ConvexPolygon::hull_of(std::move(points));
}

inline bool point_in_polygon(const ConvexPolygon& poly, const Point2& p) {
    return poly.contains(p);
}

// Unique intersection point of two closed segments, when they meet in
// exactly one point. Disjoint pairs and collinear overlaps yield nothing.
std::optional<Point2> segment_intersection_point(const Segment2& s1, const Segment2& s2);

// Exact intersection of two convex polygons of any rank; nothing when empty.
std::optional<ConvexPolygon> convex_polygon_intersection(const ConvexPolygon& p,
                                                         const ConvexPolygon& q);

}  // namespace hull
