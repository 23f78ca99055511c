#include "hull/geometry.hpp"

#include <algorithm>
#include <cassert>

namespace hull {

namespace {

Rational cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

Rational dot(const Point2& u, const Point2& v) {
    return u.x * v.x + u.y * v.y;
}

Point2 sub(const Point2& a, const Point2& b) {
    return Point2{a.x - b.x, a.y - b.y};
}

Rational sq_dist(const Point2& a, const Point2& b) {
    Point2 d = sub(a, b);
    return dot(d, d);
}

// Closest point of the closed segment [a,b] to p.
Point2 closest_on_segment(const Point2& a, const Point2& b, const Point2& p) {
    Point2 d = sub(b, a);
    Rational len2 = dot(d, d);
    if (len2 == 0) return a;
    Rational t = dot(sub(p, a), d) / len2;
    if (t <= 0) return a;
    if (t >= 1) return b;
    return Point2{a.x + t * d.x, a.y + t * d.y};
}

}  // namespace

int orientation(const Point2& a, const Point2& b, const Point2& c) {
    return sgn(cross(a, b, c));
}

ConvexPolygon ConvexPolygon::point(Point2 p) {
    return ConvexPolygon({std::move(p)});
}

ConvexPolygon ConvexPolygon::segment(Point2 a, Point2 b) {
    assert(!(a == b));
    if (b < a) std::swap(a, b);
    return ConvexPolygon({std::move(a), std::move(b)});
}

ConvexPolygon ConvexPolygon::hull_of(std::vector<Point2> points) {
    assert(!points.empty());
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    const std::size_t n = points.size();
    if (n == 1) return ConvexPolygon(std::move(points));
    if (n == 2) return ConvexPolygon(std::move(points));

    // Monotone chain with strict turns: collinear points are dropped, so
    // every surviving vertex is extreme.
    std::vector<Point2> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && orientation(h[k - 2], h[k - 1], points[i]) <= 0) --k;
        h[k++] = points[i];
    }
    for (std::size_t i = n - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && orientation(h[k - 2], h[k - 1], points[i]) <= 0) --k;
        h[k++] = points[i];
    }
    h.resize(k - 1);
    if (h.size() == 2 && h[1] < h[0]) std::swap(h[0], h[1]);
    return ConvexPolygon(std::move(h));
}

int ConvexPolygon::rank() const {
    if (verts_.size() == 1) return 0;
    if (verts_.size() == 2) return 1;
    return 2;
}

bool ConvexPolygon::contains(const Point2& p) const {
    switch (rank()) {
        case 0:
            return p == verts_[0];
        case 1: {
            if (orientation(verts_[0], verts_[1], p) != 0) return false;
            Point2 d = sub(verts_[1], verts_[0]);
            Rational t = dot(sub(p, verts_[0]), d);
            return t >= 0 && t <= dot(d, d);
        }
        default: {
            for (std::size_t i = 0; i < verts_.size(); ++i) {
                const Point2& a = verts_[i];
                const Point2& b = verts_[(i + 1) % verts_.size()];
                if (orientation(a, b, p) < 0) return false;
            }
            return true;
        }
    }
}

Point2 ConvexPolygon::closest_point(const Point2& p) const {
    if (rank() == 0) return verts_[0];
    if (contains(p)) return p;
    Point2 best = verts_[0];
    Rational best_d2 = sq_dist(best, p);
    const std::size_t n_edges = rank() == 1 ? 1 : verts_.size();
    for (std::size_t i = 0; i < n_edges; ++i) {
        Point2 c = closest_on_segment(verts_[i], verts_[(i + 1) % verts_.size()], p);
        Rational d2 = sq_dist(c, p);
        if (d2 < best_d2) {
            best = std::move(c);
            best_d2 = std::move(d2);
        }
    }
    return best;
}

std::optional<Point2> segment_intersection_point(const Segment2& s1, const Segment2& s2) {
    Point2 d1 = sub(s1.b, s1.a);
    Point2 d2 = sub(s2.b, s2.a);
    Rational denom = d1.x * d2.y - d1.y * d2.x;
    Point2 r = sub(s2.a, s1.a);

    if (denom != 0) {
        Rational t = (r.x * d2.y - r.y * d2.x) / denom;
        Rational u = (r.x * d1.y - r.y * d1.x) / denom;
        if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
        return Point2{s1.a.x + t * d1.x, s1.a.y + t * d1.y};
    }

    // Parallel. A point intersection needs collinearity plus a degenerate
    // overlap interval.
    if (r.x * d1.y != r.y * d1.x) return std::nullopt;
    Rational len2 = dot(d1, d1);
    Rational sa = dot(r, d1);
    Rational sb = dot(sub(s2.b, s1.a), d1);
    if (sb < sa) std::swap(sa, sb);
    Rational lo = std::max(Rational(0), sa);
    Rational hi = std::min(len2, sb);
    if (lo != hi) return std::nullopt;  // disjoint or overlap longer than a point
    Rational t = lo / len2;
    return Point2{s1.a.x + t * d1.x, s1.a.y + t * d1.y};
}

namespace {

std::vector<Segment2> polygon_edges(const ConvexPolygon& p) {
    std::vector<Segment2> edges;
    const auto& v = p.vertices();
    if (p.rank() == 1) {
        edges.push_back({v[0], v[1]});
    } else if (p.rank() == 2) {
        for (std::size_t i = 0; i < v.size(); ++i)
            edges.push_back({v[i], v[(i + 1) % v.size()]});
    }
    return edges;
}

}  // namespace

std::optional<ConvexPolygon> convex_polygon_intersection(const ConvexPolygon& p,
                                                         const ConvexPolygon& q) {
    // The intersection of two convex sets is the hull of: vertices of each
    // inside the other, plus all single-point edge crossings. Collinear
    // overlap endpoints are vertices of one polygon inside the other, so
    // they are already covered.
    std::vector<Point2> candidates;
    for (const Point2& v : p.vertices())
        if (q.contains(v)) candidates.push_back(v);
    for (const Point2& v : q.vertices())
        if (p.contains(v)) candidates.push_back(v);
    for (const Segment2& ep : polygon_edges(p))
        for (const Segment2& eq : polygon_edges(q))
            if (auto x = segment_intersection_point(ep, eq)) candidates.push_back(*x);
    if (candidates.empty()) return std::nullopt;
    return ConvexPolygon::hull_of(std::move(candidates));
}

}  // namespace hull
