#include "hull/grid.hpp"

#include <algorithm>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hull {

Projection project(const std::vector<Point3>& k) {
    assert(!k.empty());
    Projection out;
    for (const Point3& p : k) {
        out.planar.push_back(p.xy);
        out.heights.push_back(p.z);
    }
    std::sort(out.planar.begin(), out.planar.end());
    out.planar.erase(std::unique(out.planar.begin(), out.planar.end()), out.planar.end());
    std::sort(out.heights.begin(), out.heights.end());
    out.heights.erase(std::unique(out.heights.begin(), out.heights.end()), out.heights.end());
    return out;
}

namespace {

std::vector<Segment2> all_segments(std::vector<Point2> f) {
    f.erase(std::unique(f.begin(), f.end()), f.end());  // f is sorted
    std::vector<Segment2> segs;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            segs.push_back({f[i], f[j]});
    return segs;
}

std::vector<Point2> finish(std::vector<Point2> hits, const std::vector<Point2>& f_sorted) {
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    std::erase_if(hits, [&](const Point2& p) {
        return std::binary_search(f_sorted.begin(), f_sorted.end(), p);
    });
    return hits;
}

bool share_endpoint(const Segment2& s, const Segment2& t) {
    return s.a == t.a || s.a == t.b || s.b == t.a || s.b == t.b;
}

}  // namespace

std::vector<Point2> first_derived_set_serial(const std::vector<Point2>& f) {
    std::vector<Point2> f_sorted = f;
    std::sort(f_sorted.begin(), f_sorted.end());
    const auto segs = all_segments(f_sorted);
    std::vector<Point2> hits;
    for (std::size_t s = 0; s < segs.size(); ++s)
        for (std::size_t t = s + 1; t < segs.size(); ++t)
            if (auto p = segment_intersection_point(segs[s], segs[t]))
                hits.push_back(std::move(*p));
    return finish(std::move(hits), f_sorted);
}

std::vector<Point2> first_derived_set(const std::vector<Point2>& f) {
    std::vector<Point2> f_sorted = f;
    std::sort(f_sorted.begin(), f_sorted.end());
    const auto segs = all_segments(f_sorted);
    const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(segs.size());

    std::vector<Point2> hits;
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<Point2> local;
#pragma omp for schedule(dynamic, 4) nowait
        for (std::ptrdiff_t s = 0; s < m; ++s) {
            for (std::ptrdiff_t t = s + 1; t < m; ++t) {
                // A pair sharing an endpoint can only meet at that endpoint,
                // which lies in f and would be filtered anyway.
                if (share_endpoint(segs[s], segs[t])) continue;
                if (auto p = segment_intersection_point(segs[s], segs[t]))
                    local.push_back(std::move(*p));
            }
        }
#pragma omp critical
        hits.insert(hits.end(), std::make_move_iterator(local.begin()),
                    std::make_move_iterator(local.end()));
    }
#else
    for (std::ptrdiff_t s = 0; s < m; ++s)
        for (std::ptrdiff_t t = s + 1; t < m; ++t) {
            if (share_endpoint(segs[s], segs[t])) continue;
            if (auto p = segment_intersection_point(segs[s], segs[t]))
                hits.push_back(std::move(*p));
        }
#endif
    return finish(std::move(hits), f_sorted);
}

Grid build_grid(const std::vector<Point3>& k) {
    assert(!k.empty());
    Projection pr = project(k);

    Grid g;
    g.planar_points = pr.planar;
    for (Point2& p : first_derived_set(pr.planar)) g.planar_points.push_back(std::move(p));
    std::sort(g.planar_points.begin(), g.planar_points.end());
    g.heights = std::move(pr.heights);

    for (const Rational& h : g.heights) {
        auto& level = g.by_level[h];
        for (const Point2& p : g.planar_points) {
            g.points.push_back(Point3{p, h});
            level.push_back(p);
        }
    }
    for (const Point2& p : g.planar_points) g.by_column[p] = g.heights;
    return g;
}

}  // namespace hull
