#include "hull/hull_core.hpp"

#include <algorithm>
#include <cassert>

namespace hull {

ActiveSet ActiveSet::from_points(const std::vector<Point3>& pts) {
    ActiveSet a;
    for (const Point3& p : pts) a.insert(p);
    return a;
}

void ActiveSet::insert(const Point3& p) {
    levels_[p.z].insert(p.xy);
    columns_[p.xy].insert(p.z);
}

void ActiveSet::erase(const Point3& p) {
    auto lv = levels_.find(p.z);
    if (lv == levels_.end()) return;
    lv->second.erase(p.xy);
    if (lv->second.empty()) levels_.erase(lv);
    auto col = columns_.find(p.xy);
    if (col != columns_.end()) {
        col->second.erase(p.z);
        if (col->second.empty()) columns_.erase(col);
    }
}

bool ActiveSet::contains(const Point3& p) const {
    auto lv = levels_.find(p.z);
    return lv != levels_.end() && lv->second.count(p.xy) > 0;
}

std::size_t ActiveSet::size() const {
    std::size_t n = 0;
    for (const auto& [h, pts] : levels_) n += pts.size();
    return n;
}

std::vector<Point3> ActiveSet::points() const {
    std::vector<Point3> out;
    for (const auto& [h, pts] : levels_)
        for (const Point2& p : pts) out.push_back(Point3{p, h});
    return out;
}

namespace {

// Extremal points of one level: planar-hull vertices whose height is not
// strictly inside their column's span.
std::vector<Point3> level_extremal(const ActiveSet& a, const Rational& h,
                                   const std::set<Point2>& level) {
    std::vector<Point3> out;
    ConvexPolygon hull = convex_hull_2d({level.begin(), level.end()});
    for (const Point2& v : hull.vertices()) {
        const auto& col = a.columns().at(v);
        if (h > *col.begin() && h < *col.rbegin()) continue;
        out.push_back(Point3{v, h});
    }
    return out;
}

}  // namespace

std::vector<Point3> finitely_extremal_serial(const ActiveSet& a) {
    assert(!a.empty());
    std::vector<Point3> out;
    for (const auto& [h, level] : a.levels()) {
        auto ext = level_extremal(a, h, level);
        out.insert(out.end(), ext.begin(), ext.end());
    }
    return out;
}

std::vector<Point3> finitely_extremal(const ActiveSet& a) {
    assert(!a.empty());
    std::vector<const std::pair<const Rational, std::set<Point2>>*> entries;
    for (const auto& e : a.levels()) entries.push_back(&e);
    std::vector<std::vector<Point3>> per_level(entries.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(entries.size()); ++i)
        per_level[i] = level_extremal(a, entries[i]->first, entries[i]->second);
    std::vector<Point3> out;
    for (auto& v : per_level) out.insert(out.end(), v.begin(), v.end());
    return out;
}

EliminationTrace eliminate(const std::vector<Point3>& k, Strategy strategy) {
    assert(!k.empty());
    Grid g = build_grid(k);
    ActiveSet a = ActiveSet::from_points(g.points);
    ActiveSet k_set = ActiveSet::from_points(k);

    EliminationTrace trace;
    trace.initial = a;
    for (;;) {
        std::vector<Point3> removable;
        for (const Point3& p : finitely_extremal(a))
            if (!k_set.contains(p)) removable.push_back(p);
        if (removable.empty()) break;
        if (strategy == Strategy::sequential_lex)
            removable.resize(1);  // already sorted by (z, x, y)
        for (const Point3& p : removable) a.erase(p);
        trace.batches.push_back(std::move(removable));
    }
    trace.final_set = std::move(a);
    return trace;
}

std::size_t EliminationTrace::removed_count() const {
    std::size_t n = 0;
    for (const auto& b : batches) n += b.size();
    return n;
}

HvComplex hv_hull(const ActiveSet& a) {
    assert(!a.empty());
    HvComplex m;
    for (const auto& [h, level] : a.levels()) {
        m.heights.push_back(h);
        m.level_polys.push_back(convex_hull_2d({level.begin(), level.end()}));
    }
    for (std::size_t j = 0; j + 1 < m.level_polys.size(); ++j)
        m.slab_polys.push_back(convex_polygon_intersection(m.level_polys[j], m.level_polys[j + 1]));
    return m;
}

bool membership(const HvComplex& m, const Point3& p) {
    for (std::size_t j = 0; j < m.heights.size(); ++j) {
        int c = cmp(p.z, m.heights[j]);
        if (c == 0) return m.level_polys[j].contains(p.xy);
        if (c < 0) {
            if (j == 0) return false;  // below the lowest height
            return m.slab_polys[j - 1] && m.slab_polys[j - 1]->contains(p.xy);
        }
    }
    return false;  // above the highest height
}

std::vector<Point3> complex_extremal_points(const HvComplex& m, const ActiveSet& a) {
    assert(m.heights.size() == a.levels().size());
    std::vector<Point3> out;
    for (std::size_t j = 0; j < m.heights.size(); ++j) {
        for (const Point2& v : m.level_polys[j].vertices()) {
            // Interior of a vertical segment of the complex: the column
            // continues through v both below and above this height.
            bool below = j > 0 && m.slab_polys[j - 1] && m.slab_polys[j - 1]->contains(v);
            bool above =
                j + 1 < m.heights.size() && m.slab_polys[j] && m.slab_polys[j]->contains(v);
            if (below && above) continue;
            out.push_back(Point3{v, m.heights[j]});
        }
    }
    return out;
}

std::vector<Point3> scaffolding(const std::vector<Point3>& k) {
    return scaffolding(eliminate(k, Strategy::batch).final_set, k);
}

std::vector<Point3> scaffolding(const ActiveSet& final_set, const std::vector<Point3>& k) {
    ActiveSet k_set = ActiveSet::from_points(k);
    // The elimination can leave non-K points that sit strictly inside their
    // level hull (they are never finitely extremal, so it cannot touch
    // them). They contribute nothing to any level or slab polygon, so the
    // scaffolding drops them.
    std::vector<Point3> out;
    for (const auto& [h, level] : final_set.levels()) {
        ConvexPolygon hull = convex_hull_2d({level.begin(), level.end()});
        const auto& vs = hull.vertices();
        for (const Point2& p : level) {
            Point3 p3{p, h};
            if (k_set.contains(p3) || std::find(vs.begin(), vs.end(), p) != vs.end())
                out.push_back(std::move(p3));
        }
    }
    return out;
}

}  // namespace hull
