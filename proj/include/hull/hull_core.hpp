#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hull/geometry.hpp"
#include "hull/grid.hpp"

namespace hull {

// The shrinking subset of the grid the elimination iterates on, indexed
// both by height level and by vertical column. Both views always encode
// the same point set.
class ActiveSet {
public:
    ActiveSet() = default;
    static ActiveSet from_points(const std::vector<Point3>& pts);

    void insert(const Point3& p);
    void erase(const Point3& p);
    bool contains(const Point3& p) const;
    bool empty() const { return levels_.empty(); }
    std::size_t size() const;

    const std::map<Rational, std::set<Point2>>& levels() const { return levels_; }
    const std::map<Point2, std::set<Rational>>& columns() const { return columns_; }
    std::vector<Point3> points() const;  // sorted by (z, x, y)

    friend bool operator==(const ActiveSet& a, const ActiveSet& b) {
        return a.levels_ == b.levels_;
    }

private:
    std::map<Rational, std::set<Point2>> levels_;
    std::map<Point2, std::set<Rational>> columns_;
};

// Points of A that are neither interior to a vertical A-segment in their
// column nor inside the planar hull of the other points at their height.
// Sorted by (z, x, y); levels are processed in parallel, merged in height
// order. The serial version is the reference kept for tests and benchmarks.
std::vector<Point3> finitely_extremal(const ActiveSet& a);
std::vector<Point3> finitely_extremal_serial(const ActiveSet& a);

enum class Strategy { batch, sequential_lex };

struct EliminationTrace {
    std::vector<std::vector<Point3>> batches;  // removals per step, in order
    ActiveSet initial;                         // A^0 = grid
    ActiveSet final_set;                       // A^f

    std::size_t removed_count() const;
};

// Runs the elimination until every finitely extremal point of the active
// set belongs to k. `batch` removes all eliminable points per step;
// `sequential_lex` removes one per step in (z, x, y) order.
EliminationTrace eliminate(const std::vector<Point3>& k, Strategy strategy = Strategy::batch);

// Per-height planar hulls plus one intersection polygon per consecutive
// height pair; the geometric set is the union of the level polygons and the
// slab polygons extruded over their height intervals. Slab vertices may
// fall outside the grid's planar points.
struct HvComplex {
    std::vector<Rational> heights;
    std::vector<ConvexPolygon> level_polys;                // one per height
    std::vector<std::optional<ConvexPolygon>> slab_polys;  // one per gap
};

HvComplex hv_hull(const ActiveSet& a);

bool membership(const HvComplex& m, const Point3& p);

// Extremal points of the complex: level-polygon vertices not interior to a
// vertical segment of the complex. Requires m == hv_hull(a).
std::vector<Point3> complex_extremal_points(const HvComplex& m, const ActiveSet& a);

// Order-2 scaffolding: a superset of k, at most grid-sized, whose hv-hull
// equals the hull of k. Non-K leftovers strictly inside their level hull
// are pruned from the final active set; the overload reuses an already
// computed final set.
std::vector<Point3> scaffolding(const std::vector<Point3>& k);
std::vector<Point3> scaffolding(const ActiveSet& final_set, const std::vector<Point3>& k);

}  // namespace hull
