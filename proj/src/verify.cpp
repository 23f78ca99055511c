#include "hull/verify.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <sstream>

#include "hull/outer_pcpp.hpp"

namespace hull {

void VerificationReport::add(std::string name, bool pass, std::string details) {
    overall = overall && pass;
    checks.push_back({std::move(name), pass, std::move(details)});
}

namespace {

std::string describe(const Point3& p) {
    std::ostringstream os;
    os << "(" << format_rational(p.xy.x) << ", " << format_rational(p.xy.y) << ", "
       << format_rational(p.z) << ")";
    return os.str();
}

Point3 lerp3(const Point3& a, const Point3& b, const Rational& t) {
    return Point3{{a.xy.x + t * (b.xy.x - a.xy.x), a.xy.y + t * (b.xy.y - a.xy.y)},
                  a.z + t * (b.z - a.z)};
}

// Rational convex combination of polygon vertices with random small
// integer weights.
Point2 random_combination(const ConvexPolygon& poly, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> w(0, 7);
    Rational total(0), x(0), y(0);
    for (const Point2& v : poly.vertices()) {
        Rational wi(w(rng) + 1);
        total += wi;
        x += wi * v.x;
        y += wi * v.y;
    }
    return Point2{x / total, y / total};
}

bool check_extremal_in_k(const std::vector<Point3>& pts, const ActiveSet& k_set,
                         std::string* detail) {
    for (const Point3& p : pts)
        if (!k_set.contains(p)) {
            *detail = "point outside K: " + describe(p);
            return false;
        }
    return true;
}

}  // namespace

VerificationReport verify_hull(const std::vector<Point3>& k, const EliminationTrace& trace,
                               const HvComplex& m, int samples, std::uint64_t seed) {
    assert(samples > 0);
    VerificationReport report;
    std::mt19937_64 rng(seed);
    ActiveSet k_set = ActiveSet::from_points(k);

    // (1) Extr(M) subset of K.
    {
        std::string detail;
        bool ok = check_extremal_in_k(complex_extremal_points(m, trace.final_set), k_set, &detail);
        report.add("complex-extremal-in-K", ok, detail);
    }

    // (2) FinExtr(A^f) subset of K.
    {
        std::string detail;
        bool ok = check_extremal_in_k(finitely_extremal(trace.final_set), k_set, &detail);
        report.add("finitely-extremal-in-K", ok, detail);
    }

    // (3) Inner: rank-one segments between K-points lie in M.
    {
        bool ok = true;
        std::string detail;
        for (std::size_t i = 0; i < k.size() && ok; ++i)
            for (std::size_t j = i + 1; j < k.size() && ok; ++j) {
                bool horizontal = k[i].z == k[j].z;
                bool vertical = k[i].xy == k[j].xy;
                if (!horizontal && !vertical) continue;
                for (int s = 1; s <= samples; ++s) {
                    Point3 p = lerp3(k[i], k[j], Rational(s, samples + 1));
                    if (!membership(m, p)) {
                        ok = false;
                        detail = "segment point not in hull: " + describe(p);
                        break;
                    }
                }
            }
        report.add("inner-segments-in-hull", ok, detail);
    }

    // (4) Outer: sampled hull points pass the shovel oracle.
    {
        bool ok = true;
        std::string detail;
        std::uniform_int_distribution<std::size_t> pick_level(0, m.heights.size() - 1);
        std::uniform_int_distribution<int> numer(1, 15);
        for (int s = 0; s < samples && ok; ++s) {
            std::size_t j = pick_level(rng);
            Point3 p{random_combination(m.level_polys[j], rng), m.heights[j]};
            if (j + 1 < m.heights.size() && m.slab_polys[j] && (s % 2 == 1)) {
                Rational t(numer(rng), 16);
                p = Point3{random_combination(*m.slab_polys[j], rng),
                           m.heights[j] + t * (m.heights[j + 1] - m.heights[j])};
            }
            if (!pcpp_member(k, p).member) {
                ok = false;
                detail = "hull point rejected by outer oracle: " + describe(p);
            }
        }
        report.add("hull-inside-outer-oracle", ok, detail);
    }

    // (5) Trace monotone, disjoint from K, within the grid bound.
    {
        bool ok = true;
        std::string detail;
        ActiveSet replay = trace.initial;
        std::size_t removed = 0;
        for (const auto& batch : trace.batches) {
            for (const Point3& p : batch) {
                if (!replay.contains(p)) {
                    ok = false;
                    detail = "removed point not active: " + describe(p);
                    break;
                }
                if (k_set.contains(p)) {
                    ok = false;
                    detail = "K-point removed: " + describe(p);
                    break;
                }
                replay.erase(p);
                ++removed;
            }
            if (!ok) break;
        }
        if (ok && !(replay == trace.final_set)) {
            ok = false;
            detail = "replayed trace does not reach the final set";
        }
        if (ok && removed > trace.initial.size()) {
            ok = false;
            detail = "more removals than grid points";
        }
        report.add("trace-monotone-bounded", ok, detail);
    }

    // (6) Separating-line certificate per removed point.
    {
        bool ok = true;
        std::string detail;
        ActiveSet replay = trace.initial;
        for (const auto& batch : trace.batches) {
            for (const Point3& p : batch) {
                const auto& level = replay.levels().at(p.z);
                ConvexPolygon before = convex_hull_2d({level.begin(), level.end()});
                const auto& vs = before.vertices();
                if (std::find(vs.begin(), vs.end(), p.xy) == vs.end()) {
                    ok = false;
                    detail = "removed point not a hull vertex: " + describe(p);
                    break;
                }
            }
            if (!ok) break;
            for (const Point3& p : batch) replay.erase(p);
            for (const Point3& p : batch) {
                auto lv = replay.levels().find(p.z);
                if (lv == replay.levels().end()) continue;
                ConvexPolygon after = convex_hull_2d({lv->second.begin(), lv->second.end()});
                if (after.contains(p.xy)) {
                    ok = false;
                    detail = "removed point still inside its level hull: " + describe(p);
                    break;
                }
            }
            if (!ok) break;
        }
        report.add("separating-line-certificates", ok, detail);
    }

    return report;
}

ConvexPolygon brute_force_hull_1level(const std::vector<Point3>& k) {
    assert(!k.empty());
    std::vector<Point2> flat;
    for (const Point3& p : k) {
        assert(p.z == k.front().z);
        flat.push_back(p.xy);
    }
    return convex_hull_2d(std::move(flat));
}

}  // namespace hull
