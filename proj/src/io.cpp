#include "hull/io.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

namespace hull {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& v) {
    if (v.is_string()) {
        auto q = parse_rational(v.get<std::string>());
        if (!q) throw ParseError("bad rational literal: " + v.get<std::string>());
        return *q;
    }
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_number_float())
        throw ParseError("floating-point literals are not exact; use a string like \"1/3\"");
    throw ParseError("expected a rational literal, got: " + v.dump());
}

Point3 point3_from_json(const json& v) {
    if (!v.is_array() || v.size() != 3)
        throw ParseError("expected a point as an array of three rationals, got: " + v.dump());
    return Point3{{rational_from_json(v[0]), rational_from_json(v[1])}, rational_from_json(v[2])};
}

Point2 point2_from_json(const json& v) {
    if (!v.is_array() || v.size() != 2)
        throw ParseError("expected a planar point as an array of two rationals");
    return Point2{rational_from_json(v[0]), rational_from_json(v[1])};
}

json point3_to_json(const Point3& p) {
    return json::array(
        {format_rational(p.xy.x), format_rational(p.xy.y), format_rational(p.z)});
}

json point2_to_json(const Point2& p) {
    return json::array({format_rational(p.x), format_rational(p.y)});
}

json polygon_to_json(const ConvexPolygon& poly) {
    json verts = json::array();
    for (const Point2& v : poly.vertices()) verts.push_back(point2_to_json(v));
    return json{{"rank", poly.rank()}, {"vertices", verts}};
}

ConvexPolygon polygon_from_json(const json& v) {
    std::vector<Point2> verts;
    for (const auto& e : v.at("vertices")) verts.push_back(point2_from_json(e));
    if (verts.empty()) throw ParseError("polygon with no vertices");
    ConvexPolygon poly = ConvexPolygon::hull_of(verts);
    if (poly.vertices().size() != verts.size() || poly.rank() != v.at("rank").get<int>())
        throw ParseError("polygon vertices are not in canonical strictly convex form");
    return poly;
}

std::vector<Point3> points_from_json(const json& arr) {
    std::vector<Point3> pts;
    for (const auto& e : arr) pts.push_back(point3_from_json(e));
    return pts;
}

json points_to_json(const std::vector<Point3>& pts) {
    json arr = json::array();
    for (const Point3& p : pts) arr.push_back(point3_to_json(p));
    return arr;
}

}  // namespace

InputDocument parse_input(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    const json* arr = nullptr;
    InputDocument out;
    if (doc.is_array()) {
        arr = &doc;
    } else if (doc.is_object() && doc.contains("points")) {
        arr = &doc["points"];
        if (doc.contains("labels")) {
            for (const auto& l : doc["labels"]) out.labels.push_back(l.get<std::string>());
        }
    } else {
        throw ParseError("input must be a point array or an object with a \"points\" field");
    }
    out.points = points_from_json(*arr);
    if (out.points.empty()) throw ParseError("input contains no points");
    if (!out.labels.empty() && out.labels.size() != out.points.size())
        throw ParseError("labels, when present, must match the number of points");
    return out;
}

std::string serialize_input(const InputDocument& doc) {
    json j;
    j["points"] = points_to_json(doc.points);
    if (!doc.labels.empty()) j["labels"] = doc.labels;
    return j.dump(2) + "\n";
}

namespace {

bool complex_equal(const HvComplex& a, const HvComplex& b) {
    if (a.heights != b.heights) return false;
    if (!(a.level_polys == b.level_polys)) return false;
    return a.slab_polys == b.slab_polys;
}

}  // namespace

bool operator==(const ComplexDocument& a, const ComplexDocument& b) {
    return complex_equal(a.complex, b.complex) && a.extremal_points == b.extremal_points &&
           a.scaffold_points == b.scaffold_points && a.removed_per_step == b.removed_per_step;
}

std::string serialize_complex(const ComplexDocument& doc) {
    json j;
    json heights = json::array();
    for (const Rational& h : doc.complex.heights) heights.push_back(format_rational(h));
    j["heights"] = heights;

    json levels = json::array();
    for (std::size_t i = 0; i < doc.complex.heights.size(); ++i) {
        json lv = polygon_to_json(doc.complex.level_polys[i]);
        lv["height"] = format_rational(doc.complex.heights[i]);
        levels.push_back(lv);
    }
    j["levels"] = levels;

    json slabs = json::array();
    for (std::size_t i = 0; i + 1 < doc.complex.heights.size(); ++i) {
        if (!doc.complex.slab_polys[i]) {
            slabs.push_back(nullptr);
            continue;
        }
        json sl = polygon_to_json(*doc.complex.slab_polys[i]);
        sl["height_interval"] = json::array({format_rational(doc.complex.heights[i]),
                                             format_rational(doc.complex.heights[i + 1])});
        slabs.push_back(sl);
    }
    j["slabs"] = slabs;

    j["extremal_points"] = points_to_json(doc.extremal_points);
    j["scaffolding"] = points_to_json(doc.scaffold_points);
    std::size_t total = 0;
    for (std::size_t n : doc.removed_per_step) total += n;
    j["trace"] = json{{"steps", doc.removed_per_step.size()},
                      {"removed_per_step", doc.removed_per_step},
                      {"total_removed", total}};
    return j.dump(2) + "\n";
}

ComplexDocument parse_complex(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    ComplexDocument doc;
    try {
        for (const auto& h : j.at("heights")) {
            auto q = parse_rational(h.get<std::string>());
            if (!q) throw ParseError("bad height literal");
            doc.complex.heights.push_back(*q);
        }
        for (const auto& lv : j.at("levels"))
            doc.complex.level_polys.push_back(polygon_from_json(lv));
        for (const auto& sl : j.at("slabs")) {
            if (sl.is_null())
                doc.complex.slab_polys.push_back(std::nullopt);
            else
                doc.complex.slab_polys.push_back(polygon_from_json(sl));
        }
        doc.extremal_points = points_from_json(j.at("extremal_points"));
        doc.scaffold_points = points_from_json(j.at("scaffolding"));
        for (const auto& n : j.at("trace").at("removed_per_step"))
            doc.removed_per_step.push_back(n.get<std::size_t>());
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
    if (doc.complex.heights.size() != doc.complex.level_polys.size() ||
        doc.complex.slab_polys.size() + 1 != doc.complex.heights.size())
        throw ParseError("inconsistent complex document");
    return doc;
}

std::string serialize_points(const std::vector<Point3>& pts) {
    json j;
    j["points"] = points_to_json(pts);
    return j.dump(2) + "\n";
}

std::string serialize_trace(const EliminationTrace& trace) {
    json steps = json::array();
    for (const auto& batch : trace.batches) steps.push_back(points_to_json(batch));
    json j;
    j["batches"] = steps;
    j["final"] = points_to_json(trace.final_set.points());
    return j.dump(2) + "\n";
}

namespace {

// Deduplicating OBJ vertex table; indices are 1-based.
class MeshBuilder {
public:
    std::size_t vertex(const Point2& xy, const Rational& z) {
        std::string key = format_double_shortest(xy.x.get_d()) + " " +
                          format_double_shortest(xy.y.get_d()) + " " +
                          format_double_shortest(z.get_d());
        auto [it, inserted] = index_.try_emplace(key, index_.size() + 1);
        if (inserted) verts_ << "v " << key << "\n";
        return it->second;
    }

    void triangle(std::size_t a, std::size_t b, std::size_t c) {
        faces_ << "f " << a << " " << b << " " << c << "\n";
        ++n_faces_;
    }
    void line(std::size_t a, std::size_t b) {
        degenerate_ << "l " << a << " " << b << "\n";
        ++n_lines_;
    }
    void point(std::size_t a) {
        degenerate_ << "p " << a << "\n";
        ++n_points_;
    }

    std::string str() const {
        std::ostringstream out;
        out << "# lossy visualization export; coordinates are rounded to doubles\n";
        out << verts_.str() << faces_.str();
        out << "# degenerate elements: " << n_lines_ << " line(s), " << n_points_
            << " point(s)\n";
        out << degenerate_.str();
        return out.str();
    }

private:
    std::map<std::string, std::size_t> index_;
    std::ostringstream verts_, faces_, degenerate_;
    std::size_t n_faces_ = 0, n_lines_ = 0, n_points_ = 0;
};

void emit_fan(MeshBuilder& mb, const ConvexPolygon& poly, const Rational& z) {
    const auto& v = poly.vertices();
    std::size_t first = mb.vertex(v[0], z);
    for (std::size_t i = 1; i + 1 < v.size(); ++i)
        mb.triangle(first, mb.vertex(v[i], z), mb.vertex(v[i + 1], z));
}

}  // namespace

std::string export_mesh(const HvComplex& m) {
    MeshBuilder mb;
    for (std::size_t j = 0; j < m.heights.size(); ++j) {
        const ConvexPolygon& poly = m.level_polys[j];
        const Rational& z = m.heights[j];
        switch (poly.rank()) {
            case 0:
                mb.point(mb.vertex(poly.vertices()[0], z));
                break;
            case 1:
                mb.line(mb.vertex(poly.vertices()[0], z), mb.vertex(poly.vertices()[1], z));
                break;
            default:
                emit_fan(mb, poly, z);
        }
    }
    for (std::size_t j = 0; j + 1 < m.heights.size(); ++j) {
        if (!m.slab_polys[j]) continue;
        const ConvexPolygon& poly = *m.slab_polys[j];
        const Rational& lo = m.heights[j];
        const Rational& hi = m.heights[j + 1];
        const auto& v = poly.vertices();
        if (poly.rank() == 0) {
            mb.line(mb.vertex(v[0], lo), mb.vertex(v[0], hi));
            continue;
        }
        // Side walls: one vertical rectangle per edge, two triangles each.
        const std::size_t n_edges = poly.rank() == 1 ? 1 : v.size();
        for (std::size_t i = 0; i < n_edges; ++i) {
            const Point2& a = v[i];
            const Point2& b = v[(i + 1) % v.size()];
            std::size_t a0 = mb.vertex(a, lo), b0 = mb.vertex(b, lo);
            std::size_t a1 = mb.vertex(a, hi), b1 = mb.vertex(b, hi);
            mb.triangle(a0, b0, b1);
            mb.triangle(a0, b1, a1);
        }
        if (poly.rank() == 2) {
            emit_fan(mb, poly, lo);
            emit_fan(mb, poly, hi);
        }
    }
    return mb.str();
}

}  // namespace hull
