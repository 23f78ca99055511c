#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hull/hull_core.hpp"

namespace hull {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputDocument {
    std::vector<Point3> points;       // at least one
    std::vector<std::string> labels;  // optional, empty or one per point
};

// Accepts either {"points": [...], "labels": [...]} or a bare array of
// points; each point is an array of three rational literals ("p/q",
// integer, or finite decimal). JSON integers are accepted, JSON floats are
// not (no exact value recoverable).
InputDocument parse_input(const std::string& text);
std::string serialize_input(const InputDocument& doc);

// Exact, lossless interchange form of a finished run. All numerics are
// rational strings; serialization order is deterministic.
struct ComplexDocument {
    HvComplex complex;
    std::vector<Point3> extremal_points;
    std::vector<Point3> scaffold_points;
    std::vector<std::size_t> removed_per_step;

    friend bool operator==(const ComplexDocument&, const ComplexDocument&);
};

std::string serialize_complex(const ComplexDocument& doc);
ComplexDocument parse_complex(const std::string& text);

std::string serialize_points(const std::vector<Point3>& pts);

std::string serialize_trace(const EliminationTrace& trace);

// Wavefront OBJ, lossy by design: coordinates become shortest round-trip
// doubles. Rank-2 levels are fan-triangulated, slabs extruded; rank-0/1
// elements appear as point/line records in a marked section.
std::string export_mesh(const HvComplex& m);

}  // namespace hull
