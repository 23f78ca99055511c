#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hull/hull_core.hpp"

namespace hull {

struct VerificationCheck {
    std::string name;
    bool pass;
    std::string details;  // counterexample or certificate summary
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool overall = true;

    void add(std::string name, bool pass, std::string details = {});
};

// Cross-checks a finished run against the inner and outer approximations:
//   1. complex extremal points lie in k
//   2. finitely extremal points of the final set lie in k
//   3. sampled points of k-to-k horizontal/vertical segments are members
//   4. sampled points of the complex pass the shovel outer oracle
//   5. the trace is monotone, disjoint from k, and within the grid bound
//   6. every removed point has a separating-line certificate at its height
// `trace` and `m` must come from a run of eliminate/hv_hull on k.
VerificationReport verify_hull(const std::vector<Point3>& k, const EliminationTrace& trace,
                               const HvComplex& m, int samples, std::uint64_t seed);

// Independent oracle for the single-height degenerate case, where the hull
// reduces to plane convexity.
ConvexPolygon brute_force_hull_1level(const std::vector<Point3>& k);

}  // namespace hull
