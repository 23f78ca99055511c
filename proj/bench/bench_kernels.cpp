// Compares the OpenMP kernels against their serial references on growing
// random planar sets. Usage: bench_kernels [max_points]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <vector>

#include "hull/grid.hpp"
#include "hull/hull_core.hpp"

using namespace hull;
namespace chrono = std::chrono;

namespace {

template <typename F>
double time_ms(F&& f) {
    auto t0 = chrono::steady_clock::now();
    f();
    return chrono::duration<double, std::milli>(chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int max_points = argc > 1 ? std::atoi(argv[1]) : 28;
    std::mt19937_64 rng(97);
    std::uniform_int_distribution<int> coord(-50, 50);

    std::cout << "derived-set enumeration (O(n^4) segment pairs)\n";
    std::cout << "n\tserial_ms\tparallel_ms\tspeedup\n";
    for (int n = 8; n <= max_points; n += 4) {
        std::vector<Point2> f;
        for (int i = 0; i < n; ++i) f.push_back(Point2{Rational(coord(rng)), Rational(coord(rng))});
        std::vector<Point2> serial_out, parallel_out;
        double ts = time_ms([&] { serial_out = first_derived_set_serial(f); });
        double tp = time_ms([&] { parallel_out = first_derived_set(f); });
        if (serial_out != parallel_out) {
            std::cerr << "MISMATCH at n=" << n << "\n";
            return 1;
        }
        std::cout << n << "\t" << ts << "\t" << tp << "\t" << ts / tp << "\n";
    }

    std::cout << "\nper-level extremal points\n";
    std::cout << "levels\tserial_ms\tparallel_ms\tspeedup\n";
    std::uniform_int_distribution<int> small(-20, 20);
    for (int levels = 8; levels <= 4 * max_points; levels *= 2) {
        std::vector<Point3> pts;
        for (int h = 0; h < levels; ++h)
            for (int i = 0; i < 40; ++i)
                pts.push_back(Point3{{Rational(small(rng)), Rational(small(rng))}, Rational(h)});
        ActiveSet a = ActiveSet::from_points(pts);
        std::vector<Point3> serial_out, parallel_out;
        double ts = time_ms([&] { serial_out = finitely_extremal_serial(a); });
        double tp = time_ms([&] { parallel_out = finitely_extremal(a); });
        if (serial_out != parallel_out) {
            std::cerr << "MISMATCH at levels=" << levels << "\n";
            return 1;
        }
        std::cout << levels << "\t" << ts << "\t" << tp << "\t" << ts / tp << "\n";
    }
    return 0;
}
