// Timing harness for the Exec::Serial reference kernels against the
// OpenMP-parallel ones, plus a bitwise equality check between the two.
// Speedups track the core count; on a single-core box both columns match.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <string>

#include <omp.h>

#include "ppsf/kernels.hpp"
#include "ppsf/operators.hpp"

using namespace ppsf;

namespace {

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const double t0 = omp_get_wtime();
        f();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void report(const char* name, double serial, double parallel, bool identical) {
    std::printf("%-28s %10.4f ms %10.4f ms    x%.2f   bitwise %s\n", name,
                serial * 1e3, parallel * 1e3, serial / parallel,
                identical ? "equal" : "DIFFER");
}

} // namespace

int main(int argc, char** argv) {
    const std::size_t n = argc > 1 ? std::stoul(argv[1]) : 1536;
    std::printf("threads available: %d\n", omp_get_max_threads());
    std::printf("%-28s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

    const Geometry geom =
        Geometry::make(0.5, std::numbers::pi, double(n) / 64.0, 1.0, n);

    Matrix band_serial, band_parallel;
    const double ts_band =
        time_best_of(3, [&] { band_serial = build_band_kernel(geom, Exec::Serial); });
    const double tp_band =
        time_best_of(3, [&] { band_parallel = build_band_kernel(geom, Exec::Parallel); });
    report("band kernel fill", ts_band, tp_band,
           std::memcmp(band_serial.data.data(), band_parallel.data.data(),
                       band_serial.data.size() * sizeof(double)) == 0);

    const Matrix conc = build_concentration_matrix(geom);
    Matrix tall(conc.rows, 64);
    for (std::size_t i = 0; i < tall.rows; ++i)
        for (std::size_t j = 0; j < tall.cols; ++j)
            tall(i, j) = std::sin(0.37 * double(i) + 1.13 * double(j));

    Matrix prod_serial, prod_parallel;
    const double ts_mul =
        time_best_of(3, [&] { prod_serial = multiply(conc, tall, Exec::Serial); });
    const double tp_mul =
        time_best_of(3, [&] { prod_parallel = multiply(conc, tall, Exec::Parallel); });
    report("concentration multiply", ts_mul, tp_mul,
           std::memcmp(prod_serial.data.data(), prod_parallel.data.data(),
                       prod_serial.data.size() * sizeof(double)) == 0);
    return 0;
}
