#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ppsf/geometry.hpp"

namespace ppsf {

/// One row of a counting experiment at dilation r.
struct SweepRecord {
    double r = 0.0;
    double epsilon = 0.0;
    double sigma = 0.0;
    double gamma = 0.0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t count = 0;        // m + n
    std::size_t lp_count = 0;     // eigenvalues >= 1/2
    std::size_t grid_points = 0;
    double slope = 0.0;           // count / r
    double target = 0.0;          // (1-epsilon)^-1 * |T||Omega|/(2 pi)
    double lp_target = 0.0;       // |T||Omega|/(2 pi)
    double max_residual = 0.0;
    bool valid = false;
    std::string note;             // failure note; empty on success

    double lp_slope() const { return double(lp_count) / r; }
};

/// Full spectrum + construction pipeline at each dilation in r_list (strictly
/// increasing, at least two entries). The grid density of geom_template
/// (points per unit length) is reused at every r, so discretization error is
/// comparable across the sweep. A failing r is flagged in its record and the
/// sweep continues.
std::vector<SweepRecord> run_sweep(const Geometry& geom_template,
                                   const std::vector<double>& r_list, double epsilon,
                                   double sigma);

/// Reference slopes for a density D = |T||Omega|/(2 pi).
double sharp_slope(double epsilon, double density);        // D / (1-eps)
double lower_bound_slope(double epsilon, double density);  // (1+eps) D
double upper_bound_slope(double epsilon, double density);  // D / (1-2 eps), inf for eps >= 1/2

struct SandwichReport {
    double r = 0.0;
    double slope = 0.0;
    double lower = 0.0;       // (1+eps) D
    double upper = 0.0;       // D / (1-2 eps)
    double band_lo = 0.0;     // lower - 0.1 D
    double band_hi = 0.0;     // upper + 0.1 D
    double sharp = 0.0;       // D / (1-eps)
    bool pass_lower = false;
    bool pass_upper = false;

    bool ok() const { return pass_lower && pass_upper; }
};

/// Checks the largest-r valid record against the slope band
/// [(1+eps) D - 0.1 D, (1-2 eps)^-1 D + 0.1 D]. Throws numeric_error when no
/// record is valid.
SandwichReport sandwich_check(const std::vector<SweepRecord>& records);

} // namespace ppsf
