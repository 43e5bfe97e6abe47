#pragma once

#include <cstddef>
#include <vector>

#include "ppsf/errors.hpp"

namespace ppsf {

/// Time window [-t_half, t_half] dilated by r, band [-omega_half, omega_half],
/// and a uniform grid over [-w, w] with w = r*t_half + margin. The grid is
/// exactly antisymmetric about 0; spacing h = 2w/(N-1).
struct Geometry {
    double t_half = 0.0;
    double omega_half = 0.0;
    double r = 0.0;
    double margin = 0.0;
    std::size_t grid_points = 0;

    double window() const { return r * t_half + margin; }
    double spacing() const { return 2.0 * window() / double(grid_points - 1); }
    double time_limit() const { return r * t_half; }
    double x(std::size_t i) const {
        return spacing() * (double(i) - double(grid_points - 1) / 2.0);
    }
    std::vector<double> grid() const;

    /// |T||Omega| / (2 pi), the degrees-of-freedom density per unit dilation.
    double nyquist_density() const;

    bool inside(std::size_t i) const { return std::abs(x(i)) <= time_limit(); }
    /// First grid index inside the dilated time window.
    std::size_t interior_begin() const;
    /// Number of grid points inside the dilated time window (may be 0).
    std::size_t interior_count() const;
    std::vector<std::size_t> interior_indices() const;

    bool operator==(const Geometry&) const = default;

    /// Validates every field and throws a single validation_error listing all
    /// problems with field paths.
    static Geometry make(double t_half, double omega_half, double r, double margin,
                         std::size_t grid_points);

    /// N = round(2*w*points_per_unit) + 1, so resolution scales with r.
    static Geometry with_points_per_unit(double t_half, double omega_half, double r,
                                         double margin, double points_per_unit);
};

/// Samples on the geometry grid with the uniform quadrature weight h.
struct GridFunction {
    std::vector<double> values;
    double weight = 0.0;

    double norm_sq() const;
};

double inner(const GridFunction& a, const GridFunction& b);

} // namespace ppsf
