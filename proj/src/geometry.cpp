#include "ppsf/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace ppsf {

std::vector<double> Geometry::grid() const {
    std::vector<double> xs(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i) xs[i] = x(i);
    return xs;
}

double Geometry::nyquist_density() const {
    return (2.0 * t_half) * (2.0 * omega_half) / (2.0 * std::numbers::pi);
}

std::size_t Geometry::interior_begin() const {
    std::size_t i = 0;
    while (i < grid_points && !inside(i)) ++i;
    return i;
}

std::size_t Geometry::interior_count() const {
    std::size_t count = 0;
    for (std::size_t i = interior_begin(); i < grid_points && inside(i); ++i) ++count;
    return count;
}

std::vector<std::size_t> Geometry::interior_indices() const {
    std::vector<std::size_t> idx;
    idx.reserve(grid_points);
    for (std::size_t i = 0; i < grid_points; ++i)
        if (inside(i)) idx.push_back(i);
    return idx;
}

Geometry Geometry::make(double t_half, double omega_half, double r, double margin,
                        std::size_t grid_points) {
    std::ostringstream problems;
    auto complain = [&](const char* field, const char* what) {
        if (problems.tellp() > 0) problems << "; ";
        problems << field << ": " << what;
    };

    if (!(t_half > 0.0) || !std::isfinite(t_half))
        complain("geometry.t_half", "must be a positive finite real");
    if (!(omega_half > 0.0) || !std::isfinite(omega_half))
        complain("geometry.omega_half", "must be a positive finite real");
    if (!(r > 0.0) || !std::isfinite(r))
        complain("geometry.r", "must be a positive finite real");
    if (!std::isfinite(margin) || !(margin >= t_half))
        complain("geometry.margin", "must be >= t_half (room for off-window padding)");
    if (grid_points < 8)
        complain("geometry.grid_points", "must be at least 8");

    Geometry g{t_half, omega_half, r, margin, grid_points};
    if (problems.tellp() == 0) {
        // The grid has to resolve the band limit, or the sinc discretization
        // stops being projection-like and eigenvalues blow past 1.
        if (omega_half * g.spacing() > std::numbers::pi * (1.0 + 1e-12))
            complain("geometry.grid_points",
                     "grid too coarse for the band: need omega_half*h <= pi");
    }
    if (problems.tellp() > 0) throw validation_error(problems.str());
    return g;
}

Geometry Geometry::with_points_per_unit(double t_half, double omega_half, double r,
                                        double margin, double points_per_unit) {
    if (!(points_per_unit > 0.0) || !std::isfinite(points_per_unit))
        throw validation_error("geometry.points_per_unit: must be a positive finite real");
    const double w = r * t_half + margin;
    const auto n = std::llround(2.0 * w * points_per_unit) + 1;
    return make(t_half, omega_half, r, margin, std::size_t(n < 0 ? 0 : n));
}

double GridFunction::norm_sq() const {
    double s = 0.0;
    for (double v : values) s += v * v;
    return weight * s;
}

double inner(const GridFunction& a, const GridFunction& b) {
    if (a.values.size() != b.values.size() || a.weight != b.weight)
        throw validation_error("inner: grid functions live on different grids");
    double s = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) s += a.values[i] * b.values[i];
    return a.weight * s;
}

} // namespace ppsf
