#include "ppsf/operators.hpp"

#include "ppsf/errors.hpp"

namespace ppsf {

GridFunction apply_time_limit(const Geometry& geom, const GridFunction& f) {
    if (f.values.size() != geom.grid_points)
        throw validation_error("apply_time_limit: function length differs from grid");
    GridFunction g{std::vector<double>(geom.grid_points, 0.0), f.weight};
    for (std::size_t i = 0; i < geom.grid_points; ++i)
        if (geom.inside(i)) g.values[i] = f.values[i];
    return g;
}

Matrix build_band_kernel(const Geometry& geom, Exec mode) {
    return sinc_kernel(geom.grid(), geom.omega_half, geom.spacing(), mode);
}

Matrix build_concentration_matrix(const Geometry& geom, Exec mode) {
    const std::size_t m = geom.interior_count();
    if (m == 0)
        throw validation_error(
            "degenerate geometry: no grid point inside the dilated time window");
    const std::size_t i0 = geom.interior_begin();
    std::vector<double> xs(m);
    for (std::size_t i = 0; i < m; ++i) xs[i] = geom.x(i0 + i);
    return sinc_kernel(xs, geom.omega_half, geom.spacing(), mode);
}

} // namespace ppsf
