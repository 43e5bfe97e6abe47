#include "ppsf/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ppsf/lapack.hpp"
#include "ppsf/operators.hpp"

namespace ppsf {

GridFunction Spectrum::phi(std::size_t k) const {
    if (k >= size()) throw validation_error("Spectrum::phi: index out of range");
    return {std::vector<double>(phis.row_ptr(k), phis.row_ptr(k) + phis.cols),
            geom.spacing()};
}

Spectrum compute_spectrum(const Geometry& geom) {
    EigResult eig = sym_eig(build_concentration_matrix(geom));
    const std::size_t m = eig.values.size();
    const std::size_t i0 = geom.interior_begin();
    const double scale = 1.0 / std::sqrt(geom.spacing());

    // Descending order; ties keep the solver's (ascending) output order.
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return eig.values[a] > eig.values[b];
    });

    Spectrum spec;
    spec.geom = geom;
    spec.lambdas.resize(m);
    spec.phis = Matrix(m, geom.grid_points);
    for (std::size_t rank = 0; rank < m; ++rank) {
        const std::size_t src = order[rank];
        spec.lambdas[rank] = eig.values[src];
        const double* v = eig.vectors.row_ptr(src);
        double flip = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (v[i] != 0.0) {
                flip = v[i] > 0.0 ? 1.0 : -1.0;
                break;
            }
        }
        double* out = spec.phis.row_ptr(rank) + i0;
        for (std::size_t i = 0; i < m; ++i) out[i] = flip * scale * v[i];
    }
    return spec;
}

std::size_t count_above(const Spectrum& spec, double gamma) {
    if (!(gamma > 0.0) || !(gamma < 1.0))
        throw validation_error("count_above: gamma must lie in (0,1)");
    std::size_t count = 0;
    for (double l : spec.lambdas)
        if (l >= gamma) ++count;
    return count;
}

} // namespace ppsf
