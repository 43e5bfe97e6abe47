#include "ppsf/slepian.hpp"

#include <cmath>

#include "ppsf/errors.hpp"

namespace ppsf {

namespace {
constexpr double kEdgeGuard = 1e-12;
}

SlepianSequence slepian_g(const Spectrum& spec, const Geometry& geom, double epsilon,
                          std::size_t j_max, bool normalize) {
    if (spec.geom != geom)
        throw validation_error("slepian_g: spectrum was computed on a different geometry");
    if (!(epsilon > 0.0)) throw validation_error("slepian_g: epsilon must be positive");
    if (j_max >= spec.size())
        throw validation_error("slepian_g: j_max exceeds the spectrum size");

    SlepianSequence seq;
    seq.epsilon = epsilon;
    seq.source = &spec;
    for (std::size_t j = 0; j <= j_max; ++j) {
        const double lambda = spec.lambdas[j];
        if (lambda <= kEdgeGuard || lambda >= 1.0 - kEdgeGuard)
            seq.excluded.push_back(j);
        else
            seq.indices.push_back(j);
    }

    seq.functions = Matrix(seq.indices.size(), geom.grid_points);
    for (std::size_t row = 0; row < seq.indices.size(); ++row) {
        const std::size_t j = seq.indices[row];
        const double lambda = spec.lambdas[j];
        const double outside_factor = std::sqrt(epsilon / (1.0 - lambda));
        const double inside_factor =
            outside_factor + std::sqrt(epsilon / (lambda * (1.0 - lambda)));
        const double* phi = spec.phis.row_ptr(j);
        double* g = seq.functions.row_ptr(row);
        for (std::size_t i = 0; i < geom.grid_points; ++i)
            g[i] = (geom.inside(i) ? inside_factor : outside_factor) * phi[i];
        if (normalize) {
            double s = 0.0;
            for (std::size_t i = 0; i < geom.grid_points; ++i) s += g[i] * g[i];
            const double norm = std::sqrt(geom.spacing() * s);
            if (norm > 0.0)
                for (std::size_t i = 0; i < geom.grid_points; ++i) g[i] /= norm;
        }
    }
    return seq;
}

double slepian_dimension_slope(std::span<const Spectrum> family, double epsilon) {
    if (family.size() < 3)
        throw validation_error("slepian_dimension_slope: need at least three dilations");
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw validation_error("slepian_dimension_slope: epsilon must lie in (0,1)");
    for (std::size_t i = 1; i < family.size(); ++i)
        if (!(family[i].geom.r > family[i - 1].geom.r))
            throw validation_error(
                "slepian_dimension_slope: dilations must be strictly increasing");

    // Count proxy for the approximating-set size, regressed on r.
    double mean_r = 0.0, mean_count = 0.0;
    std::vector<double> counts(family.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        std::size_t c = 0;
        for (double l : family[i].lambdas)
            if (l > epsilon) ++c;
        counts[i] = double(c);
        mean_r += family[i].geom.r;
        mean_count += counts[i];
    }
    mean_r /= double(family.size());
    mean_count /= double(family.size());

    double cov = 0.0, var = 0.0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const double dr = family[i].geom.r - mean_r;
        cov += dr * (counts[i] - mean_count);
        var += dr * dr;
    }
    return cov / var;
}

} // namespace ppsf
