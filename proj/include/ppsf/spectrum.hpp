#pragma once

#include <cstddef>
#include <vector>

#include "ppsf/geometry.hpp"
#include "ppsf/matrix.hpp"

namespace ppsf {

/// Eigenpairs of the discretized concentration operator, eigenvalues stored
/// raw (unclamped) in nonincreasing order. phis.row(k) is the k-th
/// eigenfunction, orthonormal in the h-weighted inner product and extended by
/// zero outside the dilated time window onto the full grid.
struct Spectrum {
    std::vector<double> lambdas;
    Matrix phis;
    Geometry geom;

    std::size_t size() const { return lambdas.size(); }
    GridFunction phi(std::size_t k) const;
};

/// Dense eigendecomposition of the concentration matrix. Deterministic: fixed
/// descending order with stable ties, and each eigenvector is flipped so its
/// first nonzero component is positive.
Spectrum compute_spectrum(const Geometry& geom);

/// #{k : lambda_k >= gamma}, exact comparison on stored values.
/// gamma must lie in (0,1).
std::size_t count_above(const Spectrum& spec, double gamma);

} // namespace ppsf
