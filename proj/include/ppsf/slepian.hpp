#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ppsf/geometry.hpp"
#include "ppsf/matrix.hpp"
#include "ppsf/spectrum.hpp"

namespace ppsf {

/// Comparison sequence g_j = sqrt(eps/(1-lambda_j)) phi_j
///                        + sqrt(eps/(lambda_j (1-lambda_j))) 1_rT phi_j,
/// evaluated on the grid. Indices whose eigenvalue sits within 1e-12 of 0 or 1
/// are excluded (the prefactors blow up) and reported, never silently dropped.
struct SlepianSequence {
    Matrix functions;                     // one row per included index
    std::vector<std::size_t> indices;     // included j, ascending
    std::vector<std::size_t> excluded;    // j with lambda_j ~ 0 or ~ 1
    double epsilon = 0.0;
    const Spectrum* source = nullptr;     // not owned; outlive the sequence
};

/// Formula applied verbatim for j = 0..j_max. normalize rescales each row to
/// unit h-norm for plotting.
SlepianSequence slepian_g(const Spectrum& spec, const Geometry& geom, double epsilon,
                          std::size_t j_max, bool normalize = false);

/// Least-squares slope (with intercept) of the eigenvalue-count proxy
/// #{lambda_k > epsilon} against r, over at least three spectra with strictly
/// increasing r. A proxy for the approximate-dimension growth rate, labeled as
/// such in outputs.
double slepian_dimension_slope(std::span<const Spectrum> family, double epsilon);

} // namespace ppsf
