#pragma once

#include <vector>

#include "ppsf/matrix.hpp"

namespace ppsf {

/// Full eigendecomposition, eigenvalues ascending. vectors.row(k) is the unit
/// eigenvector of values[k].
struct EigResult {
    std::vector<double> values;
    Matrix vectors;
};

/// Dense symmetric eigensolve (LAPACK dsyevd). Only the lower triangle of the
/// row-major input is referenced. Throws numeric_error on non-convergence.
EigResult sym_eig(Matrix a);

/// Symmetric tridiagonal eigensolve (LAPACK dstevd). diag has length n,
/// offdiag length n-1.
EigResult tridiag_eig(std::vector<double> diag, std::vector<double> offdiag);

} // namespace ppsf
