#pragma once

#include <string>
#include <vector>

namespace ppsf {

/// Tolerances for the self-check suite, injectable so a corrupted tolerance
/// is detectable in tests.
struct VerifyTolerances {
    double mixing_orth = 1e-12;
    double mixing_row_norm = 1e-12;
    double spectrum_gram = 1e-10;
    double trace_identity = 1e-9;
    double trace_relative = 5e-3;
    double rayleigh = 1e-9;
    double backend = 1e-6;
    double construction_gram = 1e-9;
};

struct VerifyResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Read-only invariant suite on pinned calibration geometries: mixing-matrix
/// orthogonality and row-norm ladders, spectrum Gram/trace/Rayleigh checks,
/// tridiagonal-vs-dense backend agreement on a matched grid, and a full
/// construction with its residual bounds. Writes nothing.
std::vector<VerifyResult> run_verify_suite(const VerifyTolerances& tol = {});

} // namespace ppsf
