#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ppsf/geometry.hpp"
#include "ppsf/matrix.hpp"
#include "ppsf/spectrum.hpp"

namespace ppsf {

/// Discretization slack applied to residual-bound checks at default
/// resolution, calibrated by the grid-doubling convergence study.
inline constexpr double kDiscTol = 1e-6;

/// Energy budget epsilon split between the near-1 eigenfunction family
/// (threshold 1 - sigma) and the kernel-space share gamma.
struct BudgetSplit {
    double epsilon = 0.0;
    double sigma = 0.0;
    double gamma = 0.0;   // (epsilon - sigma^2) / (1 - sigma^2)

    /// Validates epsilon in (0,1), sigma > 0, sigma^2 <= epsilon.
    static BudgetSplit make(double epsilon, double sigma);
};

/// Orthogonal mixing matrix of the construction. q is the real DFT-derived
/// matrix with the kernel-space columns permuted to the last m positions;
/// lambda_columns holds those positions (the last m indices), so row norms
/// over lambda_columns equal m/order for every row.
struct MixingMatrix {
    std::size_t order = 0;
    Matrix q;
    std::vector<std::size_t> lambda_columns;
};

/// The constructed orthonormal family. functions.row(j) is Phi_j on the full
/// grid; its energy splits exactly between the eigenfunction span (psi, inside
/// the time window) and the kernel-space padding (rho, outside).
struct PseudoProlateSet {
    Matrix functions;                    // (m+n) x N
    std::vector<double> psi_norms_sq;
    std::vector<double> rho_norms_sq;    // = m/(m+n) per row
    std::vector<double> residuals;       // ||P Phi_j - Phi_j||^2, P applied directly
    BudgetSplit budget;
    std::size_t n = 0;
    std::size_t m = 0;

    std::size_t count() const { return n + m; }
    /// Analytic residual bound sigma^2 + (1-sigma^2) * m/(m+n).
    double bound() const;
};

/// F = {k : lambda_k > 1 - sigma}, strict comparison on stored values.
/// Returns (indices, n). Throws when the family is empty. Any sigma > 0 is
/// accepted; sigma >= 1 selects every positive eigenvalue.
std::pair<std::vector<std::size_t>, std::size_t> select_family(const Spectrum& spec,
                                                               double sigma);

/// Biggest m with m <= gamma*(m+n), i.e. m <= n*gamma/(1-gamma), with a
/// 1e-12-relative guard so exact-integer boundaries are kept.
std::size_t choose_m(std::size_t n, const BudgetSplit& budget);

/// m orthonormal grid functions supported on disjoint index blocks strictly
/// outside the dilated time window; exact members of the discretized kernel.
std::vector<GridFunction> kernel_padding_basis(const Geometry& geom, std::size_t m);

/// Real orthogonal matrix with entries
/// (cos(2 pi i j / order) - sin(2 pi i j / order)) / sqrt(order),
/// the real plus imaginary parts of the unitary DFT matrix.
Matrix dft_mixing_matrix(std::size_t order);

/// Column indices carrying the kernel-space share: m even ->
/// {1..m/2} u {order-m/2..order-1}; m odd adds column 0 to the pattern for
/// m-1. m = order returns every column.
std::vector<std::size_t> select_lambda_columns(std::size_t order, std::size_t m);

/// dft_mixing_matrix(order) with the selected columns moved to the last m
/// positions (relative order preserved on both sides).
MixingMatrix build_mixing_matrix(std::size_t order, std::size_t m);

/// Runs the whole construction: family selection, m, padding basis, mixing.
/// When enforce_residual_bound is set, a residual above epsilon + kDiscTol
/// throws numeric_error (discretization too coarse); serializers pass false
/// and flag instead.
PseudoProlateSet construct(const Spectrum& spec, const Geometry& geom,
                           const BudgetSplit& budget, bool enforce_residual_bound = true);

} // namespace ppsf
