#include "ppsf/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ppsf/dpss.hpp"
#include "ppsf/kernels.hpp"
#include "ppsf/operators.hpp"
#include "ppsf/pseudoprolate.hpp"
#include "ppsf/spectrum.hpp"

namespace ppsf {

namespace {

std::string detail(double observed, double tolerance) {
    std::ostringstream s;
    s.precision(3);
    s << "observed " << observed << ", tolerance " << tolerance;
    return s.str();
}

} // namespace

std::vector<VerifyResult> run_verify_suite(const VerifyTolerances& tol) {
    std::vector<VerifyResult> results;
    const auto check = [&](const std::string& name, double observed, double tolerance) {
        results.push_back({name, observed <= tolerance, detail(observed, tolerance)});
    };

    // Orthogonality ladder for the DFT-derived mixing matrix.
    {
        double worst = 0.0;
        for (std::size_t order = 1; order <= 128; ++order) {
            const Matrix x = dft_mixing_matrix(order);
            Matrix gram(order, order);
            for (std::size_t i = 0; i < order; ++i)
                for (std::size_t j = 0; j < order; ++j) {
                    double s = 0.0;
                    for (std::size_t k = 0; k < order; ++k) s += x(k, i) * x(k, j);
                    gram(i, j) = s;
                }
            worst = std::max(worst, max_abs_off_identity(gram));
        }
        check("mixing-orthogonality", worst, tol.mixing_orth);
    }

    // Kernel-column row energies, every m and both parities.
    {
        double worst = 0.0;
        for (std::size_t order = 1; order <= 128; ++order) {
            const Matrix x = dft_mixing_matrix(order);
            for (std::size_t m = 0; m <= order; ++m) {
                const auto cols = select_lambda_columns(order, m);
                const double want = double(m) / double(order);
                for (std::size_t i = 0; i < order; ++i) {
                    double s = 0.0;
                    for (std::size_t c : cols) s += x(i, c) * x(i, c);
                    worst = std::max(worst, std::abs(s - want));
                }
            }
        }
        check("mixing-row-norms", worst, tol.mixing_row_norm);
    }

    // Calibration geometry small enough to keep verify interactive.
    const Geometry geom = Geometry::make(0.5, std::numbers::pi, 4.0, 1.0, 320);
    const Spectrum spec = compute_spectrum(geom);
    const Matrix p = build_concentration_matrix(geom);
    const std::size_t m_count = spec.size();
    const double h = geom.spacing();

    {
        const std::size_t i0 = geom.interior_begin();
        Matrix inside(m_count, m_count);
        for (std::size_t k = 0; k < m_count; ++k) {
            const double* row = spec.phis.row_ptr(k) + i0;
            std::copy(row, row + m_count, inside.row_ptr(k));
        }
        Matrix gram(m_count, m_count);
        for (std::size_t i = 0; i < m_count; ++i)
            for (std::size_t j = 0; j < m_count; ++j) {
                double s = 0.0;
                const double* a = inside.row_ptr(i);
                const double* b = inside.row_ptr(j);
                for (std::size_t k = 0; k < m_count; ++k) s += a[k] * b[k];
                gram(i, j) = h * s;
            }
        check("spectrum-gram", max_abs_off_identity(gram), tol.spectrum_gram);

        double trace_sum = 0.0, lambda_sum = 0.0;
        for (std::size_t i = 0; i < m_count; ++i) trace_sum += p(i, i);
        for (double l : spec.lambdas) lambda_sum += l;
        check("trace-identity", std::abs(lambda_sum - trace_sum), tol.trace_identity);

        const double expected = geom.r * geom.nyquist_density();
        check("trace-convergence", std::abs(lambda_sum - expected) / expected,
              tol.trace_relative);

        double worst_rayleigh = 0.0;
        for (std::size_t k = 0; k < m_count; ++k) {
            const double* v = inside.row_ptr(k);
            double quad = 0.0;
            for (std::size_t i = 0; i < m_count; ++i) {
                double s = 0.0;
                const double* prow = p.row_ptr(i);
                for (std::size_t j = 0; j < m_count; ++j) s += prow[j] * v[j];
                quad += v[i] * s;
            }
            worst_rayleigh = std::max(worst_rayleigh, std::abs(h * quad - spec.lambdas[k]));
        }
        check("spectrum-rayleigh", worst_rayleigh, tol.rayleigh);
    }

    // Tridiagonal backend on the matched grid: same underlying matrix, fully
    // independent eigensolve route.
    {
        const double w = geom.omega_half * h / (2.0 * std::numbers::pi);
        double worst = 0.0;
        for (std::size_t k = 0; k < 5; ++k) {
            const DpssPair pair = dpss_oracle(m_count, w, k);
            worst = std::max(worst, std::abs(pair.concentration - spec.lambdas[k]));
        }
        check("backend-agreement", worst, tol.backend);
    }

    // End-to-end construction on the same geometry.
    {
        const BudgetSplit budget = BudgetSplit::make(0.2, std::sqrt(0.02));
        const PseudoProlateSet set = construct(spec, geom, budget, false);
        double worst_resid = 0.0, worst_rho = 0.0;
        const double want_rho = double(set.m) / double(set.count());
        for (std::size_t j = 0; j < set.count(); ++j) {
            worst_resid = std::max(worst_resid, set.residuals[j] - (set.bound() + kDiscTol));
            worst_rho = std::max(worst_rho, std::abs(set.rho_norms_sq[j] - want_rho));
        }
        check("construction-residuals", std::max(worst_resid, 0.0), 0.0);
        check("construction-kernel-energy", worst_rho, 1e-10);

        Matrix gram(set.count(), set.count());
        for (std::size_t i = 0; i < set.count(); ++i)
            for (std::size_t j = 0; j < set.count(); ++j) {
                double s = 0.0;
                const double* a = set.functions.row_ptr(i);
                const double* b = set.functions.row_ptr(j);
                for (std::size_t k = 0; k < geom.grid_points; ++k) s += a[k] * b[k];
                gram(i, j) = h * s;
            }
        check("construction-gram", max_abs_off_identity(gram), tol.construction_gram);
    }

    return results;
}

} // namespace ppsf
