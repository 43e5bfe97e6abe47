#include "ppsf/pseudoprolate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ppsf/operators.hpp"

namespace ppsf {

BudgetSplit BudgetSplit::make(double epsilon, double sigma) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw validation_error("budget.epsilon: must lie in (0,1)");
    if (!(sigma > 0.0)) throw validation_error("budget.sigma: must be positive");
    if (sigma * sigma > epsilon)
        throw validation_error("budget.sigma: sigma^2 must not exceed epsilon");
    const double s2 = sigma * sigma;
    return {epsilon, sigma, (epsilon - s2) / (1.0 - s2)};
}

std::pair<std::vector<std::size_t>, std::size_t> select_family(const Spectrum& spec,
                                                               double sigma) {
    if (!(sigma > 0.0)) throw validation_error("select_family: sigma must be positive");
    const double threshold = 1.0 - sigma;
    std::vector<std::size_t> family;
    for (std::size_t k = 0; k < spec.size(); ++k)
        if (spec.lambdas[k] > threshold) family.push_back(k);
    if (family.empty())
        throw validation_error(
            "select_family: no eigenvalue above 1-sigma; enlarge r or sigma");
    const std::size_t n = family.size();
    return {std::move(family), n};
}

std::size_t choose_m(std::size_t n, const BudgetSplit& budget) {
    const double gamma = budget.gamma;
    if (gamma <= 0.0) return 0;
    const double exact = double(n) * gamma / (1.0 - gamma);
    if (!(exact < 1e9))
        throw validation_error("choose_m: gamma too close to 1, m would be impractical");

    // Defining inequality m <= gamma*(m+n), with a relative slack so an
    // exact-integer boundary (e.g. n=10, gamma=1/11) lands on the boundary
    // value instead of one below it.
    const auto fits = [&](std::size_t m) {
        const double order = double(m) + double(n);
        return double(m) <= gamma * order + 1e-12 * order;
    };
    auto m = std::size_t(exact);
    while (fits(m + 1)) ++m;
    while (m > 0 && !fits(m)) --m;
    return m;
}

std::vector<GridFunction> kernel_padding_basis(const Geometry& geom, std::size_t m) {
    std::vector<std::size_t> outside;
    outside.reserve(geom.grid_points);
    for (std::size_t i = 0; i < geom.grid_points; ++i)
        if (!geom.inside(i)) outside.push_back(i);
    if (m > outside.size())
        throw validation_error(
            "kernel_padding_basis: only " + std::to_string(outside.size()) +
            " grid points lie outside the time window; increase margin or grid_points");

    std::vector<GridFunction> basis;
    basis.reserve(m);
    const double h = geom.spacing();
    for (std::size_t c = 0; c < m; ++c) {
        const std::size_t lo = c * outside.size() / m;
        const std::size_t hi = (c + 1) * outside.size() / m;
        GridFunction f{std::vector<double>(geom.grid_points, 0.0), h};
        const double value = 1.0 / std::sqrt(h * double(hi - lo));
        for (std::size_t i = lo; i < hi; ++i) f.values[outside[i]] = value;
        basis.push_back(std::move(f));
    }
    return basis;
}

Matrix dft_mixing_matrix(std::size_t order) {
    if (order == 0) throw validation_error("dft_mixing_matrix: order must be positive");
    Matrix x(order, order);
    const double scale = 1.0 / std::sqrt(double(order));
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = 0; j < order; ++j) {
            // Reduce i*j mod order before the trig call to keep the angle
            // argument exact at large orders.
            const double angle =
                2.0 * std::numbers::pi * double((i * j) % order) / double(order);
            x(i, j) = (std::cos(angle) - std::sin(angle)) * scale;
        }
    }
    return x;
}

std::vector<std::size_t> select_lambda_columns(std::size_t order, std::size_t m) {
    if (m > order)
        throw validation_error("select_lambda_columns: m exceeds the matrix order");
    std::vector<std::size_t> cols;
    if (m == 0) return cols;
    if (m == order) {
        cols.resize(order);
        for (std::size_t i = 0; i < order; ++i) cols[i] = i;
        return cols;
    }
    const std::size_t half = m / 2;
    if (m % 2 == 1) cols.push_back(0);
    for (std::size_t i = 1; i <= half; ++i) cols.push_back(i);
    for (std::size_t i = order - half; i < order; ++i) cols.push_back(i);
    return cols;
}

MixingMatrix build_mixing_matrix(std::size_t order, std::size_t m) {
    const Matrix x = dft_mixing_matrix(order);
    const std::vector<std::size_t> selected = select_lambda_columns(order, m);
    std::vector<bool> is_selected(order, false);
    for (std::size_t c : selected) is_selected[c] = true;

    // Non-selected columns first, then the selected ones; both keep their
    // relative order, so the layout is deterministic.
    std::vector<std::size_t> perm;
    perm.reserve(order);
    for (std::size_t c = 0; c < order; ++c)
        if (!is_selected[c]) perm.push_back(c);
    for (std::size_t c : selected) perm.push_back(c);

    MixingMatrix mix;
    mix.order = order;
    mix.q = Matrix(order, order);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) mix.q(i, j) = x(i, perm[j]);
    mix.lambda_columns.reserve(m);
    for (std::size_t j = order - m; j < order; ++j) mix.lambda_columns.push_back(j);
    return mix;
}

double PseudoProlateSet::bound() const {
    const double s2 = budget.sigma * budget.sigma;
    return s2 + (1.0 - s2) * double(m) / double(m + n);
}

PseudoProlateSet construct(const Spectrum& spec, const Geometry& geom,
                           const BudgetSplit& budget, bool enforce_residual_bound) {
    if (spec.geom != geom)
        throw validation_error("construct: spectrum was computed on a different geometry");

    auto [family, n] = select_family(spec, budget.sigma);
    const std::size_t m = choose_m(n, budget);
    const std::size_t order = n + m;
    const std::vector<GridFunction> padding = kernel_padding_basis(geom, m);
    const MixingMatrix mix = build_mixing_matrix(order, m);

    // First orthonormal basis of the mixed space: selected eigenfunctions,
    // then the padding functions, as rows.
    Matrix basis(order, geom.grid_points);
    for (std::size_t k = 0; k < n; ++k) {
        const double* src = spec.phis.row_ptr(family[k]);
        std::copy(src, src + geom.grid_points, basis.row_ptr(k));
    }
    for (std::size_t k = 0; k < m; ++k) {
        const auto& values = padding[k].values;
        std::copy(values.begin(), values.end(), basis.row_ptr(n + k));
    }

    PseudoProlateSet set;
    set.budget = budget;
    set.n = n;
    set.m = m;
    set.functions = multiply(mix.q, basis);

    const double h = geom.spacing();
    const std::size_t i0 = geom.interior_begin();
    const std::size_t interior = geom.interior_count();
    set.psi_norms_sq.resize(order);
    set.rho_norms_sq.resize(order);
    for (std::size_t j = 0; j < order; ++j) {
        const double* f = set.functions.row_ptr(j);
        double in = 0.0, out = 0.0;
        for (std::size_t i = 0; i < geom.grid_points; ++i) {
            const double v = f[i] * f[i];
            if (i >= i0 && i < i0 + interior)
                in += v;
            else
                out += v;
        }
        set.psi_norms_sq[j] = h * in;
        set.rho_norms_sq[j] = h * out;
    }

    // Residuals by direct application of the discretized operator. Off the
    // time window P Phi vanishes, so the tail contributes the rho energy.
    Matrix inside(order, interior);
    for (std::size_t j = 0; j < order; ++j)
        std::copy(set.functions.row_ptr(j) + i0, set.functions.row_ptr(j) + i0 + interior,
                  inside.row_ptr(j));
    const Matrix p = build_concentration_matrix(geom);
    const Matrix applied = multiply(inside, p);   // rows: (P Phi_j)|interior, P symmetric
    set.residuals.resize(order);
    for (std::size_t j = 0; j < order; ++j) {
        const double* a = applied.row_ptr(j);
        const double* f = inside.row_ptr(j);
        double s = 0.0;
        for (std::size_t i = 0; i < interior; ++i) {
            const double d = a[i] - f[i];
            s += d * d;
        }
        set.residuals[j] = h * s + set.rho_norms_sq[j];
    }

    if (enforce_residual_bound) {
        for (std::size_t j = 0; j < order; ++j) {
            if (set.residuals[j] > budget.epsilon + kDiscTol)
                throw numeric_error(
                    "construct: residual " + std::to_string(set.residuals[j]) +
                    " at function " + std::to_string(j) +
                    " exceeds epsilon + disc_tol; the grid is too coarse");
        }
    }
    return set;
}

} // namespace ppsf
