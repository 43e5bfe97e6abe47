#include "ppsf/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace ppsf {

namespace {

// Upper triangle including the diagonal; the caller mirrors.
inline double sinc_entry(double xi, double xj, double omega, double weight,
                         bool diagonal) {
    if (diagonal) return weight * omega / std::numbers::pi;
    const double dx = xi - xj;
    return weight * std::sin(omega * dx) / (std::numbers::pi * dx);
}

} // namespace

Matrix sinc_kernel(const std::vector<double>& x, double omega, double weight, Exec mode) {
    const std::size_t n = x.size();
    Matrix k(n, n);
    const auto fill_row = [&](std::size_t i) {
        for (std::size_t j = i; j < n; ++j)
            k(i, j) = sinc_entry(x[i], x[j], omega, weight, i == j);
    };
    if (mode == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < std::int64_t(n); ++i) fill_row(std::size_t(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) fill_row(i);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) k(i, j) = k(j, i);
    return k;
}

Matrix multiply(const Matrix& a, const Matrix& b, Exec mode) {
    if (a.cols != b.rows) throw validation_error("multiply: inner dimensions differ");
    Matrix c(a.rows, b.cols);
    const auto row_product = [&](std::size_t i) {
        double* ci = c.row_ptr(i);
        const double* ai = a.row_ptr(i);
        for (std::size_t k = 0; k < a.cols; ++k) {
            const double aik = ai[k];
            const double* bk = b.row_ptr(k);
            for (std::size_t j = 0; j < b.cols; ++j) ci[j] += aik * bk[j];
        }
    };
    if (mode == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < std::int64_t(a.rows); ++i) row_product(std::size_t(i));
    } else {
        for (std::size_t i = 0; i < a.rows; ++i) row_product(i);
    }
    return c;
}

std::vector<double> multiply(const Matrix& a, const std::vector<double>& v, Exec mode) {
    if (a.cols != v.size()) throw validation_error("multiply: vector length differs");
    std::vector<double> out(a.rows, 0.0);
    const auto dot_row = [&](std::size_t i) {
        const double* ai = a.row_ptr(i);
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols; ++j) s += ai[j] * v[j];
        out[i] = s;
    };
    if (mode == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < std::int64_t(a.rows); ++i) dot_row(std::size_t(i));
    } else {
        for (std::size_t i = 0; i < a.rows; ++i) dot_row(i);
    }
    return out;
}

} // namespace ppsf
