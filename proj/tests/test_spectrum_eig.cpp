#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numbers>
#include <random>
#include <vector>

#include "ppsf/lapack.hpp"
#include "ppsf/operators.hpp"
#include "ppsf/spectrum.hpp"

using namespace ppsf;

TEST_CASE("symmetric eigensolve on a hand-checked 2x2") {
    Matrix a(2, 2);
    a(0, 0) = 2; a(0, 1) = 1;
    a(1, 0) = 1; a(1, 1) = 2;
    const EigResult eig = sym_eig(a);
    REQUIRE(eig.values.size() == 2);
    CHECK(eig.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eig.values[1] == doctest::Approx(3.0).epsilon(1e-14));
    const double s = 1.0 / std::sqrt(2.0);
    // Eigenvectors up to sign.
    CHECK(std::abs(eig.vectors(0, 0) * eig.vectors(0, 1)) == doctest::Approx(s * s));
    CHECK(eig.vectors(0, 0) * eig.vectors(0, 1) < 0.0);  // (1,-1) direction
    CHECK(eig.vectors(1, 0) * eig.vectors(1, 1) > 0.0);  // (1, 1) direction

    CHECK_THROWS_AS(sym_eig(Matrix(2, 3)), validation_error);
}

TEST_CASE("tridiagonal and dense eigensolves agree on the same matrix") {
    const std::size_t n = 40;
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::vector<double> diag(n), off(n - 1);
    for (double& v : diag) v = dist(rng);
    for (double& v : off) v = dist(rng);

    Matrix dense(n, n);
    for (std::size_t i = 0; i < n; ++i) dense(i, i) = diag[i];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        dense(i, i + 1) = off[i];
        dense(i + 1, i) = off[i];
    }

    const EigResult a = tridiag_eig(diag, off);
    const EigResult b = sym_eig(dense);
    REQUIRE(a.values.size() == n);
    for (std::size_t i = 0; i < n; ++i)
        CHECK(std::abs(a.values[i] - b.values[i]) < 1e-12);

    CHECK_THROWS_AS(tridiag_eig({}, {}), validation_error);
    CHECK_THROWS_AS(tridiag_eig({1.0, 2.0}, {}), validation_error);
}

TEST_CASE("spectrum ordering, normalization, and zero extension") {
    const Geometry g = Geometry::make(0.5, std::numbers::pi, 2.0, 1.0, 129);
    const Spectrum spec = compute_spectrum(g);
    const std::size_t m = g.interior_count();
    REQUIRE(spec.size() == m);
    REQUIRE(spec.phis.rows == m);
    REQUIRE(spec.phis.cols == g.grid_points);

    for (std::size_t k = 1; k < m; ++k)
        CHECK(spec.lambdas[k] <= spec.lambdas[k - 1]);
    CHECK(spec.lambdas.front() > 0.9);
    CHECK(spec.lambdas.front() < 1.0 + 1e-10);
    CHECK(spec.lambdas.back() > -1e-10);

    // h-orthonormal, and zero off the time window.
    const double h = g.spacing();
    const std::size_t i0 = g.interior_begin();
    for (std::size_t a = 0; a < m; ++a) {
        const double* fa = spec.phis.row_ptr(a);
        for (std::size_t i = 0; i < i0; ++i) CHECK(fa[i] == 0.0);
        for (std::size_t i = i0 + m; i < g.grid_points; ++i) CHECK(fa[i] == 0.0);
        for (std::size_t b = a; b < m; ++b) {
            double s = 0.0;
            const double* fb = spec.phis.row_ptr(b);
            for (std::size_t i = 0; i < g.grid_points; ++i) s += fa[i] * fb[i];
            CHECK(std::abs(h * s - (a == b ? 1.0 : 0.0)) < 1e-10);
        }
    }

    // Sign convention: first nonzero component positive.
    for (std::size_t k = 0; k < m; ++k) {
        const double* f = spec.phis.row_ptr(k);
        std::size_t i = 0;
        while (i < g.grid_points && f[i] == 0.0) ++i;
        REQUIRE(i < g.grid_points);
        CHECK(f[i] > 0.0);
    }

    // phi(k) round-trips row and weight.
    const GridFunction f0 = spec.phi(0);
    CHECK(f0.weight == h);
    CHECK(f0.norm_sq() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(spec.phi(m), validation_error);
}

TEST_CASE("spectrum eigenpairs satisfy the matrix equation") {
    const Geometry g = Geometry::make(0.5, std::numbers::pi, 2.0, 1.0, 129);
    const Spectrum spec = compute_spectrum(g);
    const Matrix conc = build_concentration_matrix(g);
    const std::size_t i0 = g.interior_begin();
    const std::size_t m = conc.rows;
    for (std::size_t k : {std::size_t(0), std::size_t(3), m - 1}) {
        std::vector<double> v(spec.phis.row_ptr(k) + i0, spec.phis.row_ptr(k) + i0 + m);
        const std::vector<double> cv = multiply(conc, v);
        double worst = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            worst = std::max(worst, std::abs(cv[i] - spec.lambdas[k] * v[i]));
        CHECK(worst < 1e-9);
    }
}

TEST_CASE("repeated spectra are bitwise identical") {
    const Geometry g = Geometry::make(0.5, std::numbers::pi, 2.0, 1.0, 129);
    const Spectrum a = compute_spectrum(g);
    const Spectrum b = compute_spectrum(g);
    CHECK(std::memcmp(a.lambdas.data(), b.lambdas.data(),
                      a.lambdas.size() * sizeof(double)) == 0);
    CHECK(std::memcmp(a.phis.data.data(), b.phis.data.data(),
                      a.phis.data.size() * sizeof(double)) == 0);
}

TEST_CASE("eigenvalue sum matches the matrix trace") {
    const Geometry g = Geometry::make(0.5, std::numbers::pi, 2.0, 1.0, 129);
    const Spectrum spec = compute_spectrum(g);
    const double trace =
        double(g.interior_count()) * g.spacing() * g.omega_half / std::numbers::pi;
    double sum = 0.0;
    for (double l : spec.lambdas) sum += l;
    CHECK(std::abs(sum - trace) < 1e-9);
}

TEST_CASE("eigenvalue sum approximates the time-bandwidth area at r = 1") {
    // margin 1.1 keeps the window edge strictly between grid points; at
    // margin 1 the edge +-0.5 lands on the grid and the count is inflated.
    const Geometry g = Geometry::make(0.5, std::numbers::pi, 1.0, 1.1, 1024);
    REQUIRE(g.interior_count() == 320);
    const Spectrum spec = compute_spectrum(g);
    double sum = 0.0;
    for (double l : spec.lambdas) sum += l;
    CHECK(std::abs(sum - 1.0) <= 1e-3);
}

TEST_CASE("leading eigenvalue at bandwidth parameter pi/2") {
    const Geometry g = Geometry::make(0.5, std::numbers::pi, 1.0, 1.0, 4096);
    REQUIRE(g.interior_count() == 1366);
    const Spectrum spec = compute_spectrum(g);
    CHECK(std::abs(spec.lambdas[0] - 0.783694651675) < 1e-6);
}

TEST_CASE("count_above argument checks and monotonicity") {
    const Geometry g = Geometry::make(0.5, std::numbers::pi, 2.0, 1.0, 129);
    const Spectrum spec = compute_spectrum(g);
    CHECK_THROWS_AS(count_above(spec, 0.0), validation_error);
    CHECK_THROWS_AS(count_above(spec, 1.0), validation_error);
    CHECK_THROWS_AS(count_above(spec, -0.5), validation_error);
    std::size_t prev = count_above(spec, 1e-6);
    for (double gamma : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        const std::size_t c = count_above(spec, gamma);
        CHECK(c <= prev);
        prev = c;
    }
    CHECK(count_above(spec, 0.5) >= 1);
}

TEST_CASE("plunge width grows slower than r") {
    // Width of {delta < lambda < 1-delta} roughly doubles in absolute terms
    // is false: relative to r it must shrink by about half from r=16 to r=32.
    const double delta = 0.01;
    auto plunge = [&](double r) {
        const Geometry g = Geometry::with_points_per_unit(0.5, std::numbers::pi, r, 1.0, 32.0);
        const Spectrum spec = compute_spectrum(g);
        return double(count_above(spec, delta) - count_above(spec, 1.0 - delta)) / r;
    };
    const double w16 = plunge(16.0);
    const double w32 = plunge(32.0);
    const double ratio = w32 / w16;
    CHECK(ratio >= 0.25);
    CHECK(ratio <= 1.0);
}

TEST_CASE("second spectral moment never exceeds the first") {
    for (double r : {8.0, 16.0}) {
        const Geometry g = Geometry::with_points_per_unit(0.5, std::numbers::pi, r, 1.0, 32.0);
        const Spectrum spec = compute_spectrum(g);
        double s1 = 0.0, s2 = 0.0;
        for (double l : spec.lambdas) {
            s1 += l;
            s2 += l * l;
        }
        CHECK(s2 <= s1);
        // The gap s1 - s2 is the plunge mass; per unit r it shrinks with r.
        CHECK((s1 - s2) / r < 0.5);
    }
}
