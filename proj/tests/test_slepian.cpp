#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <vector>

#include "ppsf/pseudoprolate.hpp"
#include "ppsf/slepian.hpp"
#include "ppsf/spectrum.hpp"

using namespace ppsf;

namespace {

const Geometry& geometry_at(double r) {
    static std::map<double, Geometry> cache;
    auto it = cache.find(r);
    if (it == cache.end())
        it = cache.emplace(r, Geometry::with_points_per_unit(0.5, std::numbers::pi, r,
                                                             1.0, 32.0)).first;
    return it->second;
}

const Spectrum& spectrum_at(double r) {
    static std::map<double, Spectrum> cache;
    auto it = cache.find(r);
    if (it == cache.end()) it = cache.emplace(r, compute_spectrum(geometry_at(r))).first;
    return it->second;
}

} // namespace

TEST_CASE("comparison sequence argument checks") {
    const Geometry& g = geometry_at(4.0);
    const Spectrum& spec = spectrum_at(4.0);
    CHECK_THROWS_AS(slepian_g(spec, g, 0.0, 3), validation_error);
    CHECK_THROWS_AS(slepian_g(spec, g, -0.1, 3), validation_error);
    CHECK_THROWS_AS(slepian_g(spec, g, 0.1, spec.size()), validation_error);
    const Geometry other = Geometry::with_points_per_unit(0.5, std::numbers::pi, 4.0, 1.0, 33.0);
    CHECK_THROWS_AS(slepian_g(spec, other, 0.1, 3), validation_error);
}

TEST_CASE("comparison sequence applies the two-region prefactors") {
    const Geometry& g = geometry_at(4.0);
    const Spectrum& spec = spectrum_at(4.0);
    const double eps = 0.1;
    const SlepianSequence seq = slepian_g(spec, g, eps, 7);
    REQUIRE(!seq.indices.empty());
    REQUIRE(seq.functions.rows == seq.indices.size());

    for (std::size_t row = 0; row < seq.indices.size(); ++row) {
        const std::size_t j = seq.indices[row];
        const double lambda = spec.lambdas[j];
        const double outside = std::sqrt(eps / (1.0 - lambda));
        const double inside = outside + std::sqrt(eps / (lambda * (1.0 - lambda)));
        const double* gv = seq.functions.row_ptr(row);
        const double* phi = spec.phis.row_ptr(j);
        for (std::size_t i = 0; i < g.grid_points; ++i) {
            const double want = (g.inside(i) ? inside : outside) * phi[i];
            CHECK(std::abs(gv[i] - want) <= 1e-13 * (1.0 + std::abs(want)));
            if (!g.inside(i)) CHECK(gv[i] == 0.0);  // eigenfunctions vanish there
        }
    }
}

TEST_CASE("comparison sequence scales as the square root of epsilon") {
    const Geometry& g = geometry_at(4.0);
    const Spectrum& spec = spectrum_at(4.0);
    const SlepianSequence a = slepian_g(spec, g, 0.1, 5);
    const SlepianSequence b = slepian_g(spec, g, 0.2, 5);
    REQUIRE(a.indices == b.indices);  // exclusion ignores epsilon
    const double root2 = std::sqrt(2.0);
    for (std::size_t i = 0; i < a.functions.data.size(); ++i) {
        const double want = root2 * a.functions.data[i];
        CHECK(std::abs(b.functions.data[i] - want) <= 1e-13 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("near-degenerate eigenvalues are excluded and reported") {
    // At r = 16 the top eigenvalues sit within 1e-12 of 1, so the formula's
    // prefactors are meaningless there and those indices must be set aside.
    const Geometry& g = geometry_at(16.0);
    const Spectrum& spec = spectrum_at(16.0);
    const SlepianSequence seq = slepian_g(spec, g, 0.1, 15);
    CHECK(!seq.excluded.empty());
    CHECK(!seq.indices.empty());
    CHECK(seq.indices.size() + seq.excluded.size() == 16);
    for (std::size_t j : seq.excluded) {
        const double lambda = spec.lambdas[j];
        CHECK((lambda <= 1e-12 || lambda >= 1.0 - 1e-12));
    }
    for (std::size_t j : seq.indices) {
        const double lambda = spec.lambdas[j];
        CHECK(lambda > 1e-12);
        CHECK(lambda < 1.0 - 1e-12);
    }
    CHECK(std::is_sorted(seq.indices.begin(), seq.indices.end()));
    CHECK(std::is_sorted(seq.excluded.begin(), seq.excluded.end()));
    CHECK(seq.source == &spec);
    CHECK(seq.epsilon == 0.1);
}

TEST_CASE("normalization flag rescales rows to unit weighted norm") {
    const Geometry& g = geometry_at(4.0);
    const Spectrum& spec = spectrum_at(4.0);
    const SlepianSequence seq = slepian_g(spec, g, 0.1, 5, true);
    const double h = g.spacing();
    for (std::size_t row = 0; row < seq.functions.rows; ++row) {
        double s = 0.0;
        const double* gv = seq.functions.row_ptr(row);
        for (std::size_t i = 0; i < g.grid_points; ++i) s += gv[i] * gv[i];
        CHECK(h * s == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("dimension slope argument checks") {
    std::vector<Spectrum> two = {spectrum_at(4.0), spectrum_at(8.0)};
    CHECK_THROWS_AS(slepian_dimension_slope(two, 0.1), validation_error);

    std::vector<Spectrum> unsorted = {spectrum_at(8.0), spectrum_at(4.0), spectrum_at(16.0)};
    CHECK_THROWS_AS(slepian_dimension_slope(unsorted, 0.1), validation_error);

    std::vector<Spectrum> three = {spectrum_at(4.0), spectrum_at(8.0), spectrum_at(16.0)};
    CHECK_THROWS_AS(slepian_dimension_slope(three, 0.0), validation_error);
    CHECK_THROWS_AS(slepian_dimension_slope(three, 1.0), validation_error);
}

TEST_CASE("dimension slope stays near the density across epsilon") {
    std::vector<Spectrum> family = {spectrum_at(8.0), spectrum_at(16.0), spectrum_at(32.0)};
    const double s005 = slepian_dimension_slope(family, 0.05);
    const double s01 = slepian_dimension_slope(family, 0.1);
    const double s02 = slepian_dimension_slope(family, 0.2);

    CHECK(s01 == doctest::Approx(117.0 / 112.0).epsilon(1e-9));
    for (double s : {s005, s01, s02}) {
        CHECK(s >= 0.85);
        CHECK(s <= 1.15);
    }
    // Epsilon only shifts the count by a few units, not the growth rate.
    CHECK(std::abs(s005 - s01) <= 0.1 * s01);
    CHECK(std::abs(s02 - s01) <= 0.1 * s01);
}

TEST_CASE("dimension slope times the budget factor tracks the constructed count") {
    std::vector<Spectrum> family = {spectrum_at(16.0), spectrum_at(32.0), spectrum_at(64.0)};
    const double eps = 0.2;
    const double dim_slope = slepian_dimension_slope(family, eps);

    const Spectrum& top = family.back();
    const BudgetSplit budget = BudgetSplit::make(eps, std::sqrt(eps / 10.0));
    const auto [fam_idx, n] = select_family(top, budget.sigma);
    const std::size_t count = n + choose_m(n, budget);
    const double constructed_slope = double(count) / top.geom.r;

    // The constructed family aims at (1-eps)^-1 times the dimension growth.
    CHECK(std::abs(constructed_slope * (1.0 - eps) - dim_slope) <= 0.1 * dim_slope);
}
