#include "ppsf/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ppsf/errors.hpp"
#include "ppsf/pseudoprolate.hpp"
#include "ppsf/spectrum.hpp"

namespace ppsf {

double sharp_slope(double epsilon, double density) { return density / (1.0 - epsilon); }

double lower_bound_slope(double epsilon, double density) {
    return (1.0 + epsilon) * density;
}

double upper_bound_slope(double epsilon, double density) {
    if (epsilon >= 0.5) return std::numeric_limits<double>::infinity();
    return density / (1.0 - 2.0 * epsilon);
}

std::vector<SweepRecord> run_sweep(const Geometry& geom_template,
                                   const std::vector<double>& r_list, double epsilon,
                                   double sigma) {
    if (r_list.size() < 2)
        throw validation_error("sweep.r_list: need at least two dilations");
    for (std::size_t i = 1; i < r_list.size(); ++i)
        if (!(r_list[i] > r_list[i - 1]))
            throw validation_error("sweep.r_list: must be strictly increasing");

    const BudgetSplit budget = BudgetSplit::make(epsilon, sigma);
    const double density = geom_template.nyquist_density();
    const double points_per_unit =
        double(geom_template.grid_points - 1) / (2.0 * geom_template.window());

    std::vector<SweepRecord> records;
    records.reserve(r_list.size());
    for (double r : r_list) {
        SweepRecord rec;
        rec.r = r;
        rec.epsilon = epsilon;
        rec.sigma = sigma;
        rec.gamma = budget.gamma;
        rec.target = sharp_slope(epsilon, density);
        rec.lp_target = density;
        try {
            const Geometry geom = Geometry::with_points_per_unit(
                geom_template.t_half, geom_template.omega_half, r, geom_template.margin,
                points_per_unit);
            rec.grid_points = geom.grid_points;
            const Spectrum spec = compute_spectrum(geom);
            const PseudoProlateSet set = construct(spec, geom, budget, false);
            rec.n = set.n;
            rec.m = set.m;
            rec.count = set.count();
            rec.lp_count = count_above(spec, 0.5);
            rec.slope = double(rec.count) / r;
            rec.max_residual =
                *std::max_element(set.residuals.begin(), set.residuals.end());
            rec.valid = rec.max_residual <= epsilon + kDiscTol;
            if (!rec.valid) rec.note = "residual bound violated";
        } catch (const std::exception& e) {
            rec.valid = false;
            rec.note = e.what();
        }
        records.push_back(std::move(rec));
    }
    return records;
}

SandwichReport sandwich_check(const std::vector<SweepRecord>& records) {
    const SweepRecord* best = nullptr;
    for (const auto& rec : records)
        if (rec.valid && (!best || rec.r > best->r)) best = &rec;
    if (!best) throw numeric_error("sandwich_check: no valid sweep record");

    SandwichReport report;
    report.r = best->r;
    report.slope = best->slope;
    const double density = best->lp_target;
    const double band = 0.1 * density;
    report.lower = lower_bound_slope(best->epsilon, density);
    report.upper = upper_bound_slope(best->epsilon, density);
    report.sharp = sharp_slope(best->epsilon, density);
    report.band_lo = report.lower - band;
    report.band_hi = report.upper + band;
    report.pass_lower = report.slope >= report.band_lo;
    report.pass_upper = report.slope <= report.band_hi;
    return report;
}

} // namespace ppsf
