#include "ppsf/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ppsf/csv.hpp"
#include "ppsf/errors.hpp"
#include "ppsf/pseudoprolate.hpp"
#include "ppsf/slepian.hpp"
#include "ppsf/spectrum.hpp"
#include "ppsf/svg.hpp"
#include "ppsf/sweep.hpp"
#include "ppsf/verify.hpp"

namespace fs = std::filesystem;

namespace ppsf {

namespace {

std::string format_r(double r) { return format_number(r, 12); }

Geometry geometry_at(const RunConfig& cfg, double r) {
    return Geometry::with_points_per_unit(cfg.geometry.t_half, cfg.geometry.omega_half, r,
                                          cfg.geometry.margin,
                                          cfg.geometry.points_per_unit);
}

fs::path prepare_out_dir(const RunConfig& cfg, const std::string& override_dir) {
    fs::path dir = override_dir.empty() ? cfg.resolved_out_dir() : fs::path(override_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw io_error("cannot create output directory: " + dir.string());
    return dir;
}

struct SharedFlags {
    std::string config_path;
    std::string out_dir;
    std::string sigma_text;
    std::optional<double> epsilon;
    std::vector<double> r_list;
    bool plots = false;
    std::size_t j_max = 9;
};

RunConfig resolve_config(const SharedFlags& flags) {
    RunConfig cfg =
        flags.config_path.empty() ? RunConfig::defaults() : load_config(flags.config_path);
    if (flags.epsilon) cfg.budget.epsilon = *flags.epsilon;
    if (!flags.sigma_text.empty()) {
        if (flags.sigma_text == "auto") {
            cfg.budget.sigma.reset();
        } else {
            try {
                std::size_t used = 0;
                cfg.budget.sigma = std::stod(flags.sigma_text, &used);
                if (used != flags.sigma_text.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw validation_error("budget.sigma: must be a number or \"auto\"");
            }
        }
    }
    if (!flags.r_list.empty()) cfg.sweep.r_list = flags.r_list;
    if (!flags.out_dir.empty()) cfg.output.directory = flags.out_dir;
    if (flags.plots) cfg.output.emit_plots = true;
    cfg.validate();
    return cfg;
}

} // namespace

void cmd_eig(const RunConfig& cfg, const fs::path& out_dir) {
    const int prec = cfg.output.csv_precision;
    for (double r : cfg.sweep.r_list) {
        const Geometry geom = geometry_at(cfg, r);
        const Spectrum spec = compute_spectrum(geom);
        const fs::path file = out_dir / ("spectrum_r" + format_r(r) + ".csv");
        CsvWriter csv(file, "k,lambda");
        for (std::size_t k = 0; k < spec.size(); ++k)
            csv.line(std::to_string(k) + "," + format_number(spec.lambdas[k], prec));
        double sum = 0.0;
        for (double l : spec.lambdas) sum += l;
        std::cout << file.string() << ": " << spec.size() << " eigenvalues, sum "
                  << format_number(sum, 6) << " (expected near "
                  << format_number(r * geom.nyquist_density(), 6) << ")\n";
    }
}

void cmd_construct(const RunConfig& cfg, const fs::path& out_dir) {
    const int prec = cfg.output.csv_precision;
    const BudgetSplit budget = BudgetSplit::make(cfg.budget.epsilon, cfg.resolved_sigma());
    const double largest_r = cfg.sweep.r_list.back();
    bool violated = false;

    for (double r : cfg.sweep.r_list) {
        const Geometry geom = geometry_at(cfg, r);
        const Spectrum spec = compute_spectrum(geom);
        const PseudoProlateSet set = construct(spec, geom, budget, false);
        const double bound = set.bound();

        const fs::path file = out_dir / ("pseudoprolates_r" + format_r(r) + ".csv");
        CsvWriter csv(file, "j,rho_norm_sq,residual_sq,bound");
        for (std::size_t j = 0; j < set.count(); ++j) {
            csv.line(std::to_string(j) + "," + format_number(set.rho_norms_sq[j], prec) +
                     "," + format_number(set.residuals[j], prec) + "," +
                     format_number(bound, prec));
            if (set.residuals[j] > bound + kDiscTol) violated = true;
        }
        std::cout << file.string() << ": n=" << set.n << " m=" << set.m << " bound "
                  << format_number(bound, 6) << " max residual "
                  << format_number(
                         *std::max_element(set.residuals.begin(), set.residuals.end()), 6)
                  << "\n";

        if (cfg.output.emit_plots && r == largest_r) {
            for (std::size_t j = 0; j < set.count(); ++j) {
                CsvWriter phi(out_dir / ("phi_" + std::to_string(j) + ".csv"), "x,phi");
                for (std::size_t i = 0; i < geom.grid_points; ++i)
                    phi.line(format_number(geom.x(i), prec) + "," +
                             format_number(set.functions(j, i), prec));
            }
        }
    }
    if (violated)
        throw numeric_error(
            "construct: a residual exceeded its bound + disc_tol; outputs were written, "
            "increase points_per_unit");
}

void cmd_sweep(const RunConfig& cfg, const fs::path& out_dir) {
    const int prec = cfg.output.csv_precision;
    const Geometry tmpl = geometry_at(cfg, 1.0);
    const std::vector<SweepRecord> records =
        run_sweep(tmpl, cfg.sweep.r_list, cfg.budget.epsilon, cfg.resolved_sigma());

    const fs::path file = out_dir / "sweep.csv";
    CsvWriter csv(file,
                  "r,epsilon,sigma,gamma,n,m,count,lp_count,slope,target,lp_slope,"
                  "lp_target,max_residual,valid");
    for (const auto& rec : records) {
        std::ostringstream line;
        line << format_number(rec.r, prec) << ',' << format_number(rec.epsilon, prec)
             << ',' << format_number(rec.sigma, prec) << ','
             << format_number(rec.gamma, prec) << ',' << rec.n << ',' << rec.m << ','
             << rec.count << ',' << rec.lp_count << ',' << format_number(rec.slope, prec)
             << ',' << format_number(rec.target, prec) << ','
             << format_number(rec.lp_slope(), prec) << ','
             << format_number(rec.lp_target, prec) << ','
             << format_number(rec.max_residual, prec) << ',' << (rec.valid ? 1 : 0);
        csv.line(line.str());
        if (!rec.note.empty())
            std::cerr << "sweep r=" << format_r(rec.r) << ": " << rec.note << "\n";
    }
    std::cout << file.string() << ": " << records.size() << " rows\n";

    const SandwichReport report = sandwich_check(records);
    std::cout << "sandwich at r=" << format_r(report.r) << ": slope "
              << format_number(report.slope, 6) << " in [" << format_number(report.band_lo, 6)
              << ", " << format_number(report.band_hi, 6) << "] "
              << (report.ok() ? "PASS" : "FAIL") << " (sharp target "
              << format_number(report.sharp, 6) << ")\n";

    if (cfg.output.emit_plots) {
        write_sweep_svg(out_dir / "sweep.svg", records);
        std::cout << (out_dir / "sweep.svg").string() << ": written\n";
    }
}

void cmd_verify(const RunConfig& cfg) {
    (void)cfg;   // the suite runs pinned calibration geometries; read-only
    const std::vector<VerifyResult> results = run_verify_suite();
    std::size_t width = 0;
    for (const auto& res : results) width = std::max(width, res.name.size());
    const VerifyResult* first_fail = nullptr;
    for (const auto& res : results) {
        std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << res.name
                  << std::string(width - res.name.size() + 2, ' ') << res.detail << "\n";
        if (!res.pass && !first_fail) first_fail = &res;
    }
    if (first_fail)
        throw numeric_error("verify: failing suite: " + first_fail->name + " (" +
                            first_fail->detail + ")");
    std::cout << "verify: all " << results.size() << " suites passed\n";
}

void cmd_slepian(const RunConfig& cfg, const fs::path& out_dir, std::size_t j_max) {
    const int prec = cfg.output.csv_precision;
    const double r = cfg.sweep.r_list.back();
    const Geometry geom = geometry_at(cfg, r);
    const Spectrum spec = compute_spectrum(geom);
    const std::size_t top = std::min<std::size_t>(j_max, spec.size() - 1);
    const SlepianSequence seq = slepian_g(spec, geom, cfg.budget.epsilon, top);

    const fs::path excluded_file = out_dir / "slepian_excluded.csv";
    CsvWriter excluded(excluded_file, "j,lambda");
    for (std::size_t j : seq.excluded)
        excluded.line(std::to_string(j) + "," + format_number(spec.lambdas[j], prec));

    if (seq.indices.empty())
        throw numeric_error(
            "slepian: every index up to j_max has an eigenvalue within 1e-12 of 0 or 1; "
            "raise j_max (excluded list written)");

    std::ostringstream header;
    header << "x";
    for (std::size_t j : seq.indices) header << ",g" << j;
    const fs::path file = out_dir / "slepian_g.csv";
    CsvWriter csv(file, header.str());
    for (std::size_t i = 0; i < geom.grid_points; ++i) {
        std::ostringstream line;
        line << format_number(geom.x(i), prec);
        for (std::size_t row = 0; row < seq.indices.size(); ++row)
            line << ',' << format_number(seq.functions(row, i), prec);
        csv.line(line.str());
    }
    std::cout << file.string() << ": " << seq.indices.size() << " sequences at r="
              << format_r(r) << ", " << seq.excluded.size() << " excluded\n";
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"pseudo prolate spheroidal function toolbox"};
    app.require_subcommand(1);

    SharedFlags flags;
    const auto add_shared = [&](CLI::App* cmd, bool with_jmax = false) {
        cmd->add_option("--config", flags.config_path, "JSON config file");
        cmd->add_option("--epsilon", flags.epsilon, "energy budget in (0,1)");
        cmd->add_option("--sigma", flags.sigma_text, "threshold parameter, or \"auto\"");
        cmd->add_option("--r", flags.r_list, "dilation list override")->delimiter(',');
        cmd->add_option("--out", flags.out_dir, "output directory");
        cmd->add_flag("--plots", flags.plots, "emit SVG/plot artifacts");
        if (with_jmax)
            cmd->add_option("--j-max", flags.j_max, "highest sequence index (default 9)");
        return cmd;
    };

    CLI::App* eig = add_shared(app.add_subcommand("eig", "write spectrum_r{r}.csv"));
    CLI::App* construct_cmd = add_shared(
        app.add_subcommand("construct", "write pseudoprolates_r{r}.csv"));
    CLI::App* sweep_cmd = add_shared(app.add_subcommand("sweep", "write sweep.csv"));
    CLI::App* verify_cmd = add_shared(app.add_subcommand("verify", "run the invariant suite"));
    CLI::App* slepian_cmd =
        add_shared(app.add_subcommand("slepian", "write slepian_g.csv"), true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        const RunConfig cfg = resolve_config(flags);
        if (verify_cmd->parsed()) {
            cmd_verify(cfg);
            return 0;
        }
        const fs::path out_dir = prepare_out_dir(cfg, flags.out_dir);
        if (eig->parsed()) cmd_eig(cfg, out_dir);
        if (construct_cmd->parsed()) cmd_construct(cfg, out_dir);
        if (sweep_cmd->parsed()) cmd_sweep(cfg, out_dir);
        if (slepian_cmd->parsed()) cmd_slepian(cfg, out_dir, flags.j_max);
        return 0;
    } catch (const validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const numeric_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace ppsf
