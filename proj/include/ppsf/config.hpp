#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ppsf {

/// Structured run configuration. Defaults give the standard experiment:
/// t_half 0.5, omega_half pi, epsilon 0.2, sigma auto (sigma^2 = epsilon/10),
/// r_list {8,16,32,64}, 32 grid points per unit, csv_precision 12 significant
/// digits. margin defaults to max(t_half, 1).
struct RunConfig {
    struct GeometryBlock {
        double t_half = 0.5;
        double omega_half = 0.0;   // pi, set by defaults()
        double margin = 1.0;
        double points_per_unit = 32.0;
        bool operator==(const GeometryBlock&) const = default;
    } geometry;

    struct BudgetBlock {
        double epsilon = 0.2;
        std::optional<double> sigma;   // nullopt = "auto"
        bool operator==(const BudgetBlock&) const = default;
    } budget;

    struct SweepBlock {
        std::vector<double> r_list{8.0, 16.0, 32.0, 64.0};
        bool operator==(const SweepBlock&) const = default;
    } sweep;

    struct OutputBlock {
        std::string directory;   // empty = fall back to PPSF_OUT_DIR, then ./out
        bool emit_plots = false;
        int csv_precision = 12;
        bool operator==(const OutputBlock&) const = default;
    } output;

    bool operator==(const RunConfig&) const = default;

    double resolved_sigma() const;
    /// Output directory after the fallback chain: config value, PPSF_OUT_DIR,
    /// "./out".
    std::filesystem::path resolved_out_dir() const;

    /// Collects every validation problem (field paths included) and throws
    /// one validation_error listing all of them; no first-failure-only.
    void validate() const;

    static RunConfig defaults();
};

/// Parse a JSON config file on top of the defaults. Unknown keys are
/// rejected. sigma accepts a number or the string "auto".
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config_text(const std::string& text);
std::string serialize_config(const RunConfig& cfg);

} // namespace ppsf
