#include "ppsf/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "ppsf/errors.hpp"

namespace ppsf {

using nlohmann::json;

RunConfig RunConfig::defaults() {
    RunConfig cfg;
    cfg.geometry.omega_half = std::numbers::pi;
    return cfg;
}

double RunConfig::resolved_sigma() const {
    if (budget.sigma) return *budget.sigma;
    return std::sqrt(budget.epsilon / 10.0);
}

std::filesystem::path RunConfig::resolved_out_dir() const {
    if (!output.directory.empty()) return output.directory;
    if (const char* env = std::getenv("PPSF_OUT_DIR"); env && *env) return env;
    return "out";
}

void RunConfig::validate() const {
    std::ostringstream problems;
    auto complain = [&](const std::string& field, const std::string& what) {
        if (problems.tellp() > 0) problems << "; ";
        problems << field << ": " << what;
    };

    if (!(geometry.t_half > 0.0) || !std::isfinite(geometry.t_half))
        complain("geometry.t_half", "must be a positive finite real");
    if (!(geometry.omega_half > 0.0) || !std::isfinite(geometry.omega_half))
        complain("geometry.omega_half", "must be a positive finite real");
    if (!std::isfinite(geometry.margin) || !(geometry.margin >= geometry.t_half))
        complain("geometry.margin", "must be >= t_half");
    if (!(geometry.points_per_unit > 0.0) || !std::isfinite(geometry.points_per_unit))
        complain("geometry.points_per_unit", "must be a positive finite real");

    if (!(budget.epsilon > 0.0) || !(budget.epsilon < 1.0))
        complain("budget.epsilon", "must lie in (0,1)");
    if (budget.sigma) {
        if (!(*budget.sigma > 0.0) || !std::isfinite(*budget.sigma))
            complain("budget.sigma", "must be a positive finite real or \"auto\"");
        else if (budget.epsilon > 0.0 && *budget.sigma * *budget.sigma > budget.epsilon)
            complain("budget.sigma", "sigma^2 must not exceed epsilon");
    }

    if (sweep.r_list.empty())
        complain("sweep.r_list", "must not be empty");
    for (std::size_t i = 0; i < sweep.r_list.size(); ++i) {
        if (!(sweep.r_list[i] > 0.0) || !std::isfinite(sweep.r_list[i])) {
            complain("sweep.r_list", "entries must be positive finite reals");
            break;
        }
    }
    for (std::size_t i = 1; i < sweep.r_list.size(); ++i) {
        if (!(sweep.r_list[i] > sweep.r_list[i - 1])) {
            complain("sweep.r_list", "must be strictly increasing");
            break;
        }
    }

    if (output.csv_precision < 1 || output.csv_precision > 17)
        complain("output.csv_precision", "must lie in [1, 17]");

    if (problems.tellp() > 0) throw validation_error(problems.str());
}

namespace {

void reject_unknown_keys(const json& node, std::initializer_list<const char*> known,
                         const std::string& prefix) {
    for (const auto& [key, _] : node.items()) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok) throw validation_error(prefix + key + ": unknown key");
    }
}

} // namespace

RunConfig parse_config_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw validation_error(std::string("config: not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw validation_error("config: top level must be an object");
    reject_unknown_keys(root, {"geometry", "budget", "sweep", "output"}, "config.");

    RunConfig cfg = RunConfig::defaults();
    try {
        if (root.contains("geometry")) {
            const json& g = root["geometry"];
            reject_unknown_keys(g, {"t_half", "omega_half", "margin", "points_per_unit"},
                                "config.geometry.");
            cfg.geometry.t_half = g.value("t_half", cfg.geometry.t_half);
            cfg.geometry.omega_half = g.value("omega_half", cfg.geometry.omega_half);
            cfg.geometry.points_per_unit =
                g.value("points_per_unit", cfg.geometry.points_per_unit);
            if (g.contains("margin"))
                cfg.geometry.margin = g["margin"].get<double>();
            else
                cfg.geometry.margin = std::max(cfg.geometry.t_half, 1.0);
        }
        if (root.contains("budget")) {
            const json& b = root["budget"];
            reject_unknown_keys(b, {"epsilon", "sigma"}, "config.budget.");
            cfg.budget.epsilon = b.value("epsilon", cfg.budget.epsilon);
            if (b.contains("sigma")) {
                if (b["sigma"].is_string()) {
                    if (b["sigma"].get<std::string>() != "auto")
                        throw validation_error(
                            "config.budget.sigma: must be a number or \"auto\"");
                    cfg.budget.sigma.reset();
                } else {
                    cfg.budget.sigma = b["sigma"].get<double>();
                }
            }
        }
        if (root.contains("sweep")) {
            const json& s = root["sweep"];
            reject_unknown_keys(s, {"r_list"}, "config.sweep.");
            if (s.contains("r_list"))
                cfg.sweep.r_list = s["r_list"].get<std::vector<double>>();
        }
        if (root.contains("output")) {
            const json& o = root["output"];
            reject_unknown_keys(o, {"directory", "emit_plots", "csv_precision"},
                                "config.output.");
            cfg.output.directory = o.value("directory", cfg.output.directory);
            cfg.output.emit_plots = o.value("emit_plots", cfg.output.emit_plots);
            cfg.output.csv_precision = o.value("csv_precision", cfg.output.csv_precision);
        }
    } catch (const json::exception& e) {
        throw validation_error(std::string("config: type error: ") + e.what());
    }
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot read config file: " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config_text(text.str());
}

std::string serialize_config(const RunConfig& cfg) {
    json root;
    root["geometry"] = {{"t_half", cfg.geometry.t_half},
                        {"omega_half", cfg.geometry.omega_half},
                        {"margin", cfg.geometry.margin},
                        {"points_per_unit", cfg.geometry.points_per_unit}};
    if (cfg.budget.sigma)
        root["budget"] = {{"epsilon", cfg.budget.epsilon}, {"sigma", *cfg.budget.sigma}};
    else
        root["budget"] = {{"epsilon", cfg.budget.epsilon}, {"sigma", "auto"}};
    root["sweep"] = {{"r_list", cfg.sweep.r_list}};
    root["output"] = {{"directory", cfg.output.directory},
                      {"emit_plots", cfg.output.emit_plots},
                      {"csv_precision", cfg.output.csv_precision}};
    return root.dump(2) + "\n";
}

} // namespace ppsf
