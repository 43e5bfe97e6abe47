#include "ppsf/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ppsf/errors.hpp"

namespace ppsf {

namespace {

constexpr double kWidth = 640.0, kHeight = 420.0;
constexpr double kLeft = 60.0, kRight = 20.0, kTop = 20.0, kBottom = 45.0;

std::string num(double v) {
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

} // namespace

void write_sweep_svg(const std::filesystem::path& path,
                     const std::vector<SweepRecord>& records) {
    std::vector<const SweepRecord*> valid;
    for (const auto& rec : records)
        if (rec.valid) valid.push_back(&rec);
    if (valid.empty()) throw numeric_error("write_sweep_svg: no valid sweep record");

    const double eps = valid.front()->epsilon;
    const double density = valid.front()->lp_target;
    const double sharp = sharp_slope(eps, density);
    const double lower = lower_bound_slope(eps, density);
    const double upper = upper_bound_slope(eps, density);

    double r_min = valid.front()->r, r_max = valid.back()->r;
    if (!(r_max > r_min)) r_max = r_min + 1.0;   // single-point chart still renders
    double y_min = density, y_max = density;
    for (const auto* rec : valid) {
        y_min = std::min({y_min, rec->slope, rec->lp_slope()});
        y_max = std::max({y_max, rec->slope, rec->lp_slope()});
    }
    y_min = std::min({y_min, lower, sharp});
    y_max = std::max({y_max, lower, sharp});
    if (std::isfinite(upper)) y_max = std::max(y_max, upper);
    const double pad = 0.08 * (y_max - y_min + 1e-12);
    y_min -= pad;
    y_max += pad;

    const auto px = [&](double r) {
        return kLeft + (r - r_min) / (r_max - r_min) * (kWidth - kLeft - kRight);
    };
    const auto py = [&](double y) {
        return kHeight - kBottom - (y - y_min) / (y_max - y_min) * (kHeight - kTop - kBottom);
    };

    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open for writing: " + path.string());
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
        << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const auto hline = [&](double y, const char* color, const char* dash,
                           const std::string& label) {
        if (!std::isfinite(y)) return;
        out << "<line x1=\"" << num(px(r_min)) << "\" y1=\"" << num(py(y)) << "\" x2=\""
            << num(px(r_max)) << "\" y2=\"" << num(py(y)) << "\" stroke=\"" << color
            << "\" stroke-dasharray=\"" << dash << "\"/>\n"
            << "<text x=\"" << num(px(r_max) - 4) << "\" y=\"" << num(py(y) - 4)
            << "\" font-size=\"11\" text-anchor=\"end\" fill=\"" << color << "\">" << label
            << "</text>\n";
    };
    hline(density, "#888888", "2,3", "density " + num(density));
    hline(sharp, "#2a7d2a", "6,3", "sharp " + num(sharp));
    hline(lower, "#b06000", "2,5", "lower " + num(lower));
    hline(upper, "#b06000", "2,5", "upper " + num(upper));

    const auto polyline = [&](const char* color, bool lp) {
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (const auto* rec : valid)
            out << num(px(rec->r)) << ',' << num(py(lp ? rec->lp_slope() : rec->slope))
                << ' ';
        out << "\"/>\n";
        for (const auto* rec : valid)
            out << "<circle cx=\"" << num(px(rec->r)) << "\" cy=\""
                << num(py(lp ? rec->lp_slope() : rec->slope)) << "\" r=\"3\" fill=\""
                << color << "\"/>\n";
    };
    polyline("#1f4e9c", false);
    polyline("#9c1f1f", true);

    // Axes and tick labels.
    out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
        << "\" y2=\"" << kHeight - kBottom << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
        << kWidth - kRight << "\" y2=\"" << kHeight - kBottom << "\" stroke=\"black\"/>\n";
    for (const auto* rec : valid)
        out << "<text x=\"" << num(px(rec->r)) << "\" y=\"" << kHeight - kBottom + 16
            << "\" font-size=\"11\" text-anchor=\"middle\">" << num(rec->r) << "</text>\n";
    out << "<text x=\"" << (kLeft + kWidth - kRight) / 2 << "\" y=\"" << kHeight - 10
        << "\" font-size=\"12\" text-anchor=\"middle\">dilation r</text>\n"
        << "<text x=\"14\" y=\"" << (kTop + kHeight - kBottom) / 2
        << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 14 "
        << (kTop + kHeight - kBottom) / 2 << ")\">count / r (blue: pseudo, red: level-1/2)"
        << "</text>\n</svg>\n";
    if (!out) throw io_error("write failed: " + path.string());
}

} // namespace ppsf
