#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "greenreg/errors.hpp"

namespace greenreg::cli {

namespace {

struct Extent {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();

    void add(const std::vector<double>& values) {
        for (double v : values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }

    // Widens a degenerate extent so the viewBox keeps a positive size.
    void pad() {
        if (!(hi > lo)) {
            const double half = lo == 0.0 ? 0.5 : 0.5 * std::abs(lo);
            lo -= half;
            hi += half;
        }
        const double margin = 0.05 * (hi - lo);
        lo -= margin;
        hi += margin;
    }
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// y is negated because the drawing group flips the vertical axis.
std::string point(double x, double y) { return num(x) + "," + num(-y); }

}  // namespace

std::string render_svg(const Plot& plot) {
    if (plot.line.size() != plot.xs.size()) throw ValidationError("plot line size mismatch");
    const bool has_band = !plot.band_lo.empty();
    if (has_band &&
        (plot.band_lo.size() != plot.xs.size() || plot.band_hi.size() != plot.xs.size())) {
        throw ValidationError("plot band size mismatch");
    }
    if (plot.marker_x.size() != plot.marker_y.size()) {
        throw ValidationError("plot marker size mismatch");
    }

    Extent ex;
    Extent ey;
    ex.add(plot.xs);
    ex.add(plot.marker_x);
    ey.add(plot.line);
    ey.add(plot.band_lo);
    ey.add(plot.band_hi);
    ey.add(plot.marker_y);
    ex.pad();
    ey.pad();
    const double w = ex.hi - ex.lo;
    const double h = ey.hi - ey.lo;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSvgWidth << "\" height=\""
        << kSvgHeight << "\" viewBox=\"" << num(ex.lo) << ' ' << num(-ey.hi) << ' ' << num(w)
        << ' ' << num(h) << "\" preserveAspectRatio=\"none\">\n";
    svg << "<g transform=\"scale(1,-1)\">\n";

    if (has_band) {
        svg << "<polygon class=\"band\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"none\" "
               "points=\"";
        for (std::size_t i = 0; i < plot.xs.size(); ++i) {
            svg << point(plot.xs[i], plot.band_hi[i]) << ' ';
        }
        for (std::size_t i = plot.xs.size(); i-- > 0;) {
            svg << point(plot.xs[i], plot.band_lo[i]) << (i == 0 ? "" : " ");
        }
        svg << "\"/>\n";
    }

    svg << "<polyline class=\"line\" fill=\"none\" stroke=\"#08519c\" stroke-width=\"2\" "
           "vector-effect=\"non-scaling-stroke\" points=\"";
    for (std::size_t i = 0; i < plot.xs.size(); ++i) {
        svg << point(plot.xs[i], plot.line[i]) << (i + 1 == plot.xs.size() ? "" : " ");
    }
    svg << "\"/>\n";

    // Radii in data units chosen so the marker renders as a 4px circle.
    const double rx = 4.0 * w / kSvgWidth;
    const double ry = 4.0 * h / kSvgHeight;
    for (std::size_t i = 0; i < plot.marker_x.size(); ++i) {
        svg << "<ellipse class=\"marker\" fill=\"#d62728\" cx=\"" << num(plot.marker_x[i])
            << "\" cy=\"" << num(-plot.marker_y[i]) << "\" rx=\"" << num(rx) << "\" ry=\""
            << num(ry) << "\"/>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

}  // namespace greenreg::cli
