#pragma once

#include <string>
#include <vector>

namespace greenreg::cli {

struct Plot {
    std::vector<double> xs;
    std::vector<double> line;
    // Optional shaded band; both empty or both the size of xs.
    std::vector<double> band_lo;
    std::vector<double> band_hi;
    std::vector<double> marker_x;
    std::vector<double> marker_y;
};

inline constexpr int kSvgWidth = 800;
inline constexpr int kSvgHeight = 500;

/// Static SVG document whose viewBox is the data extent plus 5% margins.
/// The band polygon precedes the line in document order.
std::string render_svg(const Plot& plot);

}  // namespace greenreg::cli
