#pragma once

#include <optional>
#include <string>
#include <vector>

namespace beacon::report {

struct ChartSeries {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    bool dashed = false;
};

struct ChartSpec {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<ChartSeries> series;
    std::optional<double> y_clip;  // y values above this are drawn at the clip
    bool log_y = false;
};

// Standalone SVG line chart. Throws std::invalid_argument on mismatched
// series lengths or values that are not finite after clipping.
std::string render_svg(const ChartSpec& chart);

std::string xml_escape(const std::string& text);

}  // namespace beacon::report
