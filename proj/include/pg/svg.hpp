#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pg/conic.hpp"
#include "pg/script.hpp"

namespace pg::script {

// What one emit statement draws, in binding order per class.
struct ChartScene {
    std::vector<std::pair<std::string, Point>> points;
    std::vector<std::pair<std::string, Line>> lines;
    std::vector<std::pair<std::string, Conic>> conics;
};

struct SvgResult {
    std::string body;
    // Names whose element coincides with the chart's line at infinity and
    // was therefore left out of the drawing.
    std::vector<std::string> at_infinity;
};

// Deterministic renderer: exact rational clipping, integer pixel
// coordinates, no floating point anywhere. Same scene, same bytes.
SvgResult render_svg(const ChartScene& scene, const EmitOptions& opts);

}  // namespace pg::script
