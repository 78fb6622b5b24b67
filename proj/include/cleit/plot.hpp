#pragma once

#include <string>

#include "cleit/csv.hpp"

namespace cleit {

// Renders a CSV table (first column = abscissa, remaining columns =
// curves) as a static SVG line plot. Throws IoError / ConfigError on
// unreadable or malformed input (an empty table is malformed).
std::string render_plot_svg(const CsvTable& table);

void emit_plot(const std::string& csv_path, const std::string& image_path);

}  // namespace cleit
