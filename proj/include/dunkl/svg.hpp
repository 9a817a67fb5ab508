#pragma once

#include <string>
#include <vector>

namespace dunkl {

struct PlotSeries {
  std::string label;
  std::vector<double> y;
};

// SVG 1.1 line plot of one or more series over shared abscissae. Numbers are
// printed in shortest round-trip form so the file is reproducible.
std::string svg_line_plot(const std::string& title, const std::vector<double>& x,
                          const std::vector<PlotSeries>& series);

struct HeatCell {
  double column = 0.0;  // e.g. the ball center
  double row = 0.0;     // e.g. the radius
  double value = 0.0;
};

// Rectangles on the distinct (column, row) values, shaded by value.
std::string svg_heat_table(const std::string& title, const std::string& column_label,
                           const std::string& row_label, const std::vector<HeatCell>& cells);

}  // namespace dunkl
