#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mdl {

// Numbers render with 12 significant digits so a written report parses
// back to the same values.
std::string format_double(double v);

struct csv_table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  std::string to_string() const;
};

csv_table csv_from_string(const std::string& text);

struct plot_series {
  std::string label;
  std::vector<double> xs, ys;
};

// Static line/scatter plot with axis labels; no interactive parts.
std::string render_svg_plot(const std::string& title,
                            const std::string& x_label,
                            const std::string& y_label,
                            const std::vector<plot_series>& series);

} // namespace mdl
