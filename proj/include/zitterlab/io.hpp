#pragma once

#include <string>
#include <vector>

#include "zitterlab/errors.hpp"
#include "zitterlab/grid.hpp"

namespace zitterlab::io {

// Locale-independent shortest-or-17-significant-digit formatting that
// round-trips doubles exactly; '.' decimal separator always.
std::string format_double(double v);

// One CSV line from pre-formatted cells.
std::string csv_line(const std::vector<std::string>& cells);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Hex digest of the git blob hash: sha1("blob <len>\0<content>").
std::string git_blob_sha1(const std::string& content);
std::string sha1_hex(const std::string& content);

// Self-contained line plot; throws EmptyData on an empty series.
std::string svg_line_plot(const ObservableSeries& series, const std::string& x_label,
                          const std::string& y_label);

// Grayscale heatmap of a row-major n x n matrix; throws EmptyData.
std::string svg_heatmap(const std::vector<double>& values, int n, double x0, double x1,
                        double y0, double y1, const std::string& axis_label);

}  // namespace zitterlab::io
